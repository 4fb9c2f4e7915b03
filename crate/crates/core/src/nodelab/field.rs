//! Exact arithmetic in `F_(p^k)`: a prime field together with a verified
//! irreducible modulus. Elements are coefficient vectors over the prime
//! field, reduced mod `p` and mod the modulus.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::fppoly::{self, FpPoly};
use super::scalar::{addm, invm, is_prime, mulm, negm, subm, uniform_below};
use super::NodeLabError;

/// Largest supported prime. Keeping `p` below `2^31` lets extension-field
/// products accumulate lazily in `u128` without overflow.
pub const MAX_PRIME: u64 = 1 << 31;

/// Cap on constructible extension degrees.
pub const EXTENSION_CAP: usize = 3000;

/// An element of `F_(p^k)`: `k` reduced coefficients, little-endian in the
/// power basis of the modulus root.
#[derive(Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem {
    pub coeffs: Vec<u64>,
}

impl Clone for ExtElem {
    fn clone(&self) -> Self {
        ExtElem {
            coeffs: self.coeffs.clone(),
        }
    }

    // reuse the existing buffer; the spark scan clones rows millions of times
    fn clone_from(&mut self, source: &Self) {
        self.coeffs.clone_from(&source.coeffs);
    }
}

impl ExtElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The field `F_(p^k)` with its modulus. Immutable after construction; all
/// element operations take `&self`.
#[derive(Debug, Clone)]
pub struct FieldContext {
    p: u64,
    k: usize,
    /// Monic irreducible of degree `k`; the placeholder `y` when `k = 1`.
    modulus: FpPoly,
    /// `y^(k+s) mod modulus` for `s = 0..k-1`, for lazy reduction.
    red: Vec<Vec<u64>>,
}

impl FieldContext {
    /// Build `F_(p^k)`, searching for a modulus when `k > 1`. The search is
    /// seeded from `(p, k)`, so identical arguments produce the identical
    /// field, and each candidate is tested with the `x^(p^i) - x` gcd ladder.
    pub fn new(p: u64, k: usize) -> Result<FieldContext, NodeLabError> {
        if !is_prime(p) || p == 2 {
            return Err(NodeLabError::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(NodeLabError::PrimeTooLarge(p));
        }
        if k == 0 {
            return Err(NodeLabError::ZeroExtensionDegree);
        }
        if k > EXTENSION_CAP {
            return Err(NodeLabError::ExtensionCap {
                needed: k,
                cap: EXTENSION_CAP,
            });
        }
        if k == 1 {
            return Ok(FieldContext::with_modulus(p, vec![0, 1]));
        }
        let budget = 64 * k;
        let mut rng = ChaCha20Rng::seed_from_u64(
            0x6e6f64656c6162u64 ^ p.rotate_left(17) ^ (k as u64).rotate_left(41),
        );
        for _ in 0..budget {
            let mut cand: FpPoly = (0..k).map(|_| uniform_below(&mut rng, p)).collect();
            cand.push(1);
            if fppoly::is_irreducible(&cand, p) {
                return Ok(FieldContext::with_modulus(p, cand));
            }
        }
        Err(NodeLabError::ModulusSearch {
            p,
            degree: k,
            attempts: budget,
        })
    }

    /// Wrap a modulus already known to be monic irreducible of degree >= 1.
    pub(crate) fn with_modulus(p: u64, modulus: FpPoly) -> FieldContext {
        let k = modulus.len() - 1;
        debug_assert_eq!(modulus[k], 1);
        let mut red: Vec<Vec<u64>> = Vec::with_capacity(k.saturating_sub(1));
        if k > 1 {
            // y^k = -(m_0 + m_1 y + ... + m_{k-1} y^{k-1})
            let base: Vec<u64> = modulus[..k].iter().map(|&c| negm(c, p)).collect();
            red.push(base);
            for s in 1..k - 1 {
                let prev = &red[s - 1];
                let overflow = prev[k - 1];
                let mut next = vec![0u64; k];
                for j in 1..k {
                    next[j] = prev[j - 1];
                }
                if overflow != 0 {
                    let first = &red[0];
                    for j in 0..k {
                        next[j] = addm(next[j], mulm(overflow, first[j], p), p);
                    }
                }
                red.push(next);
            }
        }
        FieldContext { p, k, modulus, red }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn ext_degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem {
            coeffs: vec![0; self.k],
        }
    }

    pub fn one(&self) -> ExtElem {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u64) -> ExtElem {
        let mut coeffs = vec![0; self.k];
        coeffs[0] = c % self.p;
        ExtElem { coeffs }
    }

    /// The class of `y`, a root of the modulus (equals zero when `k = 1`).
    pub fn generator(&self) -> ExtElem {
        let mut coeffs = vec![0; self.k];
        if self.k > 1 {
            coeffs[1] = 1;
        }
        ExtElem { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> ExtElem {
        let mut c: Vec<u64> = coeffs.iter().take(self.k).map(|&v| v % self.p).collect();
        c.resize(self.k, 0);
        ExtElem { coeffs: c }
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| addm(x, y, self.p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| subm(x, y, self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem {
            coeffs: a.coeffs.iter().map(|&x| negm(x, self.p)).collect(),
        }
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = self.k;
        let p128 = self.p as u128;
        if k == 1 {
            return ExtElem {
                coeffs: vec![mulm(a.coeffs[0], b.coeffs[0], self.p)],
            };
        }
        let mut acc = vec![0u128; 2 * k - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = ai as u128;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                acc[i + j] += ai * bj as u128;
            }
        }
        let mut out = vec![0u64; k];
        let mut lazy = vec![0u128; k];
        for (j, slot) in lazy.iter_mut().enumerate() {
            *slot = acc[j] % p128;
        }
        for s in 0..k - 1 {
            let hi = (acc[k + s] % p128) as u64;
            if hi == 0 {
                continue;
            }
            let hi = hi as u128;
            for (j, &rj) in self.red[s].iter().enumerate() {
                lazy[j] += hi * rj as u128;
            }
        }
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = (lazy[j] % p128) as u64;
        }
        ExtElem { coeffs: out }
    }

    /// Multiply by a prime-field scalar.
    pub fn mul_scalar(&self, a: &ExtElem, c: u64) -> ExtElem {
        ExtElem {
            coeffs: a.coeffs.iter().map(|&x| mulm(x, c, self.p)).collect(),
        }
    }

    pub fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        if a.is_zero() {
            return None;
        }
        if self.k == 1 {
            return Some(ExtElem {
                coeffs: vec![invm(a.coeffs[0], self.p)?],
            });
        }
        let mut poly = a.coeffs.clone();
        fppoly::trim(&mut poly);
        let inv = fppoly::invmod(&poly, &self.modulus, self.p)?;
        Some(self.from_coeffs(&inv))
    }

    pub fn pow(&self, a: &ExtElem, mut e: u64) -> ExtElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn random(&self, rng: &mut impl RngCore) -> ExtElem {
        ExtElem {
            coeffs: (0..self.k).map(|_| uniform_below(rng, self.p)).collect(),
        }
    }
}

/// The Frobenius `z -> z^p` as a precomputed linear map over the prime
/// field: column `j` is the image of the basis element `y^j`.
pub struct Frobenius {
    cols: Vec<ExtElem>,
}

impl Frobenius {
    pub fn new(ctx: &FieldContext) -> Frobenius {
        let k = ctx.ext_degree();
        let mut cols = Vec::with_capacity(k);
        cols.push(ctx.one());
        if k > 1 {
            let yp = ctx.pow(&ctx.generator(), ctx.prime());
            for j in 1..k {
                let next = ctx.mul(&cols[j - 1], &yp);
                cols.push(next);
            }
        }
        Frobenius { cols }
    }

    pub fn apply(&self, ctx: &FieldContext, a: &ExtElem) -> ExtElem {
        let k = ctx.ext_degree();
        let p128 = ctx.prime() as u128;
        let mut acc = vec![0u128; k];
        for (j, &aj) in a.coeffs.iter().enumerate() {
            if aj == 0 {
                continue;
            }
            let aj = aj as u128;
            for (i, &cij) in self.cols[j].coeffs.iter().enumerate() {
                acc[i] += aj * cij as u128;
            }
        }
        ExtElem {
            coeffs: acc.into_iter().map(|v| (v % p128) as u64).collect(),
        }
    }

    /// `z^(p^e)`.
    pub fn apply_iterated(&self, ctx: &FieldContext, a: &ExtElem, e: usize) -> ExtElem {
        let mut cur = a.clone();
        for _ in 0..e {
            cur = self.apply(ctx, &cur);
        }
        cur
    }
}

/// Construct `F_(p^k)` with a verified irreducible modulus.
pub fn make_field(p: u64, k: usize) -> Result<FieldContext, NodeLabError> {
    FieldContext::new(p, k)
}
