//! Dense univariate polynomials over a prime field, with the factoring
//! machinery the node lab needs: squarefree decomposition, distinct-degree
//! splitting, equal-degree (Cantor-Zassenhaus) splitting, irreducibility
//! testing and Lagrange interpolation.
//!
//! A polynomial is a `Vec<u64>` of reduced coefficients, little-endian, with
//! no trailing zeros; the zero polynomial is the empty vector.

use num_bigint::BigUint;
use rand_core::RngCore;

use super::scalar::{addm, invm, mulm, negm, subm, uniform_below};

pub type FpPoly = Vec<u64>;

pub fn trim(f: &mut FpPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

/// Degree, `None` for the zero polynomial.
pub fn deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn is_zero(f: &[u64]) -> bool {
    f.is_empty()
}

pub fn constant(c: u64, p: u64) -> FpPoly {
    let c = c % p;
    if c == 0 {
        vec![]
    } else {
        vec![c]
    }
}

pub fn monomial_x() -> FpPoly {
    vec![0, 1]
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let mut out = vec![0u64; f.len().max(g.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *slot = addm(a, b, p);
    }
    trim(&mut out);
    out
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let mut out = vec![0u64; f.len().max(g.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *slot = subm(a, b, p);
    }
    trim(&mut out);
    out
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut acc = vec![0u128; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let a = a as u128;
        for (j, &b) in g.iter().enumerate() {
            acc[i + j] += a * b as u128;
        }
    }
    let p128 = p as u128;
    let mut out: Vec<u64> = acc.into_iter().map(|v| (v % p128) as u64).collect();
    trim(&mut out);
    out
}

pub fn mul_scalar(f: &[u64], c: u64, p: u64) -> FpPoly {
    let c = c % p;
    if c == 0 {
        return vec![];
    }
    let mut out: Vec<u64> = f.iter().map(|&a| mulm(a, c, p)).collect();
    trim(&mut out);
    out
}

pub fn make_monic(f: &[u64], p: u64) -> FpPoly {
    match f.last() {
        None => vec![],
        Some(&lc) if lc == 1 => f.to_vec(),
        Some(&lc) => mul_scalar(f, invm(lc, p).expect("nonzero lead"), p),
    }
}

/// Euclidean division; the divisor must be nonzero.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let gd = deg(g).expect("division by zero polynomial");
    let lc_inv = invm(g[gd], p).expect("prime field");
    let mut rem: Vec<u64> = f.to_vec();
    if f.len() < g.len() {
        return (vec![], rem);
    }
    let mut quot = vec![0u64; f.len() - g.len() + 1];
    for i in (gd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let q = mulm(c, lc_inv, p);
        quot[i - gd] = q;
        for (j, &gj) in g.iter().enumerate() {
            rem[i - gd + j] = subm(rem[i - gd + j], mulm(q, gj, p), p);
        }
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    divrem(f, g, p).1
}

/// Monic greatest common divisor.
pub fn gcd(f: &[u64], g: &[u64], p: u64) -> FpPoly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(&a, p)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm;
/// requires `gcd(a, m)` constant.
pub fn invmod(a: &[u64], m: &[u64], p: u64) -> Option<FpPoly> {
    // maintain r0 = s0 * a (mod m), r1 = s1 * a (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = rem(a, m, p);
    let mut s0: FpPoly = vec![];
    let mut s1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let d = deg(&r0)?;
    if d != 0 {
        return None;
    }
    let scale = invm(r0[0], p).expect("nonzero constant");
    Some(rem(&mul_scalar(&s0, scale, p), m, p))
}

fn powmod_bits(base: &[u64], bits: impl Iterator<Item = bool>, m: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1 % p];
    let base = rem(base, m, p);
    for bit in bits {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if bit {
            acc = rem(&mul(&acc, &base, p), m, p);
        }
    }
    acc
}

pub fn powmod_u64(base: &[u64], e: u64, m: &[u64], p: u64) -> FpPoly {
    if e == 0 {
        return vec![1 % p];
    }
    let top = 63 - e.leading_zeros() as u64;
    powmod_bits(base, (0..=top).rev().map(|i| (e >> i) & 1 == 1), m, p)
}

pub fn powmod_big(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    if e.bits() == 0 {
        return vec![1 % p];
    }
    let top = e.bits() - 1;
    powmod_bits(base, (0..=top).rev().map(|i| e.bit(i)), m, p)
}

pub fn derivative(f: &[u64], p: u64) -> FpPoly {
    if f.len() <= 1 {
        return vec![];
    }
    let mut out = vec![0u64; f.len() - 1];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = mulm(f[i + 1], ((i + 1) as u64) % p, p);
    }
    trim(&mut out);
    out
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addm(mulm(acc, x, p), c, p);
    }
    acc
}

/// `f(x^(1/p))` for an `f` all of whose exponents are multiples of `p`;
/// coefficientwise the Frobenius is the identity on the prime field.
fn pth_root(f: &[u64], p: u64) -> FpPoly {
    let step = p as usize;
    let mut out = Vec::with_capacity(f.len() / step + 1);
    let mut i = 0;
    while i < f.len() {
        out.push(f[i]);
        i += step;
    }
    trim(&mut out);
    out
}

/// Monic squarefree decomposition: pairs `(factor, multiplicity)` with the
/// factors squarefree and pairwise coprime. Handles the characteristic-`p`
/// case where the derivative vanishes.
pub fn squarefree_decomposition(f: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    let f = make_monic(f, p);
    let mut result = Vec::new();
    if deg(&f).is_none_or(|d| d == 0) {
        return result;
    }
    let fp = derivative(&f, p);
    if fp.is_empty() {
        for (q, m) in squarefree_decomposition(&pth_root(&f, p), p) {
            result.push((q, m * p as u32));
        }
        return result;
    }
    let mut c = gcd(&f, &fp, p);
    let mut w = divrem(&f, &c, p).0;
    let mut i = 1u32;
    while deg(&w).is_some_and(|d| d > 0) {
        let y = gcd(&w, &c, p);
        let z = divrem(&w, &y, p).0;
        if deg(&z).is_some_and(|d| d > 0) {
            result.push((z, i));
        }
        c = divrem(&c, &y, p).0;
        w = y;
        i += 1;
    }
    if deg(&c).is_some_and(|d| d > 0) {
        for (q, m) in squarefree_decomposition(&pth_root(&c, p), p) {
            result.push((q, m * p as u32));
        }
    }
    result
}

/// Distinct-degree splitting of a monic squarefree `f`: pairs
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(FpPoly, usize)> {
    let mut v = make_monic(f, p);
    let mut result = Vec::new();
    let mut h = rem(&monomial_x(), &v, p);
    let mut d = 0usize;
    while deg(&v).is_some_and(|dv| dv >= 2 * (d + 1)) {
        d += 1;
        h = powmod_u64(&h, p, &v, p);
        let g = gcd(&sub(&h, &monomial_x(), p), &v, p);
        if deg(&g).is_some_and(|dg| dg > 0) {
            result.push((g.clone(), d));
            v = divrem(&v, &g, p).0;
            h = rem(&h, &v, p);
        }
    }
    if let Some(dv) = deg(&v) {
        if dv > 0 {
            result.push((v, dv));
        }
    }
    result
}

/// Cantor-Zassenhaus equal-degree splitting: `f` monic squarefree, all of
/// whose irreducible factors have degree `d`. Requires `p` odd.
pub fn equal_degree_split(f: &[u64], d: usize, p: u64, rng: &mut impl RngCore) -> Vec<FpPoly> {
    let df = deg(f).expect("nonzero");
    if df == d {
        return vec![f.to_vec()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let mut a: FpPoly = (0..df).map(|_| uniform_below(rng, p)).collect();
        trim(&mut a);
        if deg(&a).is_none_or(|da| da == 0) {
            continue;
        }
        let b = powmod_big(&a, &exp, f, p);
        let g = gcd(&sub(&b, &[1], p), f, p);
        if let Some(dg) = deg(&g) {
            if dg > 0 && dg < df {
                let rest = divrem(f, &g, p).0;
                let mut out = equal_degree_split(&g, d, p, rng);
                out.extend(equal_degree_split(&rest, d, p, rng));
                return out;
            }
        }
    }
}

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// `(degree, coefficients)` for deterministic output.
pub fn factor(f: &[u64], p: u64, rng: &mut impl RngCore) -> Vec<(FpPoly, u32)> {
    let mut result: Vec<(FpPoly, u32)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(f, p) {
        for (prod, d) in distinct_degree(&sf, p) {
            for irr in equal_degree_split(&prod, d, p, rng) {
                result.push((irr, mult));
            }
        }
    }
    result.sort();
    result
}

/// Irreducibility of a monic polynomial via the gcd ladder against
/// `x^(p^i) - x` for `i` up to half the degree: any nontrivial factorization
/// has a factor of degree at most `deg/2`, and the ladder catches it.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = match deg(f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let f = make_monic(f, p);
    let mut h = rem(&monomial_x(), &f, p);
    for _ in 1..=(k / 2) {
        h = powmod_u64(&h, p, &f, p);
        let g = gcd(&sub(&h, &monomial_x(), p), &f, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Lagrange interpolation through distinct sample points.
pub fn interpolate(samples: &[(u64, u64)], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![];
    for (i, &(xi, yi)) in samples.iter().enumerate() {
        if yi == 0 {
            continue;
        }
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut num: FpPoly = vec![1];
        let mut denom = 1u64;
        for (j, &(xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            num = mul(&num, &[negm(xj, p), 1], p);
            denom = mulm(denom, subm(xi, xj, p), p);
        }
        let scale = mulm(yi, invm(denom, p).expect("distinct sample points"), p);
        acc = add(&acc, &mul_scalar(&num, scale, p), p);
    }
    acc
}

pub fn to_string(f: &[u64]) -> String {
    if f.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match i {
            0 => format!("{}", c),
            1 if c == 1 => "t".to_string(),
            1 => format!("{}*t", c),
            _ if c == 1 => format!("t^{}", i),
            _ => format!("{}*t^{}", c, i),
        };
        parts.push(part);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::SeedableRng;

    type Rng = rand_chacha::ChaCha20Rng;

    #[test]
    fn divrem_reconstructs() {
        let p = 10007;
        let f = vec![3, 0, 1, 9, 4];
        let g = vec![5, 1, 2];
        let (q, r) = divrem(&f, &g, p);
        let back = add(&mul(&q, &g, p), &r, p);
        assert_eq!(back, f);
        assert!(deg(&r).map_or(true, |d| d < deg(&g).unwrap()));
    }

    #[test]
    fn gcd_of_multiples() {
        let p = 7;
        let a = vec![1, 1]; // x + 1
        let b = vec![3, 1]; // x + 3
        let f = mul(&a, &b, p);
        // x^2 + 1 is irreducible over F_7 (-1 is a non-residue)
        let g = mul(&a, &[1, 0, 1], p);
        assert_eq!(gcd(&f, &g, p), a);
    }

    #[test]
    fn invmod_round_trip() {
        let p = 10007;
        let m = vec![3, 0, 1]; // x^2 + 3, irreducible iff -3 is a non-residue
        let a = vec![17, 5];
        if let Some(inv) = invmod(&a, &m, p) {
            assert_eq!(rem(&mul(&a, &inv, p), &m, p), vec![1]);
        } else {
            panic!("expected invertible");
        }
    }

    #[test]
    fn squarefree_decomposition_examples() {
        let p = 7;
        // x^2 (x+1) over F_7
        let f = mul(&mul(&[0, 1], &[0, 1], p), &[1, 1], p);
        let dec = squarefree_decomposition(&f, p);
        assert_eq!(dec, vec![(vec![1, 1], 1), (vec![0, 1], 2)]);
        // (x+1)^3 over F_3: derivative vanishes
        let p = 3;
        let f = vec![1, 0, 0, 1]; // x^3 + 1 = (x+1)^3
        let dec = squarefree_decomposition(&f, p);
        assert_eq!(dec, vec![(vec![1, 1], 3)]);
    }

    #[test]
    fn factor_product_of_known_irreducibles() {
        let p = 10007;
        let mut rng = Rng::seed_from_u64(0);
        // two linear, one irreducible quadratic (x^2 - s for a non-residue s)
        let mut s = 2;
        while powm_is_residue(s, p) {
            s += 1;
        }
        let quad = vec![negm(s, p), 0, 1];
        assert!(is_irreducible(&quad, p));
        let f = mul(&mul(&[1, 1], &[5, 1], p), &mul(&quad, &quad, p), p);
        let factors = factor(&f, p, &mut rng);
        assert_eq!(
            factors,
            vec![(vec![1, 1], 1), (vec![5, 1], 1), (quad.clone(), 2)]
        );
        // multiplicities and degrees reconstruct the input
        let mut back: FpPoly = vec![1];
        for (q, m) in &factors {
            for _ in 0..*m {
                back = mul(&back, q, p);
            }
        }
        assert_eq!(back, make_monic(&f, p));
    }

    fn powm_is_residue(s: u64, p: u64) -> bool {
        super::super::scalar::powm(s, (p - 1) / 2, p) == 1
    }

    #[test]
    fn irreducibility_ladder() {
        let p = 7;
        // x^2 - a is irreducible exactly when a is a non-residue mod 7
        for a in 1..7u64 {
            let f = vec![negm(a, p), 0, 1];
            assert_eq!(is_irreducible(&f, p), !powm_is_residue(a, p), "a={}", a);
        }
        assert!(is_irreducible(&[1, 0, 1], p)); // x^2 + 1
        assert!(!is_irreducible(&mul(&[1, 1], &[2, 1], p), p));
        // a cubic with no roots in F_7 is irreducible
        let cubic = vec![2, 0, 0, 1]; // x^3 + 2
        let has_root = (0..7).any(|x| eval(&cubic, x, p) == 0);
        assert_eq!(is_irreducible(&cubic, p), !has_root);
    }

    #[test]
    fn interpolation_round_trip() {
        let p = 101;
        let f = vec![7, 0, 3, 1];
        let samples: Vec<(u64, u64)> = (0..4).map(|x| (x, eval(&f, x, p))).collect();
        assert_eq!(interpolate(&samples, p), f);
    }

    #[test]
    fn powmod_matches_naive() {
        let p = 13;
        let m = vec![2, 0, 1];
        let b = vec![3, 4];
        let mut naive: FpPoly = vec![1];
        for e in 0..20u64 {
            assert_eq!(powmod_u64(&b, e, &m, p), naive, "e={}", e);
            assert_eq!(
                powmod_big(&b, &BigUint::from(e), &m, p),
                naive
            );
            naive = rem(&mul(&naive, &b, p), &m, p);
        }
    }
}
