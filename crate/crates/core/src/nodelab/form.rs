//! Homogeneous polynomials in three variables over a prime field.
//!
//! The monomial order is fixed: ascending lexicographic on exponent triples
//! `(e0, e1, e2)` with `e0 + e1 + e2 = degree`. Every serialized coefficient
//! vector, evaluation-matrix column and file format follows this order.

use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::field::{ExtElem, FieldContext};
use super::scalar::{addm, mulm, negm, uniform_below};
use super::NodeLabError;

/// Number of degree-`d` monomials in three variables: `(d+1)(d+2)/2`.
pub fn monomial_count(d: u32) -> usize {
    ((d as usize + 1) * (d as usize + 2)) / 2
}

/// All exponent triples of total degree `d`, ascending lexicographic.
pub fn monomials_lex(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for e0 in 0..=d {
        for e1 in 0..=(d - e0) {
            out.push([e0, e1, d - e0 - e1]);
        }
    }
    out
}

/// A homogeneous trivariate form. Zero coefficients are omitted from the
/// map; the zero form keeps its degree label so that degree bookkeeping
/// through products stays meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    p: u64,
    degree: u32,
    coeffs: BTreeMap<[u32; 3], u64>,
}

impl HomogeneousForm {
    pub fn zero(p: u64, degree: u32) -> HomogeneousForm {
        HomogeneousForm {
            p,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs<I>(p: u64, degree: u32, coeffs: I) -> Result<HomogeneousForm, NodeLabError>
    where
        I: IntoIterator<Item = ([u32; 3], u64)>,
    {
        let mut map = BTreeMap::new();
        for (exps, c) in coeffs {
            if exps.iter().sum::<u32>() != degree {
                return Err(NodeLabError::FormShape(format!(
                    "exponents {:?} do not sum to degree {}",
                    exps, degree
                )));
            }
            let c = c % p;
            if c != 0 {
                let slot = map.entry(exps).or_insert(0);
                *slot = addm(*slot, c, p);
                if *slot == 0 {
                    map.remove(&exps);
                }
            }
        }
        Ok(HomogeneousForm {
            p,
            degree,
            coeffs: map,
        })
    }

    pub fn monomial(p: u64, exps: [u32; 3], c: u64) -> HomogeneousForm {
        let degree = exps.iter().sum();
        HomogeneousForm::from_coeffs(p, degree, [(exps, c)]).expect("consistent degree")
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&[u32; 3], &u64)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, exps: [u32; 3]) -> u64 {
        self.coeffs.get(&exps).copied().unwrap_or(0)
    }

    /// Dense coefficient vector in the fixed monomial order.
    pub fn coeff_vector(&self) -> Vec<u64> {
        monomials_lex(self.degree)
            .into_iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    /// Sum of two forms. Zero forms are degree-agnostic; otherwise degrees
    /// and primes must agree.
    pub fn add(&self, other: &HomogeneousForm) -> Result<HomogeneousForm, NodeLabError> {
        if self.p != other.p {
            return Err(NodeLabError::FormShape("mixed primes".to_string()));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(NodeLabError::FormShape(format!(
                "cannot add degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut coeffs = self.coeffs.clone();
        for (&exps, &c) in &other.coeffs {
            let slot = coeffs.entry(exps).or_insert(0);
            *slot = addm(*slot, c, self.p);
            if *slot == 0 {
                coeffs.remove(&exps);
            }
        }
        Ok(HomogeneousForm {
            p: self.p,
            degree: self.degree,
            coeffs,
        })
    }

    pub fn neg(&self) -> HomogeneousForm {
        HomogeneousForm {
            p: self.p,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, &c)| (e, negm(c, self.p)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HomogeneousForm) -> Result<HomogeneousForm, NodeLabError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &HomogeneousForm) -> HomogeneousForm {
        debug_assert_eq!(self.p, other.p);
        let degree = self.degree + other.degree;
        let mut coeffs: BTreeMap<[u32; 3], u64> = BTreeMap::new();
        for (ea, &ca) in &self.coeffs {
            for (eb, &cb) in &other.coeffs {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let slot = coeffs.entry(exps).or_insert(0);
                *slot = addm(*slot, mulm(ca, cb, self.p), self.p);
                if *slot == 0 {
                    coeffs.remove(&exps);
                }
            }
        }
        HomogeneousForm {
            p: self.p,
            degree,
            coeffs,
        }
    }

    pub fn scale(&self, c: u64) -> HomogeneousForm {
        let c = c % self.p;
        if c == 0 {
            return HomogeneousForm::zero(self.p, self.degree);
        }
        HomogeneousForm {
            p: self.p,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, &a)| (e, mulm(a, c, self.p)))
                .collect(),
        }
    }

    /// Largest exponent of variable `var` with a nonzero coefficient.
    pub fn var_degree(&self, var: usize) -> Option<u32> {
        self.coeffs.keys().map(|e| e[var]).max()
    }

    /// The coefficient of `var^j`, a form of degree `degree - j` with zero
    /// exponent in `var`.
    pub fn coeff_of_var_power(&self, var: usize, j: u32) -> HomogeneousForm {
        let mut coeffs = BTreeMap::new();
        for (&e, &c) in &self.coeffs {
            if e[var] == j {
                let mut rest = e;
                rest[var] = 0;
                coeffs.insert(rest, c);
            }
        }
        HomogeneousForm {
            p: self.p,
            degree: self.degree - j,
            coeffs,
        }
    }

    pub fn eval_prime(&self, pt: [u64; 3]) -> u64 {
        let d = self.degree as usize;
        let pows: Vec<Vec<u64>> = pt
            .iter()
            .map(|&x| {
                let mut v = vec![1 % self.p; d + 1];
                for i in 1..=d {
                    v[i] = mulm(v[i - 1], x % self.p, self.p);
                }
                v
            })
            .collect();
        let mut acc = 0u64;
        for (&e, &c) in &self.coeffs {
            let m = mulm(
                mulm(pows[0][e[0] as usize], pows[1][e[1] as usize], self.p),
                pows[2][e[2] as usize],
                self.p,
            );
            acc = addm(acc, mulm(c, m, self.p), self.p);
        }
        acc
    }

    /// Evaluate at a point with extension-field coordinates.
    pub fn eval_ext(&self, ctx: &FieldContext, pt: &[ExtElem; 3]) -> ExtElem {
        let d = self.degree as usize;
        let pows: Vec<Vec<ExtElem>> = pt
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(d + 1);
                v.push(ctx.one());
                for i in 1..=d {
                    let next = ctx.mul(&v[i - 1], x);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = ctx.zero();
        for (&e, &c) in &self.coeffs {
            let m = ctx.mul(
                &ctx.mul(&pows[0][e[0] as usize], &pows[1][e[1] as usize]),
                &pows[2][e[2] as usize],
            );
            acc = ctx.add(&acc, &ctx.mul_scalar(&m, c));
        }
        acc
    }

    /// The pullback `f(A x)` along a linear substitution: each variable is
    /// replaced by the corresponding row of `mat`.
    pub fn substitute_linear(&self, mat: &[[u64; 3]; 3]) -> HomogeneousForm {
        let lin: Vec<HomogeneousForm> = (0..3)
            .map(|i| {
                HomogeneousForm::from_coeffs(
                    self.p,
                    1,
                    [
                        ([1, 0, 0], mat[i][0]),
                        ([0, 1, 0], mat[i][1]),
                        ([0, 0, 1], mat[i][2]),
                    ],
                )
                .expect("linear form")
            })
            .collect();
        let d = self.degree;
        // memoized powers of each substituted linear form
        let pows: Vec<Vec<HomogeneousForm>> = lin
            .iter()
            .map(|l| {
                let mut v = Vec::with_capacity(d as usize + 1);
                v.push(HomogeneousForm::from_coeffs(self.p, 0, [([0, 0, 0], 1)]).unwrap());
                for i in 1..=d as usize {
                    let next = v[i - 1].mul(l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = HomogeneousForm::zero(self.p, d);
        for (&e, &c) in &self.coeffs {
            let term = pows[0][e[0] as usize]
                .mul(&pows[1][e[1] as usize])
                .mul(&pows[2][e[2] as usize])
                .scale(c);
            acc = acc.add(&term).expect("degrees agree");
        }
        acc
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = ["x", "y", "z"];
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut printed = false;
            if c != 1 || e == [0, 0, 0] {
                write!(f, "{}", c)?;
                printed = true;
            }
            for (v, &ev) in vars.iter().zip(e.iter()) {
                if ev == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                printed = true;
                if ev == 1 {
                    write!(f, "{}", v)?;
                } else {
                    write!(f, "{}^{}", v, ev)?;
                }
            }
        }
        Ok(())
    }
}

/// Draw a form with every coefficient independently uniform over the prime
/// field, in the fixed monomial order; deterministic in the seed.
pub fn random_form(p: u64, degree: u32, seed: u64) -> HomogeneousForm {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    random_form_with_rng(p, degree, &mut rng)
}

pub fn random_form_with_rng(p: u64, degree: u32, rng: &mut impl RngCore) -> HomogeneousForm {
    let coeffs = monomials_lex(degree)
        .into_iter()
        .map(|m| (m, uniform_below(rng, p)));
    HomogeneousForm::from_coeffs(p, degree, coeffs).expect("generated degrees consistent")
}

/// Parse the exchange format: a header `p=<prime> deg=<e>` followed by one
/// line per monomial, `e1 e2 e3 coeff`.
pub fn parse_form(text: &str) -> Result<HomogeneousForm, NodeLabError> {
    let bad = |msg: String| NodeLabError::FormShape(msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty form file".into()))?;
    let mut p = None;
    let mut degree = None;
    for token in header.split_whitespace() {
        if let Some(v) = token.strip_prefix("p=") {
            p = Some(
                v.parse::<u64>()
                    .map_err(|e| bad(format!("bad prime in header: {}", e)))?,
            );
        } else if let Some(v) = token.strip_prefix("deg=") {
            degree = Some(
                v.parse::<u32>()
                    .map_err(|e| bad(format!("bad degree in header: {}", e)))?,
            );
        } else {
            return Err(bad(format!("unexpected header token: {}", token)));
        }
    }
    let p = p.ok_or_else(|| bad("header missing p=<prime>".into()))?;
    let degree = degree.ok_or_else(|| bad("header missing deg=<e>".into()))?;
    let mut coeffs = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(bad(format!("expected `e1 e2 e3 coeff`, got: {}", line)));
        }
        let e: Vec<u32> = fields[..3]
            .iter()
            .map(|s| s.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(format!("bad exponent: {}", e)))?;
        let c = fields[3]
            .parse::<u64>()
            .map_err(|e| bad(format!("bad coefficient: {}", e)))?;
        coeffs.push(([e[0], e[1], e[2]], c));
    }
    HomogeneousForm::from_coeffs(p, degree, coeffs)
}

/// Inverse of [`parse_form`], monomials in the fixed order.
pub fn format_form(form: &HomogeneousForm) -> String {
    let mut out = format!("p={} deg={}\n", form.prime(), form.degree());
    for (&e, &c) in form.coeffs() {
        out.push_str(&format!("{} {} {} {}\n", e[0], e[1], e[2], c));
    }
    out
}
