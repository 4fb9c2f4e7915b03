//! Sylvester resultants of plane curves: eliminate one variable from a pair
//! of homogeneous forms, producing a univariate polynomial in the ratio of
//! the two remaining variables.
//!
//! The determinant is computed by evaluation and interpolation: the Sylvester
//! entries are binary forms in the remaining variables, and the determinant
//! is homogeneous, so sampling it at `(theta, 1)` for enough values of
//! `theta` pins it down exactly.

use super::fppoly::{self, FpPoly};
use super::form::HomogeneousForm;
use super::scalar::{invm, mulm, subm};
use super::NodeLabError;

/// Outcome of an elimination. `coeffs` is the dehomogenization `R(t, 1)` of
/// the homogeneous resultant `R(w1, w2)`, where `(w1, w2)` are the two
/// non-eliminated variables in index order and `t = w1/w2`. A degree drop
/// below `homogeneous_degree` means `R` has roots on the line `w2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantOutcome {
    pub coeffs: FpPoly,
    pub homogeneous_degree: u32,
}

/// Sylvester resultant of `f` and `g` with respect to variable `var`,
/// using the actual degrees of the forms in `var`.
pub fn resultant(
    f: &HomogeneousForm,
    g: &HomogeneousForm,
    var: usize,
) -> Result<ResultantOutcome, NodeLabError> {
    assert!(var < 3);
    if f.prime() != g.prime() {
        return Err(NodeLabError::FormShape("mixed primes".to_string()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(NodeLabError::FormShape(
            "resultant of a zero form".to_string(),
        ));
    }
    let p = f.prime();
    let rest: Vec<usize> = (0..3).filter(|&v| v != var).collect();
    let w1 = rest[0];
    let fm = f.var_degree(var).expect("nonzero form");
    let gm = g.var_degree(var).expect("nonzero form");
    if fm == 0 && gm == 0 {
        return Err(NodeLabError::DegenerateChart);
    }

    // binary-form coefficients of var^j, dehomogenized at (w1, w2) = (t, 1)
    let dehom = |form: &HomogeneousForm, j: u32| -> FpPoly {
        let slice = form.coeff_of_var_power(var, j);
        let mut coeffs = vec![0u64; (form.degree() - j) as usize + 1];
        for (&e, &c) in slice.coeffs() {
            coeffs[e[w1] as usize] = c;
        }
        fppoly::trim(&mut coeffs);
        coeffs
    };

    if fm == 0 || gm == 0 {
        // one side is constant in `var`: Res = (that side)^(other's degree)
        let (constant, power) = if fm == 0 { (f, gm) } else { (g, fm) };
        let base = dehom(constant, 0);
        let mut acc: FpPoly = vec![1];
        for _ in 0..power {
            acc = fppoly::mul(&acc, &base, p);
        }
        if acc.is_empty() {
            return Err(NodeLabError::CommonComponent);
        }
        return Ok(ResultantOutcome {
            coeffs: acc,
            homogeneous_degree: power * constant.degree(),
        });
    }

    let fcols: Vec<FpPoly> = (0..=fm).map(|j| dehom(f, j)).collect();
    let gcols: Vec<FpPoly> = (0..=gm).map(|j| dehom(g, j)).collect();

    let hom_degree = gm * f.degree() + fm * g.degree() - fm * gm;
    let samples_needed = hom_degree as u64 + 1;
    if p < samples_needed {
        return Err(NodeLabError::PrimeTooSmall {
            p,
            needed: samples_needed,
        });
    }

    let size = (fm + gm) as usize;
    let mut samples = Vec::with_capacity(samples_needed as usize);
    let mut matrix = vec![vec![0u64; size]; size];
    for theta in 0..samples_needed {
        for row in matrix.iter_mut() {
            row.fill(0);
        }
        // f-rows: gm shifted copies of (f_fm, ..., f_0) evaluated at theta
        for i in 0..gm as usize {
            for j in 0..=fm as usize {
                matrix[i][i + j] = fppoly::eval(&fcols[fm as usize - j], theta, p);
            }
        }
        for i in 0..fm as usize {
            for j in 0..=gm as usize {
                matrix[gm as usize + i][i + j] = fppoly::eval(&gcols[gm as usize - j], theta, p);
            }
        }
        samples.push((theta, det_mod_p(&mut matrix, p)));
    }
    let r = fppoly::interpolate(&samples, p);
    if r.is_empty() {
        return Err(NodeLabError::CommonComponent);
    }
    Ok(ResultantOutcome {
        coeffs: r,
        homogeneous_degree: hom_degree,
    })
}

/// Determinant over the prime field by in-place elimination.
fn det_mod_p(m: &mut [Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&i| m[i][col] != 0);
        let pivot = match pivot {
            Some(i) => i,
            None => return 0,
        };
        if pivot != col {
            m.swap(pivot, col);
            det = subm(0, det, p);
        }
        let d = m[col][col];
        det = mulm(det, d, p);
        let inv = invm(d, p).expect("nonzero pivot");
        for i in col + 1..n {
            if m[i][col] == 0 {
                continue;
            }
            let factor = mulm(m[i][col], inv, p);
            for j in col..n {
                let t = mulm(factor, m[col][j], p);
                m[i][j] = subm(m[i][j], t, p);
            }
        }
    }
    det
}
