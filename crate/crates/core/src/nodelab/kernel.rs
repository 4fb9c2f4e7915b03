//! The null-space section of a coefficient matrix: for a construction row,
//! the `(r-3) x (r-2)` matrix of coefficient forms `alpha_ij` of degrees
//! `b_i - a_j` has a one-dimensional null space over the polynomial ring,
//! generated by the vector of signed maximal minors. Its `j`-th coordinate
//! is homogeneous of degree `a_j` because the row and column degree sums
//! agree.

use rand_chacha::ChaCha20Rng;
use rand_core::SeedableRng;

use super::form::{random_form_with_rng, HomogeneousForm};
use super::NodeLabError;
use crate::catalog::ConstructionRow;

/// Seeded coefficient matrix for a construction row: entry `(i, j)` is a
/// random form of degree `b_i - a_j`, or the zero form when that degree is
/// negative. Entries are drawn row-major from one stream.
pub fn random_alphas(row: &ConstructionRow, p: u64, seed: u64) -> Vec<Vec<HomogeneousForm>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    row.b
        .iter()
        .map(|&bi| {
            row.a
                .iter()
                .map(|&aj| {
                    if bi >= aj {
                        random_form_with_rng(p, bi - aj, &mut rng)
                    } else {
                        HomogeneousForm::zero(p, 0)
                    }
                })
                .collect()
        })
        .collect()
}

fn det(entries: &[Vec<&HomogeneousForm>], p: u64) -> HomogeneousForm {
    let n = entries.len();
    if n == 1 {
        return entries[0][0].clone();
    }
    // cofactor expansion along the first row
    let mut acc = HomogeneousForm::zero(p, 0);
    for j in 0..n {
        if entries[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<&HomogeneousForm>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, f)| *f)
                    .collect()
            })
            .collect();
        let term = entries[0][j].mul(&det(&minor, p));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
        .expect("determinant terms share a degree");
    }
    acc
}

/// The generator `N` of the null space of `alphas`: `N_j` is the maximal
/// minor omitting column `j`, with alternating sign, computed by exact
/// cofactor expansion. Verifies `alphas * N = 0` before returning; a failure
/// there would be an arithmetic defect, not bad input.
pub fn kernel_section(
    row: &ConstructionRow,
    alphas: &[Vec<HomogeneousForm>],
) -> Result<Vec<HomogeneousForm>, NodeLabError> {
    let nrows = row.b.len();
    let ncols = row.a.len();
    if alphas.len() != nrows || alphas.iter().any(|r| r.len() != ncols) {
        return Err(NodeLabError::FormShape(format!(
            "alpha matrix must be {} x {}",
            nrows, ncols
        )));
    }
    let mut p = None;
    for (i, arow) in alphas.iter().enumerate() {
        for (j, entry) in arow.iter().enumerate() {
            p.get_or_insert(entry.prime());
            if entry.prime() != p.unwrap() {
                return Err(NodeLabError::FormShape("mixed primes".to_string()));
            }
            let bi = row.b[i];
            let aj = row.a[j];
            if bi < aj {
                if !entry.is_zero() {
                    return Err(NodeLabError::FormShape(format!(
                        "entry ({}, {}) must be zero: prescribed degree {} - {} is negative",
                        i, j, bi, aj
                    )));
                }
            } else if !entry.is_zero() && entry.degree() != bi - aj {
                return Err(NodeLabError::FormShape(format!(
                    "entry ({}, {}) has degree {}, expected {}",
                    i,
                    j,
                    entry.degree(),
                    bi - aj
                )));
            }
        }
    }
    let p = p.expect("rows are nonempty");

    let mut section = Vec::with_capacity(ncols);
    for j in 0..ncols {
        let minor: Vec<Vec<&HomogeneousForm>> = alphas
            .iter()
            .map(|arow| {
                arow.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, f)| f)
                    .collect()
            })
            .collect();
        let d = det(&minor, p);
        let signed = if j % 2 == 0 { d } else { d.neg() };
        if !signed.is_zero() && signed.degree() != row.a[j] {
            return Err(NodeLabError::KernelIdentity);
        }
        section.push(signed);
    }

    // the defining identity: every row of alphas pairs to zero with N
    for arow in alphas {
        let mut acc = HomogeneousForm::zero(p, 0);
        for (entry, nj) in arow.iter().zip(&section) {
            acc = acc
                .add(&entry.mul(nj))
                .map_err(|_| NodeLabError::KernelIdentity)?;
        }
        if !acc.is_zero() {
            return Err(NodeLabError::KernelIdentity);
        }
    }
    Ok(section)
}
