//! Points imposing independent conditions, computationally: evaluation
//! matrices of monomials at points, exact rank and null space over the
//! extension field, and the full-spark scan over all row subsets.

use super::field::{ExtElem, FieldContext};
use super::form::{monomial_count, monomials_lex};
use super::intersect::ProjPoint;
use super::NodeLabError;

/// Outcome of a full-spark check at level `m`: passed means every `m`-row
/// submatrix has rank `m`; otherwise `witness` is the lexicographically
/// first failing subset (0-based row indices), and re-verifiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparkReport {
    /// Number of rows (points).
    pub ell: usize,
    /// Form degree the matrix was built from, when it was.
    pub d: Option<u32>,
    pub m: usize,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

/// Row `i` = all degree-`d` monomials (fixed lexicographic order) evaluated
/// at point `i`. Points must be distinct with multiplicity one.
pub fn evaluation_matrix(
    points: &[ProjPoint],
    d: u32,
    ctx: &FieldContext,
) -> Result<Vec<Vec<ExtElem>>, NodeLabError> {
    if points.iter().any(|pt| pt.multiplicity != 1) {
        return Err(NodeLabError::RepeatedPoint);
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].coords == points[j].coords {
                return Err(NodeLabError::RepeatedPoint);
            }
        }
    }
    let monomials = monomials_lex(d);
    let mut rows = Vec::with_capacity(points.len());
    for pt in points {
        let pows: Vec<Vec<ExtElem>> = pt
            .coords
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(d as usize + 1);
                v.push(ctx.one());
                for i in 1..=d as usize {
                    let next = ctx.mul(&v[i - 1], x);
                    v.push(next);
                }
                v
            })
            .collect();
        let row: Vec<ExtElem> = monomials
            .iter()
            .map(|e| {
                ctx.mul(
                    &ctx.mul(&pows[0][e[0] as usize], &pows[1][e[1] as usize]),
                    &pows[2][e[2] as usize],
                )
            })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Rank by in-place Gaussian elimination over the field.
pub fn rank(matrix: &[Vec<ExtElem>], ctx: &FieldContext) -> usize {
    let mut scratch: Vec<Vec<ExtElem>> = matrix.to_vec();
    rank_inplace(&mut scratch, ctx)
}

fn rank_inplace(rows: &mut [Vec<ExtElem>], ctx: &FieldContext) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let nrows = rows.len();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let pivot = (r..nrows).find(|&i| !rows[i][col].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => continue,
        };
        rows.swap(r, pivot);
        let inv = ctx.inv(&rows[r][col]).expect("nonzero pivot");
        for j in col..ncols {
            rows[r][j] = ctx.mul(&rows[r][j], &inv);
        }
        for i in r + 1..nrows {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..ncols {
                let t = ctx.mul(&factor, &rows[r][j]);
                rows[i][j] = ctx.sub(&rows[i][j], &t);
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right null space `{ w : M w = 0 }`, via reduced row echelon
/// form; deterministic (one basis vector per free column, ascending).
pub fn kernel_basis(matrix: &[Vec<ExtElem>], ctx: &FieldContext) -> Vec<Vec<ExtElem>> {
    if matrix.is_empty() {
        return Vec::new();
    }
    let ncols = matrix[0].len();
    let nrows = matrix.len();
    let mut rows: Vec<Vec<ExtElem>> = matrix.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let pivot = (r..nrows).find(|&i| !rows[i][col].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => continue,
        };
        rows.swap(r, pivot);
        let inv = ctx.inv(&rows[r][col]).expect("nonzero pivot");
        for j in col..ncols {
            rows[r][j] = ctx.mul(&rows[r][j], &inv);
        }
        for i in 0..nrows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in col..ncols {
                let t = ctx.mul(&factor, &rows[r][j]);
                rows[i][j] = ctx.sub(&rows[i][j], &t);
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); ncols];
        v[free] = ctx.one();
        for (row_idx, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = ctx.neg(&rows[row_idx][free]);
        }
        basis.push(v);
    }
    basis
}

/// Exhaustive full-spark check: every `m`-subset of rows must have rank `m`.
/// Subsets are scanned in lexicographic order and the first failure is the
/// returned witness, so parallel or sequential evaluation agree.
pub fn full_spark(
    matrix: &[Vec<ExtElem>],
    m: usize,
    ctx: &FieldContext,
) -> Result<SparkReport, NodeLabError> {
    let ell = matrix.len();
    let ncols = if ell > 0 { matrix[0].len() } else { 0 };
    if m > ell.min(ncols) {
        return Err(NodeLabError::SparkBound {
            m,
            limit: ell.min(ncols),
        });
    }
    let mut report = SparkReport {
        ell,
        d: None,
        m,
        passed: true,
        witness: None,
    };
    if m == 0 {
        return Ok(report);
    }
    let mut subset: Vec<usize> = (0..m).collect();
    let mut scratch: Vec<Vec<ExtElem>> = subset.iter().map(|&i| matrix[i].clone()).collect();
    loop {
        for (slot, &i) in scratch.iter_mut().zip(subset.iter()) {
            for (dst, src) in slot.iter_mut().zip(matrix[i].iter()) {
                dst.clone_from(src);
            }
        }
        if rank_inplace(&mut scratch, ctx) < m {
            report.passed = false;
            report.witness = Some(subset.clone());
            return Ok(report);
        }
        // next combination in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(report);
            }
            i -= 1;
            if subset[i] != i + ell - m {
                break;
            }
            if i == 0 {
                return Ok(report);
            }
        }
        subset[i] += 1;
        for j in i + 1..m {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// The computational meaning of "the points impose independent conditions on
/// degree-`d` curves": the full-spark check at level `min(ell, N_d)` on the
/// evaluation matrix.
pub fn independence_check(
    points: &[ProjPoint],
    d: u32,
    ctx: &FieldContext,
) -> Result<SparkReport, NodeLabError> {
    let matrix = evaluation_matrix(points, d, ctx)?;
    let m = points.len().min(monomial_count(d));
    let mut report = full_spark(&matrix, m, ctx)?;
    report.d = Some(d);
    Ok(report)
}
