//! Exact integer predicates deciding, for a construction row and a curve
//! class `(d, g)`, whether the degeneration argument applies, plus the
//! expected curve count `C(ell-2, g)`.
//!
//! Everything here is pure integer arithmetic: rational comparisons such as
//! `g < d^2/8` are cleared to `8g < d^2`, and the count is an arbitrary
//! precision binomial. No floating point anywhere.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::catalog::{ConstructionRow, K3Family};

/// A degree/genus pair with its derived linear-system data: the curves of
/// class `L` on the K3 move in a `g`-dimensional linear system with
/// `L^2 = 2g - 2` and `h^0(L) = g + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveClass {
    d: u32,
    g: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RulesError {
    #[error("curve degree must be positive")]
    ZeroDegree,
    #[error("theorem hypotheses not met: need ell >= g + 2, got ell = {ell}, g = {g}")]
    HypothesesNotMet { ell: u32, g: u32 },
}

impl CurveClass {
    pub fn new(d: u32, g: u32) -> Result<CurveClass, RulesError> {
        if d == 0 {
            return Err(RulesError::ZeroDegree);
        }
        Ok(CurveClass { d, g })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// Dimension of the linear system `|L|`.
    pub fn dim_l(&self) -> u32 {
        self.g
    }

    /// Self-intersection `L^2 = 2g - 2` (can be `-2` for `g = 0`).
    pub fn self_int(&self) -> i64 {
        2 * self.g as i64 - 2
    }

    /// `h^0(L) = g + 1`.
    pub fn h0(&self) -> u32 {
        self.g + 1
    }
}

/// Outcome of the K3 curve-existence predicate, tagged with the branch that
/// decided it so certificates are explainable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Existence {
    /// The strict inequality branch (`8g < d^2`, `12g < d^2` or `16g < d^2`).
    StrictIneq,
    /// A sporadic equality case: `12g = d^2 + 3`, or `16g = d^2` with
    /// `d = 4 (mod 8)`.
    EqualityBranch,
    /// The inequality holds but the pair is one of the excluded ones:
    /// `(5,3)`, `(7,4)` or `(9,5)` for the respective families.
    ExcludedPair,
    /// Neither inequality nor equality branch applies.
    Fail,
}

impl Existence {
    pub fn holds(self) -> bool {
        matches!(self, Existence::StrictIneq | Existence::EqualityBranch)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Existence::StrictIneq => "STRICT_INEQ",
            Existence::EqualityBranch => "EQUALITY_BRANCH",
            Existence::ExcludedPair => "EXCLUDED_PAIR",
            Existence::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Does the K3 family carry a smooth irreducible curve of class `(d, g)`
/// whose class is independent of the hyperplane class?
///
/// Exact integer logic per family:
/// * quartic: `8g < d^2` and `(d,g) != (5,3)`;
/// * `(2,3)`: `12g = d^2 + 3`, or `12g < d^2` and `(d,g) != (7,4)`;
/// * `(2,2,2)`: `16g = d^2` with `d = 4 (mod 8)`, or `16g < d^2` and
///   `(d,g) != (9,5)`.
pub fn k3_exists(family: K3Family, curve: CurveClass) -> Existence {
    let d = curve.d as u64;
    let g = curve.g as u64;
    let d2 = d * d;
    match family {
        K3Family::Quartic => {
            if 8 * g < d2 {
                if (d, g) == (5, 3) {
                    Existence::ExcludedPair
                } else {
                    Existence::StrictIneq
                }
            } else {
                Existence::Fail
            }
        }
        K3Family::TwoThree => {
            if 12 * g == d2 + 3 {
                Existence::EqualityBranch
            } else if 12 * g < d2 {
                if (d, g) == (7, 4) {
                    Existence::ExcludedPair
                } else {
                    Existence::StrictIneq
                }
            } else {
                Existence::Fail
            }
        }
        K3Family::TwoTwoTwo => {
            if 16 * g == d2 && d % 8 == 4 {
                Existence::EqualityBranch
            } else if 16 * g < d2 {
                if (d, g) == (9, 5) {
                    Existence::ExcludedPair
                } else {
                    Existence::StrictIneq
                }
            } else {
                Existence::Fail
            }
        }
    }
}

/// The degree window: `d <= 2 a_last (mu - 1)`, or
/// `d a_last > a_last^2 (mu - 1) + g`.
pub fn cond_degree_window(row: &ConstructionRow, curve: CurveClass) -> bool {
    let d = curve.d as u64;
    let g = curve.g as u64;
    let a_last = row.a_last as u64;
    let mu1 = (row.mu - 1) as u64;
    d <= 2 * a_last * mu1 || d * a_last > a_last * a_last * mu1 + g
}

/// The node budget: with `B = a_last (2 a_penult - a_last) (mu - 1)`,
/// require `B >= g + 2` when the two distinguished degrees differ and
/// `B >= g + 1` when they coincide.
pub fn cond_node_budget(row: &ConstructionRow, curve: CurveClass) -> bool {
    let g = curve.g as u64;
    let budget = node_budget(row);
    if row.a_penult != row.a_last {
        budget >= g + 2
    } else {
        budget >= g + 1
    }
}

fn node_budget(row: &ConstructionRow) -> u64 {
    let a_penult = row.a_penult as u64;
    let a_last = row.a_last as u64;
    let mu1 = (row.mu - 1) as u64;
    a_last * (2 * a_penult - a_last) * mu1
}

/// The node surplus: at least `g + 2` nodes, so that the count
/// `C(ell - 2, g)` is over a valid range. Implied by the node budget.
pub fn cond_node_surplus(row: &ConstructionRow, curve: CurveClass) -> bool {
    row.ell as u64 >= curve.g as u64 + 2
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    acc
}

/// The expected number of curves surviving a general deformation:
/// `C(ell - 2, g)` with `dim |L| = g`. Requires `ell >= g + 2`.
pub fn expected_count(row: &ConstructionRow, g: u32) -> Result<BigUint, RulesError> {
    if (row.ell as u64) < g as u64 + 2 {
        return Err(RulesError::HypothesesNotMet { ell: row.ell, g });
    }
    Ok(binomial(row.ell as u64 - 2, g as u64))
}

/// The remaining genericity conditions hold automatically for general
/// coefficient forms once the numeric conditions do; certificates carry this
/// as a fixed annotation rather than a computation.
pub const GENERICITY_NOTE: &str =
    "conditions A1, A3-A7 hold for general coefficient forms; not separately computed";

/// Per-(row, curve) verdict: the existence branch, the two numeric
/// conditions, the implied node surplus, and the expected count when all of
/// them hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub row: &'static ConstructionRow,
    pub curve: CurveClass,
    pub exists_on_k3: Existence,
    pub cond_degree_window: bool,
    pub cond_node_budget: bool,
    pub cond_node_surplus: bool,
    pub admissible: bool,
    /// `C(ell - 2, g)`, present iff admissible. Note the count depends on the
    /// construction row, not just the CICY type: the two quintic rows give 14
    /// and 34 for elliptic curves.
    pub expected_count: Option<BigUint>,
    pub genericity_note: &'static str,
}

/// Assemble the certificate for one construction row and one curve class.
/// Pure: identical inputs yield identical certificates.
pub fn certify(row: &'static ConstructionRow, curve: CurveClass) -> Certificate {
    let exists_on_k3 = k3_exists(row.k3_family(), curve);
    let cond_degree_window = cond_degree_window(row, curve);
    let cond_node_budget = cond_node_budget(row, curve);
    let cond_node_surplus = cond_node_surplus(row, curve);
    let admissible = exists_on_k3.holds() && cond_degree_window && cond_node_budget;
    let expected_count = if admissible {
        Some(expected_count(row, curve.g()).expect("node budget implies node surplus"))
    } else {
        None
    };
    Certificate {
        row,
        curve,
        exists_on_k3,
        cond_degree_window,
        cond_node_budget,
        cond_node_surplus,
        admissible,
        expected_count,
        genericity_note: GENERICITY_NOTE,
    }
}
