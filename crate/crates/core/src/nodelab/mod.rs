//! The finite-field geometry lab: exact realization of node loci as
//! plane-curve intersections, independence-of-conditions rank checks, and
//! polynomial null-space sections.
//!
//! Genericity assumptions are realized by seeded uniform sampling over a
//! large prime field (default 10007). Non-generic draws (shared components,
//! degenerate charts, roots at infinity) are detected exactly and retried
//! within an explicit budget; every operation is a pure function of its
//! inputs and seed.

use thiserror::Error;

pub mod extpoly;
pub mod field;
pub mod form;
pub mod fppoly;
pub mod intersect;
pub mod kernel;
pub mod resultant;
mod scalar;
pub mod spark;

pub use field::{make_field, ExtElem, FieldContext, Frobenius, EXTENSION_CAP, MAX_PRIME};
pub use form::{
    format_form, monomial_count, monomials_lex, parse_form, random_form, HomogeneousForm,
};
pub use intersect::{intersect_plane_curves, Intersection, ProjPoint};
pub use kernel::{kernel_section, random_alphas};
pub use resultant::{resultant, ResultantOutcome};
pub use spark::{evaluation_matrix, full_spark, independence_check, kernel_basis, rank, SparkReport};

pub use scalar::is_prime;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NodeLabError {
    #[error("not an odd prime: {0}")]
    NotPrime(u64),
    #[error("prime too large: {0} (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("extension degree must be positive")]
    ZeroExtensionDegree,
    #[error("no irreducible modulus of degree {degree} over F_{p} found in {attempts} attempts")]
    ModulusSearch { p: u64, degree: usize, attempts: usize },
    #[error("the two forms share a common component")]
    CommonComponent,
    #[error("degenerate chart: cannot eliminate the chosen variable")]
    DegenerateChart,
    #[error("chart retry budget ({0}) exhausted")]
    RetryBudget(u32),
    #[error("points must be distinct with multiplicity one")]
    RepeatedPoint,
    #[error("required extension degree {needed} exceeds the cap {cap}")]
    ExtensionCap { needed: usize, cap: usize },
    #[error("prime {p} too small: interpolation needs {needed} sample points")]
    PrimeTooSmall { p: u64, needed: u64 },
    #[error("malformed form data: {0}")]
    FormShape(String),
    #[error("null-space verification failed: arithmetic defect")]
    KernelIdentity,
    #[error("spark level {m} exceeds min(rows, cols) = {limit}")]
    SparkBound { m: usize, limit: usize },
}
