//! Exact-arithmetic certification of isolated smooth curves in Calabi-Yau
//! complete-intersection threefolds, plus a finite-field geometry lab for the
//! construction's node loci.
//!
//! The crate has two halves:
//!
//! * [`catalog`], [`rules`] and [`enumerate`]: the nine construction rows,
//!   the integer predicates deciding which `(degree, genus)` pairs the
//!   degeneration argument certifies, expected curve counts, and a verifier
//!   that reproduces the published tables cell-for-cell.
//! * [`nodelab`]: exact finite-field geometry at desk scale — plane-curve
//!   intersections via resultants, evaluation matrices and full-spark rank
//!   checks for "points imposing independent conditions", and the null-space
//!   section of a coefficient-form matrix.
//!
//! The [`cli`] module exposes all of it as a deterministic command-line tool.

pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod nodelab;
pub mod rules;
