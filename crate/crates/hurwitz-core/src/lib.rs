//! Exact computation of Hurwitz polynomials of transposition factorizations,
//! two independent ways, together with the graph-embedding counts they control.
//!
//! Everything numerical is exact: coefficients are arbitrary-precision
//! rationals, so identity checks are bit-exact equality of polynomials.
//! Floating point appears only in the numeric eigenvalue cross-check
//! ([`spectral::eval_sumsign`]).
//!
//! Module map:
//!
//! - [`perm`] — symmetric group arithmetic (permutations, transpositions,
//!   cycle types, cycle-notation parsing).
//! - [`wring`] — the ring of polynomials in unordered edge variables
//!   `w[i,j]`, unlabeled graph classes, the expansion `G -> G_n(w)` and its
//!   inverse, and the ambient-size projections.
//! - [`oracle`] — brute-force enumeration of transposition tuples; the
//!   ground truth every closed form is checked against.
//! - [`spectral`] — Bernoulli numbers, the symbolic graph Laplacian, the
//!   tree polynomial by matrix-tree and by Prüfer enumeration, the
//!   `r`/`R` families, the product formula, and the numeric
//!   eigenvalue evaluation.
//! - [`surfaces`] — half-edge multigraphs, rotation systems, face tracing,
//!   embeddings of edge numberings, skeletons, decorations.
//! - [`cutjoin`] — the truncated generating function in `p`-variables and
//!   the cut-and-join differential equation.

pub mod cutjoin;
pub mod oracle;
pub mod perm;
pub mod rat;
pub mod rng;
pub mod spectral;
pub mod surfaces;
pub mod wring;

mod error;

pub use error::{Error, Result};
pub use rat::Rat;
