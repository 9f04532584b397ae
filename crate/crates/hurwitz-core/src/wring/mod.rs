//! The polynomial ring in unordered edge variables `w[i,j] = w[j,i]`,
//! unlabeled graph classes, the expansion of a graph into its symmetric
//! polynomial, coefficient collection, and the ambient-size projection.

mod graph;
mod poly;

pub use graph::{collect, GraphClass, GraphSeries};
pub use poly::{EdgeVar, Monomial, WPolynomial};
