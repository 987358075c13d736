//! Exact computer algebra for diagram categories (Brauer, Temperley-Lieb,
//! partition, directed Brauer), their evaluation functors onto tensor
//! spaces over the rationals, and cyclic sieving verification.
//!
//! All arithmetic is exact: integer polynomials in `q`, rational
//! symmetric functions in the power-sum basis, rational linear algebra.

pub mod branching;
pub mod csp;
pub mod diagalg;
pub mod diagrams;
pub mod error;
pub mod evaluation;
pub mod matrix;
pub mod qpoly;
pub mod sampling;
pub mod symfunc;
pub mod tableaux;

pub use diagalg::DiagElement;
pub use diagrams::{BrauerDiagram, DirectedDiagram, PartitionDiagram};
pub use error::{Error, Result};
pub use evaluation::Evaluator;
pub use matrix::ExactMatrix;
pub use qpoly::QPoly;
pub use symfunc::SymFunc;
pub use tableaux::Partition;
