//! Exact arithmetic for Grover walk operators on finite graphs: transition
//! matrices, positive supports, Ihara and cube-support zeta functions, and
//! brute-force cycle oracles.

pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod numeric;
pub mod operators;
pub mod poly;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};
pub use graph::{build_arc_table, compute_stats, ArcTable, Graph, GraphStats};
pub use matrix::{IntMatrix, Matrix, RatMatrix, Rational};
pub use poly::Poly;
