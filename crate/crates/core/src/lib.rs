//! Finite simplicial complexes, largeness and SD₂* checks, Sperner colorings
//! of 3-balls, and a certificate-producing quasi-Helly procedure for four
//! subcomplexes.

pub mod checkers;
pub mod complex;
pub mod error;
pub mod generate;
pub mod helly;
pub mod io;
pub mod sperner;
pub mod verify;

pub use complex::{flag_complex, rips_complex, simplex, Complex, FiniteMetric, Graph, Simplex, Vertex};
pub use error::{Error, HypothesisFailure, Result};
