//! Exact symbolic kernel for weight-two regulator computations over
//! square-zero ring extensions.
//!
//! Everything is computed over the rationals with zero tolerance: sparse
//! multivariate polynomials, normalized rational functions, the square-zero
//! ring `A = Ā ⊕ I`, the truncated symmetric algebra `S•(I) mod Ĩ⁴`, formal
//! Bloch sums with their differential, the splitting-dependent dilogarithm
//! branch with values in `S³(I)`, the homotopy map comparing branches, and
//! chain-level Čech assembly over covers that differ by their splittings.

pub mod bloch;
pub mod cech;
pub mod error;
pub mod gcdfree;
pub mod gen;
pub mod homotopy;
pub mod linear;
pub mod poly;
pub mod ratfunc;
pub mod regulator;
pub mod squarezero;
pub mod symalg;

pub use error::{Error, Result};
pub use poly::{Monomial, Poly, Rat};
pub use ratfunc::RatFunc;
