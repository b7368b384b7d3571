//! Exact tangent and secant variety computations.
pub mod algebra;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod localgeom;
pub mod random;
pub mod runner;
pub mod tangential;
pub mod varieties;

pub use error::{Error, Result};
