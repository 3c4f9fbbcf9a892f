//! Hahn polynomials with negative integer parameters on polyhedral lattice
//! domains, computed and checked with exact rational arithmetic.

pub mod bispectral;
pub mod cli;
pub mod error;
pub mod exact;
pub mod hahn1d;
pub mod hahnmd;
pub mod lattice;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{EvalResult, Q};
pub use poly::PolyQ;
