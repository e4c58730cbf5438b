//! Exact arithmetic for monogeneity questions about reciprocal integer
//! polynomials: the Chebyshev transform to half-degree companions,
//! discriminant identities, Dedekind index tests, quintic Galois groups, and
//! sweeps over explicit families.

pub mod arith;
pub mod cli;
pub mod disc;
pub mod error;
pub mod families;
pub mod galois;
pub mod modp;
pub mod monogenic;
pub mod poly;
mod report;

pub use error::{Error, Result};
pub use poly::IntPoly;
