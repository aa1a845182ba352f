//! Two-term Weyl asymptotics for the linear elasticity operator.
//!
//! The crate computes the Weyl constant `a` and the boundary coefficients
//! `b_dir`, `b_free` in any dimension, the spectral shift functions they come
//! from, and exact eigenvalue counting functions for the unit disk and flat
//! cylinders against which the asymptotics can be checked.

pub mod error;
pub mod material;
pub mod numerics;
pub mod coefficients;
pub mod rayleigh;
pub mod shift;
pub mod spectra;
pub mod cli;

pub use error::{Error, Result};
pub use material::{Admissibility, Bc, Material};
