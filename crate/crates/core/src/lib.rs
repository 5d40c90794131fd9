//! Exact computation of colored HOMFLY-PT data for torus knots T[Q,P]
//! through three independent routes, plus verification of the Jacobi,
//! spectral-curve, quasi-polynomiality and quantum-curve statements built on
//! top of them.

pub mod algebra;
pub mod error;
pub mod fermion;
pub mod homfly;
pub mod jacobi;
pub mod knot;
pub mod par;
pub mod partitions;
pub mod qcurve;
pub mod quasipoly;
pub mod report;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};
