//! Exact coefficient tower and series kernels.

pub mod laurent;
pub mod linalg;
pub mod mpoly;
pub mod multiseries;
pub mod ratfun;
pub mod ring;
pub mod series;

pub use laurent::{LaurentPoly, Var};
pub use mpoly::MPoly;
pub use multiseries::MultiSeries;
pub use ratfun::RationalFunction;
pub use ring::{q, qf, Field, Ring, Q};
pub use series::{
    binomial_series, exp_series, exp_w_coefficients, inv_zeta, lagrange_revert, pow_q, zeta_over_arg, zeta_ratio, zeta_series, Series,
    USeries, EXACT,
};
