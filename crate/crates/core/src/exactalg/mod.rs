//! Exact arithmetic: rationals, sparse multivariate polynomials, reduced
//! rational functions, and random-point identity testing.

mod field;
mod identity;
mod poly;
mod rat;
mod ratfunc;
mod sample;
mod value;

pub use field::{product, sum, Field};
pub use identity::{identity_test, run_trials, Failure, IdentityReport, Witness, MAX_RESAMPLES};
pub use poly::{Monomial, Poly};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use sample::{sample_point, split_seed, Constraint, Point, RootSpec, VarTable};
pub use value::Value;
