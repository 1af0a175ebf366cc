//! Exact polynomial arithmetic, rational functions and certified
//! positive-root isolation.

mod poly;
mod profile;
mod ratfunc;
mod roots;

pub use poly::Polynomial;
pub use profile::{Bound, ProfileEntry, Sign, SignProfile};
pub use ratfunc::RationalFunction;
pub use roots::{
    isolate_positive_roots, refine_root, sturm_count, RootInterval, SturmSequence,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("interval endpoints must satisfy a < b")]
    EmptyInterval,
    #[error("interval does not bracket a sign change")]
    SignCondition,
    #[error("denominator vanishes")]
    ZeroDenominator,
    #[error("invalid coefficient {0:?}")]
    Parse(String),
}
