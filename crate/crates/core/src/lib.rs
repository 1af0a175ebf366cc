//! Exact independence polynomials, occupancy fractions of the hard-core
//! model, and graph homomorphism counts.
//!
//! Polynomial arithmetic is generic over the coefficient ring
//! ([`Polynomial<T>`]); the certified pipeline runs on the aliases below,
//! which use arbitrary-precision integers and rationals throughout.

pub mod exactalg;
pub mod graph;
pub mod homcount;
pub mod indpoly;
pub mod occupancy;

pub use exactalg::Polynomial;

/// Integer-coefficient polynomial; the type every verdict is computed on.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;
/// Exact normalized rational number.
pub type Rational = num_rational::BigRational;
/// Rational-coefficient polynomial.
pub type RatPolynomial = Polynomial<Rational>;
/// Machine-float polynomial for quick plotting or sampling.
pub type FloatPolynomial = Polynomial<f64>;
