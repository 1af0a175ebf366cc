use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ExactError;
use crate::{IntPolynomial, Rational};

/// Quotient of two integer polynomials.
///
/// Stored with the integer content of the pair divided out and a positive
/// leading coefficient in the denominator. Common polynomial factors are not
/// cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let g = num.content().gcd(&den.content());
        let flip = den.leading().is_some_and(Signed::is_negative);
        let scale = |p: &IntPolynomial| {
            let q = p.map(|c| c / &g);
            if flip {
                -q
            } else {
                q
            }
        };
        Ok(RationalFunction {
            num: scale(&num),
            den: scale(&den),
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// `None` where the denominator vanishes.
    pub fn evaluate(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.evaluate_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate_rational(x) / d)
    }

    /// Divides by a non-zero integer constant.
    pub fn div_int(&self, k: &BigInt) -> Result<Self, ExactError> {
        if k.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Self::new(self.num.clone(), self.den.scale(k))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("product of non-zero denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
