use std::cmp::Ordering;
use std::fmt;

use num_bigint::Sign as BigSign;
use num_traits::{One, Zero};
use serde::Serialize;

use super::roots::{isolate_positive_roots, RootInterval};
use crate::{IntPolynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl From<BigSign> for Sign {
    fn from(s: BigSign) -> Sign {
        match s {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// An endpoint on `[0, inf]`: zero, an exact rational, an isolated
/// algebraic root, or infinity.
#[derive(Clone, Debug)]
pub enum Bound {
    Zero,
    Rational(Rational),
    Root(RootInterval),
    Infinity,
}

impl Bound {
    pub fn cmp_bound(&self, other: &Bound) -> Ordering {
        use Bound::*;
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, _) => Ordering::Greater,
            (_, Infinity) => Ordering::Less,
            (Zero, Zero) => Ordering::Equal,
            (Zero, Rational(x)) => crate::Rational::zero().cmp(x),
            (Rational(x), Zero) => x.cmp(&crate::Rational::zero()),
            (Zero, Root(_)) => Ordering::Less,
            (Root(_), Zero) => Ordering::Greater,
            (Rational(x), Rational(y)) => x.cmp(y),
            (Root(r), Rational(x)) => r.cmp_rational(x),
            (Rational(x), Root(r)) => r.cmp_rational(x).reverse(),
            (Root(r), Root(s)) => r.cmp_root(s),
        }
    }
}

/// Signs of a polynomial on the maximal open subintervals of `(0, inf)`
/// delimited by its distinct positive roots.
#[derive(Clone, Debug)]
pub struct SignProfile {
    poly: IntPolynomial,
    roots: Vec<RootInterval>,
    signs: Vec<Sign>,
}

/// One row of the serialized profile. Rows alternate between pieces, whose
/// rational interval lies inside the piece, and roots, whose interval
/// isolates the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub interval: [String; 2],
    pub sign: Sign,
}

impl SignProfile {
    pub fn of(p: &IntPolynomial) -> SignProfile {
        if p.is_zero() {
            return SignProfile {
                poly: p.clone(),
                roots: Vec::new(),
                signs: vec![Sign::Zero],
            };
        }
        let mut roots = isolate_positive_roots(p);
        let mut samples = Vec::with_capacity(roots.len() + 1);
        match roots.first_mut() {
            None => samples.push(Rational::one()),
            Some(first) => {
                while first.lo().is_zero() {
                    first.bisect();
                }
                samples.push(first.lo().clone());
            }
        }
        samples.extend(roots.iter().map(|r| r.hi().clone()));
        let signs = samples.iter().map(|x| Sign::from(p.sign_at(x))).collect();
        SignProfile {
            poly: p.clone(),
            roots,
            signs,
        }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn roots(&self) -> &[RootInterval] {
        &self.roots
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn is_identically_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::from(self.poly.sign_at(x))
    }

    /// The profile of the negated polynomial.
    pub fn negated(&self) -> SignProfile {
        SignProfile {
            poly: -&self.poly,
            roots: self.roots.clone(),
            signs: self.signs.iter().map(|s| s.negate()).collect(),
        }
    }

    fn piece_bounds(&self, j: usize) -> (Bound, Bound) {
        let left = match j {
            0 => Bound::Zero,
            _ => Bound::Root(self.roots[j - 1].clone()),
        };
        let right = match self.roots.get(j) {
            Some(r) => Bound::Root(r.clone()),
            None => Bound::Infinity,
        };
        (left, right)
    }

    /// Every sign the polynomial takes on the open interval `(lower, upper)`.
    pub fn signs_on(&self, lower: &Bound, upper: &Bound) -> Vec<Sign> {
        let mut out = Vec::new();
        for (j, &s) in self.signs.iter().enumerate() {
            let (left, right) = self.piece_bounds(j);
            if left.cmp_bound(upper) == Ordering::Less && right.cmp_bound(lower) == Ordering::Greater
            {
                out.push(s);
            }
        }
        for r in &self.roots {
            let b = Bound::Root(r.clone());
            if b.cmp_bound(lower) == Ordering::Greater && b.cmp_bound(upper) == Ordering::Less {
                out.push(Sign::Zero);
            }
        }
        out
    }

    pub fn is_nonpositive_on(&self, lower: &Bound, upper: &Bound) -> bool {
        self.signs_on(lower, upper)
            .iter()
            .all(|s| *s != Sign::Positive)
    }

    pub fn is_negative_on(&self, lower: &Bound, upper: &Bound) -> bool {
        self.signs_on(lower, upper)
            .iter()
            .all(|s| *s == Sign::Negative)
    }

    pub fn is_nonnegative_on(&self, lower: &Bound, upper: &Bound) -> bool {
        self.negated().is_nonpositive_on(lower, upper)
    }

    pub fn is_positive_on(&self, lower: &Bound, upper: &Bound) -> bool {
        self.negated().is_negative_on(lower, upper)
    }

    pub fn entries(&self) -> Vec<ProfileEntry> {
        let mut out = Vec::with_capacity(2 * self.roots.len() + 1);
        let mut left = "0".to_string();
        for (r, &s) in self.roots.iter().zip(&self.signs) {
            out.push(ProfileEntry {
                interval: [left, r.lo().to_string()],
                sign: s,
            });
            out.push(ProfileEntry {
                interval: [r.lo().to_string(), r.hi().to_string()],
                sign: Sign::Zero,
            });
            left = r.hi().to_string();
        }
        out.push(ProfileEntry {
            interval: [left, "inf".to_string()],
            sign: *self.signs.last().expect("at least one piece"),
        });
        out
    }
}
