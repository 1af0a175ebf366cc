//! Sturm sequences and bisection-based isolation of positive real roots.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{ToPrimitive, Zero};

use super::ExactError;
use crate::{IntPolynomial, Rational};

/// Sturm sequence of the squarefree part of a polynomial, built with
/// primitive pseudo-remainders so every term stays in `Z[x]`.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Result<Self, ExactError> {
        if p.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let sqf = p.squarefree_part();
        let mut chain = vec![sqf.clone()];
        if sqf.degree() > Some(0) {
            chain.push(sqf.derivative().primitive_part());
            loop {
                let n = chain.len();
                let r = chain[n - 2].positive_pseudo_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-r.primitive_part());
            }
        }
        Ok(SturmSequence { chain })
    }

    /// The squarefree polynomial the chain starts from.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`, zeros dropped.
    pub fn variations(&self, x: &Rational) -> usize {
        let signs: Vec<BigSign> = self
            .chain
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|s| *s != BigSign::NoSign)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in the open interval `(a, b)`.
    ///
    /// With zeros dropped, the variation count at a root equals the count just
    /// to its right, so `V(a) - V(b)` counts roots in `(a, b]`; a root at `b`
    /// is then subtracted.
    pub fn count_between(&self, a: &Rational, b: &Rational) -> Result<usize, ExactError> {
        if a >= b {
            return Err(ExactError::EmptyInterval);
        }
        let at_b = usize::from(self.base().sign_at(b) == BigSign::NoSign);
        Ok(self.variations(a) - self.variations(b) - at_b)
    }
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn sturm_count(p: &IntPolynomial, a: &Rational, b: &Rational) -> Result<usize, ExactError> {
    SturmSequence::new(p)?.count_between(a, b)
}

/// Open interval `(lo, hi)` holding exactly one root of a squarefree
/// polynomial that is non-zero, with opposite signs, at both endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    poly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

impl RootInterval {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Squarefree defining polynomial.
    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Halves the interval, keeping the half with the sign change.
    pub fn bisect(&mut self) {
        let m = split_point(&self.poly, &self.lo, &self.hi);
        if self.poly.sign_at(&m) == self.poly.sign_at(&self.lo) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    /// Position of the root relative to a rational point.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(x) {
            BigSign::NoSign => Ordering::Equal,
            s if s == self.poly.sign_at(&self.lo) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Exact comparison of two algebraic roots.
    ///
    /// The roots coincide iff the gcd of the defining polynomials has a root
    /// in the overlap of the two intervals; otherwise both intervals are
    /// bisected until they separate.
    pub fn cmp_root(&self, other: &RootInterval) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let mut may_coincide = true;
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if may_coincide {
                let g = a.poly.gcd(&b.poly);
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if g.degree() > Some(0) && sturm_count(&g, lo, hi) == Ok(1) {
                    return Ordering::Equal;
                }
                may_coincide = false;
            }
            a.bisect();
            b.bisect();
        }
    }
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish. Prefers the
/// midpoint; `p` has finitely many rational roots so the search terminates.
fn split_point(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut den = 2u32;
    loop {
        for k in 1..den {
            let t = Rational::new(BigInt::from(k), BigInt::from(den));
            let m = lo + &width * t;
            if p.sign_at(&m) != BigSign::NoSign {
                return m;
            }
        }
        den += 1;
    }
}

/// Isolating intervals for every distinct root in `(0, inf)`, ascending.
pub fn isolate_positive_roots(p: &IntPolynomial) -> Vec<RootInterval> {
    if p.is_zero() {
        return Vec::new();
    }
    let seq = SturmSequence::new(&p.strip_zero_roots()).expect("non-zero");
    let poly = seq.base().clone();
    if poly.degree() == Some(0) {
        return Vec::new();
    }
    let bound = Rational::from_integer(poly.cauchy_bound());
    let mut out = Vec::new();
    let mut stack = vec![(Rational::zero(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = seq.count_between(&lo, &hi).expect("lo < hi");
        match count {
            0 => {}
            1 => out.push(RootInterval {
                poly: poly.clone(),
                lo,
                hi,
            }),
            _ => {
                let m = split_point(&poly, &lo, &hi);
                stack.push((m.clone(), hi));
                stack.push((lo, m));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Bisects a sign-change bracket of `p` down to a point within `tol` of a root.
pub fn refine_root(
    p: &IntPolynomial,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> Result<Rational, ExactError> {
    if lo >= hi {
        return Err(ExactError::EmptyInterval);
    }
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let sqf = p.squarefree_part();
    let (s_lo, s_hi) = (sqf.sign_at(lo), sqf.sign_at(hi));
    if s_lo == BigSign::NoSign {
        return Ok(lo.clone());
    }
    if s_hi == BigSign::NoSign {
        return Ok(hi.clone());
    }
    if s_lo == s_hi {
        return Err(ExactError::SignCondition);
    }
    let two = Rational::from_integer(BigInt::from(2));
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    while &hi - &lo > tol * &two {
        let m = (&lo + &hi) / &two;
        match sqf.sign_at(&m) {
            BigSign::NoSign => return Ok(m),
            s if s == s_lo => lo = m,
            _ => hi = m,
        }
    }
    Ok((lo + hi) / two)
}
