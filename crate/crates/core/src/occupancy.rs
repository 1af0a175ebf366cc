//! Expected values and occupancy fractions of weighted multiplicity sets,
//! and exact comparisons between them over all positive fugacities.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Pow;
use thiserror::Error;

use crate::exactalg::{RationalFunction, SignProfile};
use crate::graph::{Graph, GraphError};
use crate::indpoly::{enumerate_independent_sets, MultiplicityVector};
use crate::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OccupancyError {
    #[error("multiplicity vector is empty")]
    EmptyVector,
    #[error("order {order} is below the largest represented size {largest}")]
    OrderTooSmall { order: usize, largest: usize },
    #[error("operation needs the vertex count")]
    MissingOrder,
    #[error("orders differ: {0:?} vs {1:?}")]
    MixedOrders(Option<usize>, Option<usize>),
    #[error("index {index} out of range for a vector of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dominance needs a non-zero count at index 0")]
    ZeroLeadingCount,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A multiplicity vector, optionally tied to the order of the graph it
/// came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedSet {
    vector: MultiplicityVector,
    order: Option<usize>,
}

/// Which extreme [`critical_filter`] is looking for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

impl WeightedSet {
    pub fn new(vector: MultiplicityVector, order: Option<usize>) -> Result<Self, OccupancyError> {
        let largest = vector.independence_number().ok_or(OccupancyError::EmptyVector)?;
        if let Some(order) = order {
            if order < largest {
                return Err(OccupancyError::OrderTooSmall { order, largest });
            }
        }
        Ok(WeightedSet { vector, order })
    }

    pub fn with_order(vector: MultiplicityVector, order: usize) -> Result<Self, OccupancyError> {
        WeightedSet::new(vector, Some(order))
    }

    pub fn from_graph(g: &Graph) -> Result<Self, OccupancyError> {
        WeightedSet::with_order(enumerate_independent_sets(g)?, g.order())
    }

    pub fn vector(&self) -> &MultiplicityVector {
        &self.vector
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    fn require_order(&self) -> Result<usize, OccupancyError> {
        self.order.ok_or(OccupancyError::MissingOrder)
    }

    pub fn partition_polynomial(&self) -> IntPolynomial {
        self.vector.partition_polynomial()
    }

    /// `x P'(x) / P(x)`.
    pub fn expected_value(&self) -> RationalFunction {
        let p = self.partition_polynomial();
        let num = &IntPolynomial::x() * &p.derivative();
        RationalFunction::new(num, p).expect("vector is non-empty")
    }

    /// `x P'(x) / (n P(x))`.
    pub fn occupancy_fraction(&self) -> Result<RationalFunction, OccupancyError> {
        let n = self.require_order()?;
        Ok(self
            .expected_value()
            .div_int(&BigInt::from(n))
            .expect("positive order"))
    }

    /// Zeroes the counts below index `i`; the order is kept.
    pub fn restrict_at_least(&self, i: usize) -> Result<WeightedSet, OccupancyError> {
        self.check_index(i)?;
        Ok(WeightedSet {
            vector: self.vector.restrict_at_least(i),
            order: self.order,
        })
    }

    /// Drops the counts above index `i`; the order is kept.
    pub fn truncate_at_most(&self, i: usize) -> Result<WeightedSet, OccupancyError> {
        self.check_index(i)?;
        Ok(WeightedSet {
            vector: self.vector.truncate_at_most(i),
            order: self.order,
        })
    }

    fn check_index(&self, i: usize) -> Result<(), OccupancyError> {
        if i >= self.vector.len() {
            return Err(OccupancyError::IndexOutOfRange {
                index: i,
                len: self.vector.len(),
            });
        }
        Ok(())
    }
}

fn same_order(a: &WeightedSet, b: &WeightedSet) -> Result<(), OccupancyError> {
    match (a.order, b.order) {
        (Some(x), Some(y)) if x != y => Err(OccupancyError::MixedOrders(a.order, b.order)),
        _ => Ok(()),
    }
}

/// Whether `a` has pointwise smaller-or-equal consecutive ratios than `b`:
/// `len(a) <= len(b)` and `a_i b_{i-1} <= b_i a_{i-1}` for every
/// `1 <= i <= len(a) - 1`. When it holds, `E_a <= E_b` on `(0, inf)`.
pub fn ratio_dominance(a: &WeightedSet, b: &WeightedSet) -> Result<bool, OccupancyError> {
    same_order(a, b)?;
    let (va, vb) = (a.vector.counts(), b.vector.counts());
    if va[0] == 0u32.into() || vb[0] == 0u32.into() {
        return Err(OccupancyError::ZeroLeadingCount);
    }
    if va.len() > vb.len() {
        return Ok(false);
    }
    Ok((1..va.len()).all(|i| &va[i] * &vb[i - 1] <= &vb[i] * &va[i - 1]))
}

/// Divides out powers of `x` and the positive content; neither changes the
/// sign on `(0, inf)`.
fn reduce(p: &IntPolynomial) -> IntPolynomial {
    p.strip_zero_roots().primitive_part()
}

/// Sign profile of `alpha_a - alpha_b` on `(0, inf)`, carried by the
/// reduced numerator of `n_b P'_a P_b - n_a P'_b P_a`.
pub fn compare_occupancy(a: &WeightedSet, b: &WeightedSet) -> Result<SignProfile, OccupancyError> {
    let (na, nb) = (BigInt::from(a.require_order()?), BigInt::from(b.require_order()?));
    let (pa, pb) = (a.partition_polynomial(), b.partition_polynomial());
    let lhs = (&pa.derivative() * &pb).scale(&nb);
    let rhs = (&pb.derivative() * &pa).scale(&na);
    Ok(SignProfile::of(&reduce(&(&lhs - &rhs))))
}

/// Sign profile of `P_a^(1/n_a) - P_b^(1/n_b)` on `(0, inf)`, carried by
/// `P_a^(n_b/g) - P_b^(n_a/g)` with `g = gcd(n_a, n_b)`.
pub fn compare_normalized_partition(
    a: &WeightedSet,
    b: &WeightedSet,
) -> Result<SignProfile, OccupancyError> {
    let (na, nb) = (a.require_order()?, b.require_order()?);
    let g = na.gcd(&nb).max(1);
    let lhs = a.partition_polynomial().pow((nb / g) as u32);
    let rhs = b.partition_polynomial().pow((na / g) as u32);
    Ok(SignProfile::of(&reduce(&(&lhs - &rhs))))
}

/// Compares `|I_a|^(1/n_a)` with `|I_b|^(1/n_b)` exactly.
pub fn log_normalized_count_compare(
    a: &WeightedSet,
    b: &WeightedSet,
) -> Result<Ordering, OccupancyError> {
    let (na, nb) = (a.require_order()?, b.require_order()?);
    let g = na.gcd(&nb).max(1);
    let lhs = Pow::pow(a.vector.total_count(), nb / g);
    let rhs = Pow::pow(b.vector.total_count(), na / g);
    Ok(lhs.cmp(&rhs))
}

/// Indices of the sets that can still be extremal. For [`Extremum::Min`] a
/// set is dropped when another set ratio-dominates it from below; equal
/// vectors keep their first occurrence. [`Extremum::Max`] is the mirror
/// image.
pub fn critical_filter(sets: &[WeightedSet], mode: Extremum) -> Result<Vec<usize>, OccupancyError> {
    if let Some(first) = sets.first() {
        if let Some(bad) = sets.iter().find(|s| s.order != first.order) {
            return Err(OccupancyError::MixedOrders(first.order, bad.order));
        }
    }
    let below = |t: &WeightedSet, s: &WeightedSet| match mode {
        Extremum::Min => ratio_dominance(t, s),
        Extremum::Max => ratio_dominance(s, t),
    };
    let mut keep = Vec::new();
    'sets: for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate() {
            if i != j && below(t, s)? && (!below(s, t)? || j < i) {
                continue 'sets;
            }
        }
        keep.push(i);
    }
    Ok(keep)
}
