//! Independent-set counting by size.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::IntPolynomial;

/// Largest order the bitmask enumerator handles.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid multiplicity vector entry {entry} at position {position}")]
pub struct VectorParseError {
    pub position: usize,
    pub entry: String,
}

/// Counts `(s_0, s_1, ..., s_k)` where `s_i` is the multiplicity of the
/// value `i`. For a graph, `s_i` is the number of independent sets of size
/// `i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    counts: Vec<BigUint>,
}

impl MultiplicityVector {
    pub fn new(mut counts: Vec<BigUint>) -> MultiplicityVector {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        MultiplicityVector { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> MultiplicityVector {
        MultiplicityVector::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The count at index `k`, zero past the end.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Sum of all counts; for a graph this is `|I(G)|`.
    pub fn total_count(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Largest index with a non-zero count; the independence number for a
    /// graph-derived vector.
    pub fn independence_number(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// `sum_k s_k x^k`.
    pub fn partition_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.counts.iter().map(|c| BigInt::from(c.clone())).collect())
    }

    /// Vector of a disjoint union: the convolution of the two vectors.
    pub fn convolve(&self, other: &MultiplicityVector) -> MultiplicityVector {
        if self.is_empty() || other.is_empty() {
            return MultiplicityVector::default();
        }
        let mut out = vec![BigUint::zero(); self.len() + other.len() - 1];
        for (i, a) in self.counts.iter().enumerate() {
            for (j, b) in other.counts.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MultiplicityVector::new(out)
    }

    /// Zeroes every count below index `i`.
    pub fn restrict_at_least(&self, i: usize) -> MultiplicityVector {
        let mut counts = self.counts.clone();
        for c in counts.iter_mut().take(i) {
            *c = BigUint::zero();
        }
        MultiplicityVector::new(counts)
    }

    /// Keeps only the counts at indices `0..=i`.
    pub fn truncate_at_most(&self, i: usize) -> MultiplicityVector {
        MultiplicityVector::new(self.counts.iter().take(i + 1).cloned().collect())
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiplicityVector {
    type Err = VectorParseError;

    /// Comma-separated decimal integers; whitespace around entries is
    /// ignored, as are surrounding parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(MultiplicityVector::default());
        }
        let counts = s
            .split(',')
            .enumerate()
            .map(|(position, e)| {
                e.trim().parse::<BigUint>().map_err(|_| VectorParseError {
                    position,
                    entry: e.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiplicityVector::new(counts))
    }
}

struct Counter {
    nbr: Vec<u64>,
    counts: Vec<u128>,
}

impl Counter {
    /// Each leaf is one independent set: every vertex in `avail` is either
    /// excluded or included, and including removes its neighbors.
    fn branch(&mut self, avail: u64, size: usize) {
        if avail == 0 {
            self.counts[size] += 1;
            return;
        }
        let v = avail.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.branch(avail & !bit, size);
        self.branch(avail & !bit & !self.nbr[v], size + 1);
    }
}

/// The multiplicity vector of a loop-free graph with at most
/// [`MAX_ORDER`] vertices.
pub fn enumerate_independent_sets(g: &Graph) -> Result<MultiplicityVector, GraphError> {
    if g.has_loops() {
        return Err(GraphError::HasLoops);
    }
    let n = g.order();
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let nbr = order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << pos[w]))
        .collect();
    let mut counter = Counter {
        nbr,
        counts: vec![0; n + 1],
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    counter.branch(all, 0);
    Ok(MultiplicityVector::new(
        counter.counts.into_iter().map(BigUint::from).collect(),
    ))
}
