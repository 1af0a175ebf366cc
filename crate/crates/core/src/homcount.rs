//! Graph homomorphism counts, tensor products and the Galvin bound.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::graph::{named, regular_degree, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("exponent of factor {index} must be at least 1")]
    ZeroExponent { index: usize },
    #[error("target has no factors")]
    EmptySpec,
    #[error("source graph is not {degree}-regular")]
    NotRegular { degree: usize },
}

/// A target graph given as a tensor product of powers,
/// `H_1^{e_1} x H_2^{e_2} x ...`, never materialized.
#[derive(Clone, Debug)]
pub struct HomTargetSpec {
    factors: Vec<(Graph, u32)>,
}

impl HomTargetSpec {
    pub fn new(factors: Vec<(Graph, u32)>) -> Result<Self, HomError> {
        if factors.is_empty() {
            return Err(HomError::EmptySpec);
        }
        if let Some(index) = factors.iter().position(|(_, e)| *e == 0) {
            return Err(HomError::ZeroExponent { index });
        }
        Ok(HomTargetSpec { factors })
    }

    pub fn single(h: Graph) -> Self {
        HomTargetSpec {
            factors: vec![(h, 1)],
        }
    }

    pub fn factors(&self) -> &[(Graph, u32)] {
        &self.factors
    }
}

fn bitsets(h: &Graph) -> (Vec<Vec<u64>>, Vec<u64>, Vec<u64>) {
    let words = h.order().div_ceil(64).max(1);
    let mut nbr = vec![vec![0u64; words]; h.order()];
    let mut loops = vec![0u64; words];
    let mut all = vec![0u64; words];
    for v in 0..h.order() {
        all[v / 64] |= 1 << (v % 64);
        for &w in h.neighbors(v) {
            nbr[v][w / 64] |= 1 << (w % 64);
        }
        if h.has_loop(v) {
            loops[v / 64] |= 1 << (v % 64);
        }
    }
    (nbr, loops, all)
}

struct Search<'a> {
    order: Vec<usize>,
    /// Positions in `order` of the earlier neighbors of each position.
    back: Vec<Vec<usize>>,
    need_loop: Vec<bool>,
    nbr: &'a [Vec<u64>],
    loops: &'a [u64],
    all: &'a [u64],
}

impl Search<'_> {
    fn count(&self, pos: usize, image: &mut [usize]) -> u128 {
        let mut cand = self.all.to_vec();
        for &j in &self.back[pos] {
            for (c, m) in cand.iter_mut().zip(&self.nbr[image[j]]) {
                *c &= m;
            }
        }
        if self.need_loop[pos] {
            for (c, m) in cand.iter_mut().zip(self.loops) {
                *c &= m;
            }
        }
        if pos + 1 == self.order.len() {
            return cand.iter().map(|w| u128::from(w.count_ones())).sum();
        }
        let mut total = 0u128;
        for (k, &word) in cand.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                image[pos] = 64 * k + w.trailing_zeros() as usize;
                w &= w - 1;
                total = total
                    .checked_add(self.count(pos + 1, image))
                    .expect("homomorphism count fits in 128 bits");
            }
        }
        total
    }
}

/// Connected components of `g`, each in breadth-first order from a vertex
/// of largest degree.
fn component_orders(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(order);
    }
    out
}

/// Number of maps `V(g) -> V(h)` sending edges to edges. A loop in `h`
/// makes a vertex adjacent to itself; a loop in `g` must land on one.
pub fn hom_count(g: &Graph, h: &Graph) -> BigUint {
    let (nbr, loops, all) = bitsets(h);
    let mut result = BigUint::one();
    for order in component_orders(g) {
        let mut pos = vec![usize::MAX; g.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                g.neighbors(v)
                    .iter()
                    .map(|&w| pos[w])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        let search = Search {
            need_loop: order.iter().map(|&v| g.has_loop(v)).collect(),
            order,
            back,
            nbr: &nbr,
            loops: &loops,
            all: &all,
        };
        let mut image = vec![0; search.order.len()];
        let c = search.count(0, &mut image);
        if c == 0 {
            return BigUint::zero();
        }
        result *= BigUint::from(c);
    }
    result
}

/// Categorical product: `(u, v)` is vertex `u * |h| + v`, adjacent to
/// `(u', v')` iff `u ~ u'` in `g` and `v ~ v'` in `h`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let looped = g.allows_loops() || h.allows_loops();
    let mut out = if looped {
        Graph::empty_looped(g.order() * m)
    } else {
        Graph::empty(g.order() * m)
    };
    for (u, u2) in g.edges() {
        for (v, v2) in h.edges() {
            out.insert_edge(u * m + v, u2 * m + v2).expect("valid product edge");
            out.insert_edge(u * m + v2, u2 * m + v).expect("valid product edge");
        }
    }
    out
}

/// `prod_i hom(g, H_i)^{e_i}`, equal to `hom(g, prod_i H_i^{e_i})`.
pub fn hom_count_factored(g: &Graph, spec: &HomTargetSpec) -> BigUint {
    spec.factors
        .iter()
        .map(|(h, e)| Pow::pow(hom_count(g, h), *e))
        .product()
}

/// Exact evaluation of
/// `hom(G,H) <= max(hom(K_{d,d},H)^{n/2d}, hom(K_{d+1},H)^{n/(d+1)})`
/// after raising everything to a common integer power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalvinReport {
    pub order: usize,
    pub degree: usize,
    pub hom_source: BigUint,
    pub hom_bipartite: BigUint,
    pub hom_clique: BigUint,
    /// Exponents applied to the three counts above, in the same order.
    pub exponents: [u64; 3],
    pub exceeds_bipartite: bool,
    pub exceeds_clique: bool,
}

impl GalvinReport {
    pub fn violated(&self) -> bool {
        self.exceeds_bipartite && self.exceeds_clique
    }
}

pub fn galvin_check(g: &Graph, spec: &HomTargetSpec, d: usize) -> Result<GalvinReport, HomError> {
    if d == 0 || regular_degree(g) != Some(d) {
        return Err(HomError::NotRegular { degree: d });
    }
    let n = g.order() as u64;
    let d64 = d as u64;
    let raw = [2 * d64 * (d64 + 1), n * (d64 + 1), 2 * d64 * n];
    let g_all = raw.iter().fold(0u64, |acc, &e| acc.gcd(&e));
    let exponents = raw.map(|e| e / g_all);
    let hom_source = hom_count_factored(g, spec);
    let hom_bipartite = hom_count_factored(&named::complete_bipartite(d, d), spec);
    let hom_clique = hom_count_factored(&named::complete(d + 1), spec);
    let lhs = Pow::pow(&hom_source, exponents[0]);
    let exceeds_bipartite = lhs > Pow::pow(&hom_bipartite, exponents[1]);
    let exceeds_clique = lhs > Pow::pow(&hom_clique, exponents[2]);
    Ok(GalvinReport {
        order: g.order(),
        degree: d,
        hom_source,
        hom_bipartite,
        hom_clique,
        exponents,
        exceeds_bipartite,
        exceeds_clique,
    })
}

/// Proper `q`-colorings, i.e. `hom(g, K_q)`.
pub fn coloring_count(g: &Graph, q: usize) -> BigUint {
    hom_count(g, &named::complete(q))
}
