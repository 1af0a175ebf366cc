//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use occulab::graph::Graph;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_looped_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty_looped(n);
    for u in 0..n {
        for v in u..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Independent sets by size, checking every subset.
pub fn subset_counts(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n + 1];
    'subsets: for mask in 0u64..1 << n {
        for (u, v) in g.edges() {
            if mask >> u & 1 == 1 && mask >> v & 1 == 1 {
                continue 'subsets;
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// Homomorphisms by trying every map.
pub fn brute_hom(g: &Graph, h: &Graph) -> u64 {
    let (n, m) = (g.order(), h.order());
    if n == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    let mut map = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            map[k] += 1;
            if map[k] < m {
                break;
            }
            map[k] = 0;
            k += 1;
        }
    }
}

/// Chromatic polynomial value at `q` by deletion and contraction.
pub fn chromatic(n: usize, edges: &[(usize, usize)], q: i64) -> BigInt {
    let Some(&(u, v)) = edges.first() else {
        return BigInt::from(q).pow(n as u32);
    };
    let rest = &edges[1..];
    let deleted = chromatic(n, rest, q);
    // merge v into u, renumber n-1 into v's slot
    let relabel = |w: usize| {
        let w = if w == v { u } else { w };
        if w == n - 1 {
            v
        } else {
            w
        }
    };
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in rest {
        let (a, b) = (relabel(a), relabel(b));
        if a == b {
            return deleted;
        }
        let e = (a.min(b), a.max(b));
        if !merged.contains(&e) {
            merged.push(e);
        }
    }
    deleted - chromatic(n - 1, &merged, q)
}

fn shortest_cycle(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    best
}

fn connected(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Labeled connected `d`-regular graphs on `n` vertices, bucketed by girth
/// (index `g` counts graphs of girth exactly `g`; forests land at the end).
/// Every vertex pair is decided in turn, pruned only by degree.
pub fn labeled_regular_by_girth(n: usize, d: usize) -> Vec<u64> {
    struct State {
        n: usize,
        d: usize,
        pairs: Vec<(usize, usize)>,
        deg: Vec<usize>,
        adj: Vec<Vec<usize>>,
        buckets: Vec<u64>,
    }
    fn go(s: &mut State, k: usize) {
        if k == s.pairs.len() {
            if s.deg.iter().all(|&x| x == s.d) && connected(s.n, &s.adj) {
                let g = shortest_cycle(s.n, &s.adj).min(s.n + 1);
                s.buckets[g] += 1;
            }
            return;
        }
        let (u, v) = s.pairs[k];
        // once the last pair of u is passed, u must be saturated
        let last_of_u = v == s.n - 1;
        if s.deg[u] < s.d && s.deg[v] < s.d {
            s.deg[u] += 1;
            s.deg[v] += 1;
            s.adj[u].push(v);
            s.adj[v].push(u);
            if !last_of_u || s.deg[u] == s.d {
                go(s, k + 1);
            }
            s.adj[u].pop();
            s.adj[v].pop();
            s.deg[u] -= 1;
            s.deg[v] -= 1;
        }
        if !last_of_u || s.deg[u] == s.d {
            go(s, k + 1);
        }
    }
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut s = State {
        n,
        d,
        pairs,
        deg: vec![0; n],
        adj: vec![Vec::new(); n],
        buckets: vec![0; n + 2],
    };
    if n > 0 {
        go(&mut s, 0);
    }
    s.buckets
}

/// Automorphisms by extending partial vertex maps one vertex at a time.
pub fn brute_automorphisms(g: &Graph) -> u64 {
    fn extend(g: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = map.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used[w] || g.degree(w) != g.degree(v) || g.has_loop(w) != g.has_loop(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                total += extend(g, map, used);
                map.pop();
                used[w] = false;
            }
        }
        total
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.order()])
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `sum_k k c_k x^k / sum_k c_k x^k` straight from the definition.
pub fn mean_at(counts: &[BigUint], x: &BigRational) -> BigRational {
    let mut num = BigRational::zero();
    let mut den = BigRational::zero();
    let mut power = BigRational::one();
    for (k, c) in counts.iter().enumerate() {
        let term = &power * BigRational::from_integer(BigInt::from(c.clone()));
        num += &term * BigRational::from_integer(BigInt::from(k));
        den += term;
        power *= x;
    }
    num / den
}

fn horner_sign(coeffs: &[i64], x: &BigRational) -> i32 {
    let mut acc = BigRational::zero();
    for &c in coeffs.iter().rev() {
        acc = acc * x + BigRational::from_integer(BigInt::from(c));
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of the polynomial at `x = k / 2^shift`, in floating point when that
/// is clearly safe and exactly otherwise.
fn grid_sign(coeffs: &[i64], k: u64, shift: u32) -> i32 {
    let x = k as f64 / (1u64 << shift) as f64;
    let mut val = 0.0f64;
    let mut mag = 0.0f64;
    for &c in coeffs.iter().rev() {
        val = val * x + c as f64;
        mag = mag * x + (c as f64).abs();
    }
    if val.abs() > mag * 1e-9 {
        return if val > 0.0 { 1 } else { -1 };
    }
    let exact = BigRational::new(BigInt::from(k), BigInt::from(1u64 << shift));
    horner_sign(coeffs, &exact)
}

/// Distinct positive roots found by scanning a fine dyadic grid for sign
/// changes. Even-multiplicity roots are invisible to the scan, so callers
/// pass a squarefree polynomial. Roots are bounded by `1 + max|c_i|/|c_d|`.
pub fn positive_roots_by_sampling(coeffs: &[i64]) -> usize {
    let lead = coeffs.iter().rev().find(|&&c| c != 0).copied().unwrap_or(0);
    if lead == 0 {
        return 0;
    }
    let bound = 1 + coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap() / lead.unsigned_abs() + 1;
    let shift = 14u32;
    let steps = bound << shift;
    let mut count = 0;
    let mut prev = 0i32;
    for k in 1..=steps {
        let s = grid_sign(coeffs, k, shift);
        if s == 0 {
            count += 1;
            prev = 0;
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}
