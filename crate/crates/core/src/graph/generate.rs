//! Small-order generation of connected regular graphs.
//!
//! Vertices are saturated in label order. Vertex `v` takes its missing
//! neighbors as an increasing set from the vertices above it, where at most
//! the smallest untouched vertex may be used next. Every vertex other than 0
//! therefore receives its first edge from an earlier vertex, so reaching an
//! untouched vertex means the graph is disconnected. Isomorphic copies are
//! removed through canonical forms.

use std::collections::HashSet;

use super::canon::canonical_form;
use super::{Graph, GraphError};

const MAX_ORDER: usize = 64;

struct Generator {
    n: usize,
    d: usize,
    girth_min: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    touched: usize,
    seen: HashSet<super::CanonicalForm>,
    out: Vec<Graph>,
}

impl Generator {
    /// Whether `w` is within distance `girth_min - 2` of `v`, in which case
    /// an edge `vw` would close a cycle that is too short.
    fn too_close(&self, v: usize, w: usize) -> bool {
        if self.girth_min <= 3 {
            return false;
        }
        let mut reach = 1u64 << v;
        let mut frontier = reach;
        for _ in 0..self.girth_min - 2 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[x];
            }
            frontier = next & !reach;
            reach |= next;
            if reach >> w & 1 == 1 {
                return true;
            }
            if frontier == 0 {
                break;
            }
        }
        false
    }

    fn link(&mut self, v: usize, w: usize) {
        self.adj[v] |= 1 << w;
        self.adj[w] |= 1 << v;
        self.deg[v] += 1;
        self.deg[w] += 1;
    }

    fn unlink(&mut self, v: usize, w: usize) {
        self.adj[v] &= !(1 << w);
        self.adj[w] &= !(1 << v);
        self.deg[v] -= 1;
        self.deg[w] -= 1;
    }

    fn saturate_from(&mut self, mut v: usize) {
        while v < self.n && self.deg[v] == self.d {
            v += 1;
        }
        if v == self.n {
            self.emit();
            return;
        }
        if v > 0 && self.deg[v] == 0 {
            return;
        }
        self.choose(v, v + 1, self.d - self.deg[v]);
    }

    fn choose(&mut self, v: usize, from: usize, need: usize) {
        if need == 0 {
            self.saturate_from(v + 1);
            return;
        }
        let limit = self.touched.min(self.n - 1);
        for w in from..=limit {
            if self.deg[w] == self.d || self.too_close(v, w) {
                continue;
            }
            let fresh = w == self.touched;
            if fresh {
                self.touched += 1;
            }
            self.link(v, w);
            self.choose(v, w + 1, need - 1);
            self.unlink(v, w);
            if fresh {
                self.touched -= 1;
            }
        }
    }

    fn emit(&mut self) {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut m = self.adj[u] >> u;
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                m &= m - 1;
                if k > 0 {
                    g.insert_edge(u, u + k).expect("in range");
                }
            }
        }
        if self.seen.insert(canonical_form(&g)) {
            self.out.push(g);
        }
    }
}

/// Every connected `d`-regular simple graph on `n` vertices with girth at
/// least `girth_min`, once per isomorphism class. Forests count as having
/// infinite girth.
pub fn generate_regular(n: usize, d: usize, girth_min: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Ok(Vec::new());
    }
    if d == 0 {
        return Ok(if n == 1 { vec![Graph::empty(1)] } else { Vec::new() });
    }
    let mut gen = Generator {
        n,
        d,
        girth_min,
        adj: vec![0; n],
        deg: vec![0; n],
        touched: 1,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    gen.saturate_from(0);
    Ok(gen.out)
}
