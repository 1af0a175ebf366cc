//! Canonical labeling by equitable refinement and individualization.
//!
//! The search tree is explored completely except for children that lie in
//! the same orbit of already discovered automorphisms fixing the current
//! individualized prefix. The certificate is the adjacency bit string under a
//! leaf labeling; the canonical one is the lexicographic maximum.

use std::collections::VecDeque;

use super::Graph;

/// Relabeling-invariant encoding: equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Ordered partition of the vertex set. Cells are ranges of `lab`, named by
/// their start position; positions are invariant under relabeling.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    cell_end: Vec<usize>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn new(g: &Graph) -> Partition {
        let n = g.order();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| g.has_loop(v));
        let mut p = Partition {
            lab,
            cell_end: vec![0; n],
            cell_of: vec![0; n],
        };
        let split = p.lab.iter().take_while(|&&v| !g.has_loop(v)).count();
        p.set_cell(0, split);
        p.set_cell(split, n);
        p
    }

    fn set_cell(&mut self, start: usize, end: usize) {
        if start >= end {
            return;
        }
        self.cell_end[start] = end;
        for &v in &self.lab[start..end] {
            self.cell_of[v] = start;
        }
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut s = 0;
        while s < self.lab.len() {
            starts.push(s);
            s = self.cell_end[s];
        }
        starts
    }

    fn is_discrete(&self) -> bool {
        (0..self.lab.len()).all(|s| self.cell_of[self.lab[s]] == s)
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the given splitter cells.
    fn refine(&mut self, g: &Graph, splitters: impl IntoIterator<Item = usize>) {
        let n = self.lab.len();
        let mut queue: VecDeque<usize> = splitters.into_iter().collect();
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s] = true;
        }
        let mut count = vec![0usize; n];
        let mut touched: Vec<usize> = Vec::new();
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            for &x in &self.lab[w..self.cell_end[w]] {
                for &v in g.neighbors(x) {
                    if count[v] == 0 {
                        touched.push(v);
                    }
                    count[v] += 1;
                }
            }
            let mut cells: Vec<usize> = touched.iter().map(|&v| self.cell_of[v]).collect();
            cells.sort_unstable();
            cells.dedup();
            for s in cells {
                let e = self.cell_end[s];
                if e - s == 1 {
                    continue;
                }
                let slice = &mut self.lab[s..e];
                slice.sort_by_key(|&v| count[v]);
                let mut start = s;
                for k in s + 1..=e {
                    if k == e || count[self.lab[k]] != count[self.lab[k - 1]] {
                        if start != s || k != e {
                            self.set_cell(start, k);
                            if !queued[start] {
                                queued[start] = true;
                                queue.push_back(start);
                            }
                        }
                        start = k;
                    }
                }
            }
            for v in touched.drain(..) {
                count[v] = 0;
            }
        }
    }

    /// Moves `v` to the front of its cell as a new singleton cell.
    fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let e = self.cell_end[s];
        let pos = s + self.lab[s..e].iter().position(|&x| x == v).expect("member");
        self.lab.swap(s, pos);
        self.set_cell(s, s + 1);
        self.set_cell(s + 1, e);
        s
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        self.cell_starts()
            .into_iter()
            .filter(|&s| self.cell_end[s] - s > 1)
            .min_by_key(|&s| (self.cell_end[s] - s, s))
    }
}

fn certificate(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut out = Vec::with_capacity(4 + (n * (n + 1) / 2).div_ceil(8));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 0..n {
        for i in 0..=j {
            byte = (byte << 1) | u8::from(g.has_edge(lab[i], lab[j]));
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, lab: &[usize]) {
        let cert = certificate(self.g, lab);
        match &self.best {
            Some((best, best_lab)) if *best == cert => {
                let mut gamma = vec![0; lab.len()];
                for (&a, &b) in best_lab.iter().zip(lab) {
                    gamma[a] = b;
                }
                self.automorphisms.push(gamma);
            }
            Some((best, _)) if *best > cert => {}
            _ => self.best = Some((cert, lab.to_vec())),
        }
    }

    fn same_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&s| gamma[s] != s) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn run(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        let Some(t) = part.target_cell() else {
            debug_assert!(part.is_discrete());
            self.leaf(&part.lab);
            return;
        };
        let candidates = part.lab[t..part.cell_end[t]].to_vec();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if self.same_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = part.clone();
            let s = child.individualize(v);
            child.refine(self.g, [s]);
            prefix.push(v);
            self.run(child, prefix);
            prefix.pop();
        }
    }
}

/// `labeling[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut part = Partition::new(g);
    let starts = part.cell_starts();
    part.refine(g, starts);
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(part, &mut Vec::new());
    let (_, lab) = search.best.unwrap_or_default();
    let mut labeling = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        labeling[v] = pos;
    }
    labeling
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let labeling = canonical_labeling(g);
    let mut lab = vec![0; labeling.len()];
    for (v, &pos) in labeling.iter().enumerate() {
        lab[pos] = v;
    }
    let mut bytes = certificate(g, &lab);
    bytes.push(u8::from(g.allows_loops()));
    CanonicalForm(bytes)
}
