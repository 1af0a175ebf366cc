//! Finite graphs with an optional loop capability, graph6 I/O, named
//! constructions, canonical forms and a small regular-graph generator.

mod canon;
mod generate;
mod graph6;
pub mod named;
mod structure;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use generate::generate_regular;
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use named::{named_graph, parse_graph_spec, NAMES};
pub use structure::{girth, is_connected, regular_degree};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0} in a graph without loops")]
    LoopNotAllowed(usize),
    #[error("graph has loops")]
    HasLoops,
    #[error("graph of order {order} exceeds the supported maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Undirected graph on vertices `0..order`.
///
/// Neighbor lists are sorted and duplicate-free. A loop at `v` appears as `v`
/// in its own neighbor list and is only permitted when `allows_loops` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    allows_loops: bool,
}

impl Graph {
    pub fn empty(order: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); order],
            edge_count: 0,
            allows_loops: false,
        }
    }

    /// Empty graph that may later receive loops.
    pub fn empty_looped(order: usize) -> Graph {
        Graph {
            allows_loops: true,
            ..Graph::empty(order)
        }
    }

    /// Builds a graph from an edge list, rejecting duplicates.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        allows_loops: bool,
    ) -> Result<Graph, GraphError> {
        let mut g = if allows_loops {
            Graph::empty_looped(order)
        } else {
            Graph::empty(order)
        };
        for (u, v) in edges {
            if !g.insert_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let order = self.order();
        for w in [u, v] {
            if w >= order {
                return Err(GraphError::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v && !self.allows_loops {
            return Err(GraphError::LoopNotAllowed(u));
        }
        let Err(pos) = self.adj[u].binary_search(&v) else {
            return Ok(false);
        };
        self.adj[u].insert(pos, v);
        if u != v {
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        self.edge_count += 1;
        Ok(true)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, loops included.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    pub fn has_loops(&self) -> bool {
        self.adj.iter().enumerate().any(|(v, ns)| ns.contains(&v))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbor-list length; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v >= u).map(move |&v| (u, v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut adj = vec![Vec::new(); self.order()];
        for (v, ns) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = ns.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph {
            adj,
            edge_count: self.edge_count,
            allows_loops: self.allows_loops,
        }
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&w| w + shift).collect()),
        );
        Graph {
            adj,
            edge_count: self.edge_count + other.edge_count,
            allows_loops: self.allows_loops || other.allows_loops,
        }
    }

    /// Loop-free complement.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// Copy of the graph with a loop added at every vertex.
    pub fn with_all_loops(&self) -> Graph {
        let mut g = self.clone();
        g.allows_loops = true;
        for v in 0..g.order() {
            g.insert_edge(v, v).expect("loops allowed");
        }
        g
    }

    /// Neighborhood bitmasks; only for graphs of order at most 64.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>, GraphError> {
        if self.order() > 64 {
            return Err(GraphError::TooLarge {
                order: self.order(),
                max: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect())
    }
}
