//! Named graph constructions, addressable by stable string identifiers.

use super::{parse_graph6, Graph, GraphError};

/// 20-vertex 4-regular triangle-free graph.
pub const G20_GRAPH6: &str = "S@?IC?g@S_P?@aOWOS@ACSD@GGPCg?gB?";
/// 22-vertex 4-regular graph of girth 5.
pub const G22_GRAPH6: &str = "UIAC@OOA_H@@?Qo?c_?cH@O?OQD?GIC?OG_`?KQ?";

/// Chords added to the 14-cycle to form the cubic graph G14.
const G14_CHORDS: [(usize, usize); 7] = [(0, 5), (13, 3), (1, 7), (12, 8), (10, 4), (2, 9), (11, 6)];

/// Robertson graph, the (4,5)-cage: Hamiltonian cycle `0..19` plus chords.
const ROBERTSON_CHORDS: [(usize, usize); 19] = [
    (0, 4),
    (4, 8),
    (8, 12),
    (11, 15),
    (15, 0),
    (2, 6),
    (17, 2),
    (6, 11),
    (12, 17),
    (18, 10),
    (10, 3),
    (3, 14),
    (14, 7),
    (7, 18),
    (1, 9),
    (9, 16),
    (16, 5),
    (5, 13),
    (13, 1),
];

/// Every identifier accepted by [`named_graph`], with its parameter shape.
pub const NAMES: &[(&str, &str)] = &[
    ("complete", "q"),
    ("complete_bipartite", "a:b"),
    ("cycle", "n"),
    ("path", "n"),
    ("star", "n"),
    ("empty", "n"),
    ("circulant", "n:d1,d2,..."),
    ("generalized_petersen", "n:k"),
    ("petersen", ""),
    ("dodecahedron", ""),
    ("g14", ""),
    ("heawood", ""),
    ("tutte_coxeter", ""),
    ("pg23_incidence", ""),
    ("robertson", ""),
    ("cyc13", ""),
    ("g20", ""),
    ("g22", ""),
    ("net", ""),
    ("net_looped_complement", ""),
    ("k4_minus_necklace", ""),
    ("independence_target", ""),
];

fn invalid(name: &str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn expect_params<const N: usize>(name: &str, params: &[usize]) -> Result<[usize; N], GraphError> {
    params
        .try_into()
        .map_err(|_| invalid(name, format!("expected {N} parameter(s), got {}", params.len())))
}

pub fn complete(q: usize) -> Graph {
    let edges = (0..q).flat_map(|u| (u + 1..q).map(move |v| (u, v)));
    Graph::from_edges(q, edges, false).expect("simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges, false).expect("simple")
}

pub fn circulant(n: usize, distances: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("circulant", "order must be at least 3"));
    }
    let mut g = Graph::empty(n);
    for &d in distances {
        if d == 0 || d > n / 2 {
            return Err(invalid("circulant", format!("distance {d} not in 1..={}", n / 2)));
        }
        for v in 0..n {
            g.insert_edge(v, (v + d) % n)?;
        }
    }
    Ok(g)
}

/// Outer vertices `0..n` form a cycle, inner vertex `n + i` hangs off `i`,
/// and inner vertices join at distance `k`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(invalid(
            "generalized_petersen",
            format!("need n >= 3 and 1 <= k < n/2, got n={n}, k={k}"),
        ));
    }
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        g.insert_edge(i, (i + 1) % n)?;
        g.insert_edge(i, n + i)?;
        g.insert_edge(n + i, n + (i + k) % n)?;
    }
    Ok(g)
}

/// Hamiltonian cubic graph from LCF notation `[shifts]^repeats`.
pub fn lcf(shifts: &[isize], repeats: usize) -> Graph {
    let n = shifts.len() * repeats;
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.insert_edge(v, (v + 1) % n).expect("in range");
        let s = shifts[v % shifts.len()];
        let w = (v as isize + s).rem_euclid(n as isize) as usize;
        g.insert_edge(v, w).expect("in range");
    }
    g
}

/// Point-line incidence graph of the projective plane over GF(3):
/// points `0..13`, lines `13..26`.
pub fn pg23_incidence() -> Graph {
    // normalized representatives: first non-zero coordinate is 1
    let reps: Vec<[u8; 3]> = (0..27u8)
        .map(|k| [k / 9, (k / 3) % 3, k % 3])
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    debug_assert_eq!(reps.len(), 13);
    let mut g = Graph::empty(26);
    for (i, p) in reps.iter().enumerate() {
        for (j, l) in reps.iter().enumerate() {
            let dot: u8 = p.iter().zip(l).map(|(a, b)| a * b).sum();
            if dot.is_multiple_of(3) {
                g.insert_edge(i, 13 + j).expect("in range");
            }
        }
    }
    g
}

fn cycle_plus(n: usize, chords: &[(usize, usize)]) -> Graph {
    let cycle = (0..n).map(|v| (v, (v + 1) % n));
    Graph::from_edges(n, cycle.chain(chords.iter().copied()), false).expect("fixed data")
}

/// Triangle `0,1,2` with pendant `3 + i` on each corner `i`.
pub fn net() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)], false).expect("simple")
}

/// Two copies of K4 minus an edge, joined in a ring. Vertices `2i` and
/// `2i + 1` are the left and right ends of level `i` (bottom to top).
pub fn k4_minus_necklace() -> Graph {
    let edges = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 2),
        (0, 3),
        (2, 4),
        (3, 5),
        (4, 6),
        (5, 7),
        (6, 7),
        (4, 7),
        (5, 6),
    ];
    Graph::from_edges(8, edges, false).expect("simple")
}

/// A looped vertex `0` with a pendant `1`; homomorphisms into it are
/// independent sets (the preimage of `1`).
pub fn independence_target() -> Graph {
    Graph::from_edges(2, [(0, 0), (0, 1)], true).expect("fixed data")
}

pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let none = |g: Graph| -> Result<Graph, GraphError> {
        if params.is_empty() {
            Ok(g)
        } else {
            Err(invalid(name, "takes no parameters"))
        }
    };
    match name {
        "complete" => {
            let [q] = expect_params(name, params)?;
            Ok(complete(q))
        }
        "complete_bipartite" => {
            let [a, b] = expect_params(name, params)?;
            Ok(complete_bipartite(a, b))
        }
        "cycle" => {
            let [n] = expect_params(name, params)?;
            circulant(n, &[1]).map_err(|_| invalid(name, "order must be at least 3"))
        }
        "path" => {
            let [n] = expect_params(name, params)?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)), false)
        }
        "star" => {
            let [n] = expect_params(name, params)?;
            Graph::from_edges(n, (1..n).map(|v| (0, v)), false)
        }
        "empty" => {
            let [n] = expect_params(name, params)?;
            Ok(Graph::empty(n))
        }
        "circulant" => match params.split_first() {
            Some((&n, distances)) if !distances.is_empty() => circulant(n, distances),
            _ => Err(invalid(name, "expected an order and at least one distance")),
        },
        "generalized_petersen" => {
            let [n, k] = expect_params(name, params)?;
            generalized_petersen(n, k)
        }
        "petersen" => none(generalized_petersen(5, 2)?),
        "dodecahedron" => none(generalized_petersen(10, 2)?),
        "g14" => none(cycle_plus(14, &G14_CHORDS)),
        "heawood" => none(lcf(&[5, -5], 7)),
        "tutte_coxeter" => none(lcf(&[-13, -9, 7, -7, 9, 13], 5)),
        "pg23_incidence" => none(pg23_incidence()),
        "robertson" => none(cycle_plus(19, &ROBERTSON_CHORDS)),
        "cyc13" => none(circulant(13, &[1, 5])?),
        "g20" => none(parse_graph6(G20_GRAPH6)?),
        "g22" => none(parse_graph6(G22_GRAPH6)?),
        "net" => none(net()),
        "net_looped_complement" => none(net().complement().with_all_loops()),
        "k4_minus_necklace" => none(k4_minus_necklace()),
        "independence_target" => none(independence_target()),
        _ => Err(GraphError::UnknownName(name.to_string())),
    }
}

/// Parses `name` or `name:p1:p2,...` (parameters split on `:` and `,`).
pub fn parse_graph_spec(spec: &str) -> Result<Graph, GraphError> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default().trim();
    let params = parts
        .flat_map(|p| p.split(','))
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| invalid(name, format!("bad parameter {p:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    named_graph(name, &params)
}
