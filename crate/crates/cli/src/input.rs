//! Graph and i-vector input: argument lists, stdin streams and item syntax.
//!
//! An item is one of
//! - a named graph, `petersen` or `generalized_petersen:7:2`,
//! - a graph6 string, optionally prefixed with `g6:`,
//! - an i-vector `iv:1,10,30,30,5`, optionally with its order `@10`.

use std::io::{self, BufRead};

use occulab::graph::{parse_graph6, parse_graph_spec, Graph, GraphError};
use occulab::indpoly::MultiplicityVector;
use occulab::occupancy::WeightedSet;

/// One input item with the place it came from, for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub origin: String,
    pub text: String,
}

#[derive(Clone, Debug)]
pub enum Item {
    Graph(Graph),
    Vector {
        vector: MultiplicityVector,
        order: Option<usize>,
    },
}

impl Item {
    pub fn weighted(&self) -> Result<WeightedSet, String> {
        match self {
            Item::Graph(g) => WeightedSet::from_graph(g).map_err(|e| e.to_string()),
            Item::Vector { vector, order } => {
                WeightedSet::new(vector.clone(), *order).map_err(|e| e.to_string())
            }
        }
    }

    pub fn graph(&self) -> Result<&Graph, String> {
        match self {
            Item::Graph(g) => Ok(g),
            Item::Vector { .. } => Err("a graph is required here, not an i-vector".to_string()),
        }
    }
}

pub fn parse_item(text: &str) -> Result<Item, String> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("iv:") {
        let (body, order) = match rest.rsplit_once('@') {
            Some((body, n)) => {
                let n = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad order {n:?}"))?;
                (body, Some(n))
            }
            None => (rest, None),
        };
        let vector = body.parse::<MultiplicityVector>().map_err(|e| e.to_string())?;
        return Ok(Item::Vector { vector, order });
    }
    if let Some(rest) = text.strip_prefix("g6:") {
        return parse_graph6(rest).map(Item::Graph).map_err(|e| e.to_string());
    }
    match parse_graph_spec(text) {
        Ok(g) => Ok(Item::Graph(g)),
        Err(GraphError::UnknownName(_)) => parse_graph6(text)
            .map(Item::Graph)
            .map_err(|e| format!("unknown graph name, and not graph6 either: {e}")),
        Err(e) => Err(e.to_string()),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    parse_item(text)?.graph().cloned()
}

/// Whether a stream line carries no item.
fn is_filler(line: &str) -> bool {
    let line = line.trim();
    line.is_empty() || line.starts_with('#') || line == ">>graph6<<"
}

pub fn read_lines(reader: impl BufRead, source: &str) -> io::Result<Vec<Record>> {
    let mut out = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        if !is_filler(&line) {
            out.push(Record {
                origin: format!("{source}:{}", k + 1),
                text: line.trim().trim_start_matches(">>graph6<<").to_string(),
            });
        }
    }
    Ok(out)
}

/// Expands `-` into the lines of stdin; every other argument is one item.
/// No arguments at all means stdin.
pub fn collect_records(args: &[String]) -> io::Result<Vec<Record>> {
    if args.is_empty() {
        return read_lines(io::stdin().lock(), "stdin");
    }
    let mut out = Vec::new();
    for (k, arg) in args.iter().enumerate() {
        if arg == "-" {
            out.extend(read_lines(io::stdin().lock(), "stdin")?);
        } else {
            out.push(Record {
                origin: format!("argument {}", k + 1),
                text: arg.clone(),
            });
        }
    }
    Ok(out)
}
