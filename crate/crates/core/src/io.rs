//! Text and JSON formats for graphs, plus the `name:params` family
//! shorthand.
//!
//! Edge-list format: a header line `n m`, then `m` lines `i j`. Blank lines
//! and anything after `#` are ignored.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let numbers = |(no, line): (usize, &str)| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || {
            Error::Parse(format!(
                "line {}: expected two non-negative integers, got {line:?}",
                no + 1
            ))
        };
        if fields.len() != 2 {
            return Err(bad());
        }
        Ok((
            fields[0].parse().map_err(|_| bad())?,
            fields[1].parse().map_err(|_| bad())?,
        ))
    };
    let (n, m) = numbers(lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?)?;
    let edges = lines.map(numbers).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

/// JSON form of a graph: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::new(j.n, j.edges)
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    j.try_into()
}

/// Parses `complete:5`, `complete_bipartite:3,3`, `path:4`, `cycle:6`,
/// `empty:2` or `complement_of:<shorthand>`.
pub fn parse_family(s: &str) -> Result<Family> {
    let (name, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected name:params, got {s:?}")))?;
    if name == "complement_of" {
        return Ok(Family::ComplementOf(Box::new(Graph::from_family(&parse_family(
            rest,
        )?)?)));
    }
    let params = rest
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size {p:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "{name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "complete" => arity(1).map(|_| Family::Complete(params[0])),
        "complete_bipartite" => arity(2).map(|_| Family::CompleteBipartite(params[0], params[1])),
        "path" => arity(1).map(|_| Family::Path(params[0])),
        "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
        "empty" => arity(1).map(|_| Family::Empty(params[0])),
        _ => Err(Error::Parse(format!("unknown family {name:?}"))),
    }
}

/// Reads a graph from a text, either JSON (leading `{`) or an edge list.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}

/// A graph argument: an existing file path, otherwise family shorthand.
pub fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        parse_graph_text(&text)
    } else {
        Graph::from_family(&parse_family(arg)?)
    }
}
