//! Simple undirected graphs, standard families, and their A/L/Q/incidence
//! matrices.
//!
//! Vertices are labelled `0..n`. Edges are stored as `(i, j)` with `i < j`,
//! sorted lexicographically; every constructor normalizes to that form, so
//! two `Graph`s compare equal exactly when they have the same labelled edge
//! set. Incidence-matrix columns follow the sorted edge order.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Which matrix of a graph to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum MatrixKind {
    /// Adjacency matrix.
    A,
    /// Laplacian `D - A`.
    L,
    /// Signless Laplacian `D + A`.
    Q,
    /// Vertex-edge incidence matrix (`n x m`).
    Incidence,
}

impl MatrixKind {
    /// The three spectral matrices, in report order.
    pub const SPECTRAL: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
            MatrixKind::Incidence => "incidence",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            "incidence" | "R" => Ok(MatrixKind::Incidence),
            other => Err(Error::Parse(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Empty(usize),
    ComplementOf(Box<Graph>),
}

impl Graph {
    /// Builds a graph from any edge iterator. Endpoints may come in either
    /// order; self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range for n={n}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({},{})", w[0].0, w[0].1)));
        }
        Ok(Self { n, edges: list })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn from_family(family: &Family) -> Result<Self> {
        fn positive(name: &str, v: usize, min: usize) -> Result<()> {
            if v < min {
                Err(Error::InvalidParams(format!("{name} needs size >= {min}, got {v}")))
            } else {
                Ok(())
            }
        }
        match family {
            Family::Complete(n) => {
                positive("complete", *n, 1)?;
                let n = *n;
                Ok(Self {
                    n,
                    edges: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
                })
            }
            Family::CompleteBipartite(p, q) => {
                positive("complete_bipartite", *p, 1)?;
                positive("complete_bipartite", *q, 1)?;
                let (p, q) = (*p, *q);
                Ok(Self {
                    n: p + q,
                    edges: (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))).collect(),
                })
            }
            Family::Path(n) => {
                positive("path", *n, 1)?;
                Ok(Self {
                    n: *n,
                    edges: (1..*n).map(|i| (i - 1, i)).collect(),
                })
            }
            Family::Cycle(n) => {
                positive("cycle", *n, 3)?;
                Self::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            Family::Empty(n) => {
                positive("empty", *n, 1)?;
                Ok(Self::empty(*n))
            }
            Family::ComplementOf(g) => Ok(g.complement()),
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_family(&Family::Complete(n))
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        Self::from_family(&Family::CompleteBipartite(p, q))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_family(&Family::Path(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_family(&Family::Cycle(n))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        let r = *deg.first()?;
        deg.iter().all(|&d| d == r).then_some(r)
    }

    /// Connected in the usual sense; the graph on zero vertices is not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect();
        Self { n, edges }
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + off, b + off)))
            .collect();
        Self {
            n: self.n + other.n,
            edges,
        }
    }

    /// Subgraph induced on the vertices with `keep[v] == true`, relabelled in
    /// increasing order of the original labels.
    pub fn induced_subgraph(&self, keep: &[bool]) -> Self {
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (relabel[a], relabel[b]))
            .collect();
        Self { n: next, edges }
    }

    /// Graph on this graph's edges (in sorted order); two are adjacent iff
    /// they share an endpoint.
    pub fn line_graph(&self) -> Self {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            incident[a].push(k);
            incident[b].push(k);
        }
        let mut edges = Vec::new();
        for list in &incident {
            for (x, &e) in list.iter().enumerate() {
                for &f in &list[x + 1..] {
                    edges.push((e.min(f), e.max(f)));
                }
            }
        }
        // two distinct simple edges share at most one endpoint, so no duplicates
        edges.sort_unstable();
        Self {
            n: self.edges.len(),
            edges,
        }
    }

    pub fn matrix(&self, which: MatrixKind) -> IntMatrix {
        let n = self.n;
        match which {
            MatrixKind::Incidence => {
                let m = self.edges.len();
                let mut r = IntMatrix::zeros(n, m);
                for (k, &(a, b)) in self.edges.iter().enumerate() {
                    r.set(a, k, 1);
                    r.set(b, k, 1);
                }
                r
            }
            MatrixKind::A | MatrixKind::L | MatrixKind::Q => {
                let off: i64 = if which == MatrixKind::L { -1 } else { 1 };
                let mut m = IntMatrix::zeros(n, n);
                for &(a, b) in &self.edges {
                    m.set(a, b, off);
                    m.set(b, a, off);
                }
                if which != MatrixKind::A {
                    for (v, d) in self.degrees().into_iter().enumerate() {
                        m.set(v, v, BigInt::from(d));
                    }
                }
                m
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{{n={}, edges=[", self.n)?;
        for (k, (a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}{}{b}", if self.n > 10 { "-" } else { "" })?;
        }
        f.write_str("]}")
    }
}
