//! Subdivision graphs and the two subdivision coronae.
//!
//! Vertex layout of every graph built here: the `n1` original vertices of
//! `G1` keep labels `0..n1`; the inserted vertex of the `k`-th sorted edge is
//! `n1 + k`; copies of `G2` follow, copy-major (copy 0 occupies one
//! contiguous block of `n2` labels, then copy 1, and so on). The textbook
//! block form groups copies vertex-major instead; the two layouts differ by a
//! permutation, so spectra and characteristic polynomials agree.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoronaKind {
    /// One copy of `G2` per original vertex of `G1`.
    SubdivisionVertex,
    /// One copy of `G2` per inserted (edge) vertex of `S(G1)`.
    SubdivisionEdge,
}

impl CoronaKind {
    pub const BOTH: [CoronaKind; 2] = [CoronaKind::SubdivisionVertex, CoronaKind::SubdivisionEdge];

    pub fn short_name(self) -> &'static str {
        match self {
            CoronaKind::SubdivisionVertex => "vertex",
            CoronaKind::SubdivisionEdge => "edge",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoronaKind::SubdivisionVertex => "⊙",
            CoronaKind::SubdivisionEdge => "⊖",
        }
    }
}

impl fmt::Display for CoronaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CoronaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" | "subdivision-vertex" | "SubdivisionVertex" => Ok(CoronaKind::SubdivisionVertex),
            "edge" | "subdivision-edge" | "SubdivisionEdge" => Ok(CoronaKind::SubdivisionEdge),
            other => Err(Error::Parse(format!("unknown corona kind {other:?}"))),
        }
    }
}

/// A construction instance `G1 ⊙ G2` or `G1 ⊖ G2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaSpec {
    g1: Graph,
    g2: Graph,
    kind: CoronaKind,
}

impl CoronaSpec {
    pub fn new(g1: Graph, g2: Graph, kind: CoronaKind) -> Result<Self> {
        if g1.vertex_count() == 0 {
            return Err(Error::InvalidParams("G1 must have at least one vertex".into()));
        }
        if g2.vertex_count() == 0 {
            return Err(Error::InvalidParams(
                "G2 must have at least one vertex (use subdivision() for S(G1))".into(),
            ));
        }
        if kind == CoronaKind::SubdivisionEdge && g1.edge_count() == 0 {
            return Err(Error::EdgeRequired);
        }
        Ok(Self { g1, g2, kind })
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    pub fn kind(&self) -> CoronaKind {
        self.kind
    }

    /// Number of copies of `G2`: `n1` for ⊙, `m1` for ⊖.
    pub fn copy_count(&self) -> usize {
        match self.kind {
            CoronaKind::SubdivisionVertex => self.g1.vertex_count(),
            CoronaKind::SubdivisionEdge => self.g1.edge_count(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        let (n1, m1, n2) = (self.g1.vertex_count(), self.g1.edge_count(), self.g2.vertex_count());
        match self.kind {
            CoronaKind::SubdivisionVertex => n1 * (1 + n2) + m1,
            CoronaKind::SubdivisionEdge => m1 * (1 + n2) + n1,
        }
    }

    pub fn edge_count(&self) -> usize {
        let (n1, m1) = (self.g1.vertex_count(), self.g1.edge_count());
        let (n2, m2) = (self.g2.vertex_count(), self.g2.edge_count());
        match self.kind {
            CoronaKind::SubdivisionVertex => 2 * m1 + n1 * (n2 + m2),
            CoronaKind::SubdivisionEdge => m1 * (2 + n2 + m2),
        }
    }

    pub fn build(&self) -> (Graph, CoronaLabeling) {
        corona(self)
    }
}

impl fmt::Display for CoronaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G1(n={}, m={}) {} G2(n={}, m={})",
            self.g1.vertex_count(),
            self.g1.edge_count(),
            self.kind.symbol(),
            self.g2.vertex_count(),
            self.g2.edge_count()
        )
    }
}

/// Where each part of `G1`, `I(G1)` and the copies of `G2` sits in a
/// constructed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaLabeling {
    pub original: Range<usize>,
    pub inserted: Range<usize>,
    copies_start: usize,
    copy_count: usize,
    copy_size: usize,
}

impl CoronaLabeling {
    /// Label of vertex `j` of `G2` in copy `i`.
    pub fn copy(&self, i: usize, j: usize) -> usize {
        assert!(i < self.copy_count && j < self.copy_size);
        self.copies_start + i * self.copy_size + j
    }

    pub fn copy_range(&self, i: usize) -> Range<usize> {
        let s = self.copies_start + i * self.copy_size;
        s..s + self.copy_size
    }

    pub fn copy_count(&self) -> usize {
        self.copy_count
    }

    pub fn copy_size(&self) -> usize {
        self.copy_size
    }

    pub fn total(&self) -> usize {
        self.copies_start + self.copy_count * self.copy_size
    }

    /// The block-form ordering (originals, inserted, then `W_1, W_2, ...`
    /// where `W_j` collects vertex `j` of every copy): `order[k]` is the
    /// label placed at position `k`.
    pub fn vertex_major_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.original.clone().chain(self.inserted.clone()).collect();
        for j in 0..self.copy_size {
            order.extend((0..self.copy_count).map(|i| self.copy(i, j)));
        }
        order
    }

    pub fn to_sidecar(&self) -> LabelingSidecar {
        LabelingSidecar {
            original: self.original.clone().collect(),
            inserted: self.inserted.clone().collect(),
            copies: (0..self.copy_count).map(|i| self.copy_range(i).collect()).collect(),
        }
    }
}

/// JSON form of a [`CoronaLabeling`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingSidecar {
    pub original: Vec<usize>,
    pub inserted: Vec<usize>,
    pub copies: Vec<Vec<usize>>,
}

/// `S(G)`: every edge `k` (sorted order) gets the inserted vertex `n + k`.
pub fn subdivision(g: &Graph) -> (Graph, CoronaLabeling) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(k, &(a, b))| [(a, n + k), (b, n + k)]);
    let s = Graph::new(n + m, edges).expect("subdivision of a simple graph is simple");
    let labeling = CoronaLabeling {
        original: 0..n,
        inserted: n..n + m,
        copies_start: n + m,
        copy_count: 0,
        copy_size: 0,
    };
    (s, labeling)
}

pub fn corona(spec: &CoronaSpec) -> (Graph, CoronaLabeling) {
    let (g1, g2) = (&spec.g1, &spec.g2);
    let (n1, m1) = (g1.vertex_count(), g1.edge_count());
    let n2 = g2.vertex_count();
    let copies = spec.copy_count();
    let start = n1 + m1;
    let labeling = CoronaLabeling {
        original: 0..n1,
        inserted: n1..n1 + m1,
        copies_start: start,
        copy_count: copies,
        copy_size: n2,
    };
    let (sub, _) = subdivision(g1);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(spec.edge_count());
    edges.extend_from_slice(sub.edges());
    for i in 0..copies {
        let hub = match spec.kind {
            CoronaKind::SubdivisionVertex => i,
            CoronaKind::SubdivisionEdge => n1 + i,
        };
        let base = start + i * n2;
        edges.extend((0..n2).map(|j| (hub, base + j)));
        edges.extend(g2.edges().iter().map(|&(a, b)| (base + a, base + b)));
    }
    let g = Graph::new(labeling.total(), edges).expect("corona of simple graphs is simple");
    (g, labeling)
}
