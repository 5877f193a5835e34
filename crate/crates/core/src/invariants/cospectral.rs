//! Exhaustive enumeration of small graphs and cospectral-pair search.
//!
//! Graphs on up to eight vertices are encoded as `u64` keys: the upper
//! triangle of the adjacency matrix read row by row, most significant bit
//! first. A canonical form is the smallest key over a set of relabellings
//! that is determined by the graph alone.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::corona::{CoronaKind, CoronaSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::poly::{charpoly_exact, coronal, IntPoly};

pub const MAX_SEARCH_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Small {
    n: usize,
    adj: [u8; MAX_SEARCH_VERTICES],
}

impl Small {
    fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_SEARCH_VERTICES {
            return Err(Error::TooLarge {
                requested: n,
                max: MAX_SEARCH_VERTICES,
            });
        }
        let mut adj = [0u8; MAX_SEARCH_VERTICES];
        for &(a, b) in g.edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { n, adj })
    }

    fn to_graph(self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|i| ((i + 1)..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adj[i] >> j & 1 == 1);
        Graph::new(self.n, edges).expect("valid small graph")
    }

    fn decode(n: usize, key: u64) -> Self {
        let mut adj = [0u8; MAX_SEARCH_VERTICES];
        let mut bit = n * n.saturating_sub(1) / 2;
        for i in 0..n {
            for j in (i + 1)..n {
                bit -= 1;
                if key >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Self { n, adj }
    }

    /// Key of the relabelling that puts vertex `perm[p]` at position `p`.
    fn key(&self, perm: &[usize]) -> u64 {
        let mut key = 0u64;
        for p in 0..self.n {
            let row = self.adj[perm[p]];
            for &w in &perm[p + 1..self.n] {
                key = key << 1 | u64::from(row >> w & 1);
            }
        }
        key
    }

    /// Ordered cells of the stable colour refinement, starting from degrees.
    /// Colours are ranks of sorted signatures, so the ordering is invariant.
    fn refined_cells(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut colour: Vec<usize> = (0..n).map(|v| self.adj[v].count_ones() as usize).collect();
        let mut classes = 0;
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = (0..n)
                        .filter(|&w| self.adj[v] >> w & 1 == 1)
                        .map(|w| colour[w])
                        .collect();
                    nb.sort_unstable();
                    (colour[v], nb)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            colour = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
            if distinct.len() == classes {
                break;
            }
            classes = distinct.len();
        }
        let mut cells = vec![Vec::new(); classes];
        for v in 0..n {
            cells[colour[v]].push(v);
        }
        cells
    }

    fn min_key_over(&self, cells: &[Vec<usize>]) -> u64 {
        fn rec(g: &Small, cells: &[Vec<usize>], perm: &mut Vec<usize>, best: &mut u64) {
            match cells.split_first() {
                None => *best = (*best).min(g.key(perm)),
                Some((cell, rest)) => {
                    let mut cell = cell.clone();
                    permute(&mut cell, 0, &mut |c| {
                        perm.extend_from_slice(c);
                        rec(g, rest, perm, best);
                        perm.truncate(perm.len() - c.len());
                    });
                }
            }
        }
        let mut best = u64::MAX;
        rec(self, cells, &mut Vec::with_capacity(self.n), &mut best);
        best
    }

    fn canonical(&self) -> u64 {
        self.min_key_over(&self.refined_cells())
    }

    fn brute_force_canonical(&self) -> u64 {
        self.min_key_over(&[(0..self.n).collect()])
    }
}

fn permute(v: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Canonical form via colour refinement; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    Ok(Small::from_graph(g)?.canonical())
}

/// Canonical form as the minimum over all `n!` relabellings.
pub fn brute_force_canonical_form(g: &Graph) -> Result<u64> {
    Ok(Small::from_graph(g)?.brute_force_canonical())
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge {
            requested: n,
            max: MAX_SEARCH_VERTICES,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParams("need at least one vertex".into()));
    }
    Ok(())
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, in canonical-key order. Built by adding a vertex with every
/// possible neighbourhood to each class on `n - 1` vertices.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    check_size(n)?;
    Ok(classes_on(n).into_iter().map(|g| g.to_graph()).collect())
}

fn classes_on(n: usize) -> Vec<Small> {
    let mut level: Vec<u64> = vec![0];
    for k in 1..n {
        let children: HashSet<u64> = level
            .par_iter()
            .flat_map_iter(|&key| {
                let parent = Small::decode(k, key);
                (0u16..1 << k).map(move |mask| {
                    let mut child = parent;
                    child.n = k + 1;
                    child.adj[k] = mask as u8;
                    for w in 0..k {
                        if mask >> w & 1 == 1 {
                            child.adj[w] |= 1 << k;
                        }
                    }
                    child.canonical()
                })
            })
            .collect();
        level = children.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|key| Small::decode(n, key)).collect()
}

/// Two non-isomorphic graphs with the same characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospectralPair {
    pub first: Graph,
    pub second: Graph,
    pub which: MatrixKind,
    pub charpoly: IntPoly,
}

fn pairs_among(graphs: Vec<Graph>, which: MatrixKind) -> Result<Vec<CospectralPair>> {
    let polys: Vec<IntPoly> = graphs
        .par_iter()
        .map(|g| charpoly_exact(&g.matrix(which)))
        .collect::<Result<_>>()?;
    // groups keyed by their first member, so output order is deterministic
    let mut by_poly: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut first_of: std::collections::HashMap<&IntPoly, usize> = Default::default();
    for (i, p) in polys.iter().enumerate() {
        let head = *first_of.entry(p).or_insert(i);
        by_poly.entry(head).or_default().push(i);
    }
    let index_pairs: Vec<(usize, usize)> = by_poly
        .values()
        .flat_map(|members| {
            members
                .iter()
                .enumerate()
                .flat_map(move |(a, &i)| members[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    let involved: Vec<usize> = {
        let mut v: Vec<usize> = index_pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let certified: BTreeMap<usize, u64> = involved
        .par_iter()
        .map(|&i| (i, brute_force_canonical_form(&graphs[i]).expect("small graph")))
        .collect();
    Ok(index_pairs
        .into_iter()
        .map(|(i, j)| {
            assert_ne!(certified[&i], certified[&j], "enumeration produced isomorphic graphs");
            CospectralPair {
                first: graphs[i].clone(),
                second: graphs[j].clone(),
                which,
                charpoly: polys[i].clone(),
            }
        })
        .collect())
}

/// All unordered pairs of non-isomorphic graphs on exactly `n` vertices with
/// equal characteristic polynomials of the `which` matrix.
pub fn cospectral_search(n: usize, which: MatrixKind) -> Result<Vec<CospectralPair>> {
    check_size(n)?;
    pairs_among(graphs_on(n)?, which)
}

/// Cospectral pairs of regular graphs on at most `max_n` vertices.
pub fn cospectral_search_regular(max_n: usize, which: MatrixKind) -> Result<Vec<CospectralPair>> {
    check_size(max_n)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        let regular: Vec<Graph> = graphs_on(n)?.into_iter().filter(|g| g.regularity().is_some()).collect();
        out.extend(pairs_among(regular, which)?);
    }
    Ok(out)
}

/// Which side of the corona the cospectral pair occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `G_1 ⋆ H` versus `G_2 ⋆ H`.
    VaryG1,
    /// `H ⋆ G_1` versus `H ⋆ G_2`.
    VaryG2,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::VaryG1 => "vary_g1",
            Side::VaryG2 => "vary_g2",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vary_g1" => Ok(Side::VaryG1),
            "vary_g2" => Ok(Side::VaryG2),
            _ => Err(Error::Parse(format!("side must be vary_g1 or vary_g2, got {s:?}"))),
        }
    }
}

fn not_met(msg: impl Into<String>) -> Error {
    Error::HypothesisNotMet(msg.into())
}

/// Checks that replacing one graph of a corona by a cospectral mate keeps
/// the corona cospectral. Errors with `HYPOTHESIS_NOT_MET` when the pair
/// and `h` do not satisfy the hypotheses; otherwise compares the two
/// coronae's characteristic polynomials exactly.
pub fn verify_cospectral_corollary(
    pair: (&Graph, &Graph),
    h: &Graph,
    which: MatrixKind,
    kind: CoronaKind,
    side: Side,
) -> Result<bool> {
    if !MatrixKind::SPECTRAL.contains(&which) {
        return Err(Error::InvalidParams(format!(
            "no spectral corollary for matrix {which}"
        )));
    }
    let (a, b) = pair;
    if charpoly_exact(&a.matrix(which))? != charpoly_exact(&b.matrix(which))? {
        return Err(not_met(format!("the pair is not {which}-cospectral")));
    }
    let (sa, sb) = match side {
        Side::VaryG1 => {
            match (a.regularity(), b.regularity()) {
                (Some(ra), Some(rb)) if ra == rb => {}
                _ => return Err(not_met("the pair must be regular of equal degree")),
            }
            (
                CoronaSpec::new(a.clone(), h.clone(), kind)?,
                CoronaSpec::new(b.clone(), h.clone(), kind)?,
            )
        }
        Side::VaryG2 => {
            if h.regularity().is_none() {
                return Err(not_met("the fixed graph must be regular"));
            }
            if which != MatrixKind::L && coronal(&a.matrix(which))? != coronal(&b.matrix(which))? {
                return Err(not_met(format!("the pair has different {which}-coronals")));
            }
            (
                CoronaSpec::new(h.clone(), a.clone(), kind)?,
                CoronaSpec::new(h.clone(), b.clone(), kind)?,
            )
        }
    };
    let pa = charpoly_exact(&sa.build().0.matrix(which))?;
    let pb = charpoly_exact(&sb.build().0.matrix(which))?;
    Ok(pa == pb)
}
