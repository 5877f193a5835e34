use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::corona::{CoronaKind, CoronaSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::spectra::{real_roots, SpectrumMultiset};

/// True when every value lies within `tol` of an integer.
pub fn is_integral(s: &SpectrumMultiset, tol: f64) -> bool {
    s.values().iter().all(|v| (v - v.round()).abs() <= tol)
}

/// [`is_integral`] for `(value, multiplicity)` pairs.
pub fn is_integral_grouped(groups: &[(f64, usize)], tol: f64) -> bool {
    groups.iter().all(|(v, _)| (v - v.round()).abs() <= tol)
}

/// Integer roots of `p` with multiplicities, provided they account for the
/// whole degree; `None` if some root is not an integer.
///
/// Candidates come from the numeric roots; each is confirmed by exact
/// division, and what is left at the end must be a constant.
pub fn integer_roots(p: &IntPoly) -> Result<Option<Vec<(BigInt, usize)>>> {
    let roots = match real_roots(p) {
        Ok(r) => r,
        Err(Error::ComplexRoots { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut rest = p.clone();
    let mut out = Vec::new();
    for (val, mult) in roots.multiplicity_view(crate::spectra::CLUSTER_TOL) {
        let k = val.round();
        if (val - k).abs() > 1e-6 {
            return Ok(None);
        }
        let k = BigInt::from(k as i64);
        let lin = IntPoly::linear_root(k.clone());
        for _ in 0..mult {
            match rest.div_exact(&lin) {
                Ok(q) => rest = q,
                Err(_) => return Ok(None),
            }
        }
        out.push((k, mult));
    }
    Ok(rest.is_constant().then_some(out))
}

/// Parameters of the integral corona families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum IntegralFamilyParams {
    /// `K_{n1} ⊙ K̄_{n2}` with `n1 = s² - h²`, `n2 = 2h² - s² + 2`.
    VertexComplete { s: u64, h: u64 },
    /// `K_{n1,n1} ⊙ K̄_{n2}` with `n1 = 4st²(2s² + 3s + 1)`, `n2 = t²(2s² - 1)²`.
    VertexBipartite { s: u64, t: u64 },
    /// `K_{n1} ⊖ K̄_{n2}` with `n1 = 2t + 3`, `n2 = t²`.
    EdgeComplete { t: u64 },
    /// `K_{n1,n1} ⊖ K̄_{n2}`, same parameters as the vertex version.
    EdgeBipartite { s: u64, t: u64 },
}

impl IntegralFamilyParams {
    pub fn name(&self) -> &'static str {
        match self {
            Self::VertexComplete { .. } => "vertex_complete",
            Self::VertexBipartite { .. } => "vertex_bipartite",
            Self::EdgeComplete { .. } => "edge_complete",
            Self::EdgeBipartite { .. } => "edge_bipartite",
        }
    }

    /// Builds from a family name and its integer parameters in order.
    pub fn from_name(name: &str, params: &[u64]) -> Result<Self> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match name {
            "vertex_complete" => arity(2).map(|_| Self::VertexComplete {
                s: params[0],
                h: params[1],
            }),
            "vertex_bipartite" => arity(2).map(|_| Self::VertexBipartite {
                s: params[0],
                t: params[1],
            }),
            "edge_complete" => arity(1).map(|_| Self::EdgeComplete { t: params[0] }),
            "edge_bipartite" => arity(2).map(|_| Self::EdgeBipartite {
                s: params[0],
                t: params[1],
            }),
            _ => Err(Error::InvalidParams(format!("unknown integral family {name:?}"))),
        }
    }

    /// `(n1, n2)`, after checking the parameter ranges.
    pub fn sizes(&self) -> Result<(usize, usize)> {
        let invalid = |msg: &str| Err(Error::InvalidParams(format!("{self}: {msg}")));
        let (n1, n2) = match *self {
            Self::VertexComplete { s, h } => {
                if h < 2 || s < 3 || !(h * h < s * s && s * s < 2 * h * h + 2) {
                    return invalid("need h >= 2, s >= 3 and h² < s² < 2h² + 2");
                }
                (s * s - h * h, 2 * h * h + 2 - s * s)
            }
            Self::VertexBipartite { s, t } | Self::EdgeBipartite { s, t } => {
                if s < 1 || t < 1 {
                    return invalid("need s, t >= 1");
                }
                (4 * s * t * t * (2 * s * s + 3 * s + 1), t * t * (2 * s * s - 1).pow(2))
            }
            Self::EdgeComplete { t } => {
                if t < 1 {
                    return invalid("need t >= 1");
                }
                (2 * t + 3, t * t)
            }
        };
        Ok((n1 as usize, n2 as usize))
    }
}

impl fmt::Display for IntegralFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexComplete { s, h } => write!(f, "vertex_complete(s={s}, h={h})"),
            Self::VertexBipartite { s, t } => write!(f, "vertex_bipartite(s={s}, t={t})"),
            Self::EdgeComplete { t } => write!(f, "edge_complete(t={t})"),
            Self::EdgeBipartite { s, t } => write!(f, "edge_bipartite(s={s}, t={t})"),
        }
    }
}

impl FromStr for IntegralFamilyParams {
    type Err = Error;

    /// `name:p1,p2`, e.g. `vertex_complete:3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u64>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_name(name.trim(), &params)
    }
}

/// A member of an integral family. The corona itself is built on demand:
/// the bipartite families reach tens of millions of vertices.
#[derive(Clone, Debug)]
pub struct IntegralInstance {
    pub params: IntegralFamilyParams,
    pub n1: usize,
    pub n2: usize,
    pub spec: CoronaSpec,
}

impl IntegralInstance {
    pub fn build(&self) -> Graph {
        self.spec.build().0
    }
}

pub fn integral_family(params: IntegralFamilyParams) -> Result<IntegralInstance> {
    let (n1, n2) = params.sizes()?;
    let (g1, kind) = match params {
        IntegralFamilyParams::VertexComplete { .. } => (Graph::complete(n1)?, CoronaKind::SubdivisionVertex),
        IntegralFamilyParams::VertexBipartite { .. } => {
            (Graph::complete_bipartite(n1, n1)?, CoronaKind::SubdivisionVertex)
        }
        IntegralFamilyParams::EdgeComplete { .. } => (Graph::complete(n1)?, CoronaKind::SubdivisionEdge),
        IntegralFamilyParams::EdgeBipartite { .. } => (Graph::complete_bipartite(n1, n1)?, CoronaKind::SubdivisionEdge),
    };
    let spec = CoronaSpec::new(g1, Graph::empty(n2), kind)?;
    Ok(IntegralInstance { params, n1, n2, spec })
}
