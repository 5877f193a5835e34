//! Closed-form characteristic polynomials and spectra of subdivision-vertex
//! and subdivision-edge coronae with a regular base graph.
//!
//! Let `G1` be `r1`-regular with `n1` vertices and `m1` edges, `G2` have
//! `n2` vertices, and write the coronal of the relevant `G2` matrix as
//! `Γ = c/d` in lowest terms (for `L` and `Q` the shifted `Γ(x - 1)` is
//! used). Every per-eigenvalue factor of the theorems, once multiplied by
//! the right power of `d`, has the form `u(x) - λ·v(x)` with integer
//! polynomials `u` and `v`. The product over the eigenvalues `λ` of the
//! `G1` matrix is then `Σ a_k u^k v^(n1-k)`, read off the characteristic
//! polynomial of `G1` with no eigenvalue ever leaving the integers.
//!
//! | matrix, kind | prefactor `g`        | `u`                                   | `v`  |
//! |--------------|----------------------|---------------------------------------|------|
//! | A, vertex    | `x`                  | `x²d - cx - r1·d`                     | `d`  |
//! | A, edge      | `xd - c`             | `x·g - r1·d`                          | `d`  |
//! | L, vertex    | `x - 2`              | `(x-2)((x-r1-n2)d - c) - 2r1·d`       | `-d` |
//! | Q, vertex    | `x - 2`              | `(x-2)((x-r1-n2)d - c)`               | `d`  |
//! | L, edge      | `(x-2-n2)d - c`      | `(x-r1)·g - 2r1·d`                    | `-d` |
//! | Q, edge      | `(x-2-n2)d - c`      | `(x-r1)·g`                            | `d`  |
//!
//! The full polynomial is `(φ_2/d)^copies · g^(m1-n1) · Π_λ (u - λv)`,
//! where `φ_2` is the (shifted) characteristic polynomial of the `G2`
//! matrix and `copies` is `n1` or `m1`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::corona::{CoronaKind, CoronaSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::matrix::IntMatrix;
use crate::poly::{charpoly_exact, coronal, coronal_constant_rowsum, homogeneous_eval, IntPoly, RationalFunc};
use crate::spectra::{eigenvalues_sym, real_roots, real_roots_f64, SpectrumMultiset, CLUSTER_TOL};

/// A characteristic polynomial kept as a product of monic factors with
/// multiplicities. The expanded product is computed on first request.
#[derive(Clone, Debug)]
pub struct FactoredCharPoly {
    factors: Vec<(IntPoly, usize)>,
    expanded: OnceLock<IntPoly>,
}

impl FactoredCharPoly {
    pub fn new(factors: Vec<(IntPoly, usize)>) -> Self {
        let factors = factors
            .into_iter()
            .filter(|(f, k)| *k > 0 && !f.is_constant())
            .collect();
        Self {
            factors,
            expanded: OnceLock::new(),
        }
    }

    pub fn factors(&self) -> &[(IntPoly, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, k)| f.degree().unwrap_or(0) * k).sum()
    }

    pub fn expanded(&self) -> &IntPoly {
        self.expanded.get_or_init(|| {
            self.factors
                .iter()
                .fold(IntPoly::one(), |acc, (f, k)| &acc * &f.pow(*k))
        })
    }
}

impl PartialEq for FactoredCharPoly {
    fn eq(&self, other: &Self) -> bool {
        self.expanded() == other.expanded()
    }
}

/// The polynomial ingredients shared by the exact and numeric routes.
struct Parts {
    block: IntPoly,
    copies: usize,
    prefactor: IntPoly,
    exponent: i64,
    u: IntPoly,
    v: IntPoly,
    g1_matrix: IntMatrix,
}

fn ensure_spectral(which: MatrixKind) -> Result<()> {
    if MatrixKind::SPECTRAL.contains(&which) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("no spectral theorem for matrix {which}")))
    }
}

fn require_regular(g: &Graph, role: &str) -> Result<usize> {
    g.regularity()
        .ok_or_else(|| Error::RegRequired(format!("{role} is not regular")))
}

/// Reduced coronal of `M`, using the closed form when row sums are constant.
fn coronal_of(m: &IntMatrix) -> Result<RationalFunc> {
    match m.constant_row_sum() {
        Some(t) => coronal_constant_rowsum(m.rows(), t),
        None => coronal(m),
    }
}

fn int(k: usize) -> BigInt {
    BigInt::from(k)
}

impl Parts {
    fn new(spec: &CoronaSpec, which: MatrixKind) -> Result<Self> {
        ensure_spectral(which)?;
        let g1 = spec.g1();
        let r1 = int(require_regular(g1, "G1")?);
        let n2 = int(spec.g2().vertex_count());
        let m2 = spec.g2().matrix(which);
        let gamma = coronal_of(&m2)?;
        let phi2 = charpoly_exact(&m2)?;
        let (c, d, phi2) = match which {
            MatrixKind::A => (gamma.numerator().clone(), gamma.denominator().clone(), phi2),
            _ => {
                let back = BigInt::from(-1);
                (
                    gamma.numerator().shift(&back),
                    gamma.denominator().shift(&back),
                    phi2.shift(&back),
                )
            }
        };
        let block = phi2.div_exact(&d)?;
        let x = IntPoly::x();
        let lin = |a: &BigInt| IntPoly::linear_root(a.clone());
        let two = BigInt::from(2);
        let (prefactor, u, v) = match (spec.kind(), which) {
            (CoronaKind::SubdivisionVertex, MatrixKind::A) => {
                let u = &(&(&IntPoly::monomial(1, 2) * &d) - &(&c * &x)) - &d.scale(&r1);
                (x, u, d)
            }
            (CoronaKind::SubdivisionEdge, MatrixKind::A) => {
                let g = &(&x * &d) - &c;
                let u = &(&x * &g) - &d.scale(&r1);
                (g, u, d)
            }
            (CoronaKind::SubdivisionVertex, _) => {
                let inner = &(&lin(&(&r1 + &n2)) * &d) - &c;
                let core = &lin(&two) * &inner;
                if which == MatrixKind::L {
                    let u = &core - &d.scale(&(&two * &r1));
                    (lin(&two), u, -&d)
                } else {
                    (lin(&two), core, d)
                }
            }
            (CoronaKind::SubdivisionEdge, _) => {
                let g = &(&lin(&(&two + &n2)) * &d) - &c;
                let core = &lin(&r1) * &g;
                if which == MatrixKind::L {
                    let u = &core - &d.scale(&(&two * &r1));
                    (g, u, -&d)
                } else {
                    (g, core, d)
                }
            }
        };
        Ok(Self {
            block,
            copies: spec.copy_count(),
            prefactor,
            exponent: g1.edge_count() as i64 - g1.vertex_count() as i64,
            u,
            v,
            g1_matrix: g1.matrix(which),
        })
    }
}

/// Exact characteristic polynomial of the `which` matrix of the corona,
/// from the closed form. `G1` must be regular; `G2` is arbitrary.
pub fn theorem_charpoly(spec: &CoronaSpec, which: MatrixKind) -> Result<FactoredCharPoly> {
    let parts = Parts::new(spec, which)?;
    let chi1 = charpoly_exact(&parts.g1_matrix)?;
    let mut factors = vec![(parts.block.clone(), parts.copies)];
    for (f, k) in chi1.square_free_decomposition() {
        factors.push((homogeneous_eval(&f, &parts.u, &parts.v)?, k));
    }
    if parts.exponent >= 0 {
        factors.push((parts.prefactor.clone(), parts.exponent as usize));
    } else {
        cancel_prefactor(&mut factors, &parts.prefactor, parts.exponent.unsigned_abs() as usize)?;
    }
    let out = FactoredCharPoly::new(factors);
    if out.degree() != spec.vertex_count() {
        return Err(Error::InexactDivision(format!(
            "degree {} does not match {} vertices",
            out.degree(),
            spec.vertex_count()
        )));
    }
    Ok(out)
}

/// Divides `g^need` out of the product, factor by factor where possible and
/// through the expanded product otherwise.
fn cancel_prefactor(factors: &mut Vec<(IntPoly, usize)>, g: &IntPoly, mut need: usize) -> Result<()> {
    for (f, mult) in factors.iter_mut() {
        while need >= *mult {
            match f.div_exact(g) {
                Ok(q) => {
                    *f = q;
                    need -= *mult;
                }
                Err(_) => break,
            }
        }
        if need == 0 {
            return Ok(());
        }
    }
    let product = FactoredCharPoly::new(std::mem::take(factors));
    let quotient = product.expanded().div_exact(&g.pow(need))?;
    *factors = vec![(quotient, 1)];
    Ok(())
}

/// Spectrum of the `which` matrix of the corona from the closed form, as
/// ascending `(value, multiplicity)` pairs.
///
/// Multiplicities are exact products of counts, so this stays cheap for
/// coronae far too large to assemble.
pub fn theorem_spectrum_grouped(spec: &CoronaSpec, which: MatrixKind) -> Result<Vec<(f64, usize)>> {
    let parts = Parts::new(spec, which)?;
    let mut entries: Vec<(f64, i64)> = Vec::new();
    for (val, k) in real_roots(&parts.block)?.multiplicity_view(CLUSTER_TOL) {
        entries.push((val, (k * parts.copies) as i64));
    }
    for (val, k) in real_roots(&parts.prefactor)?.multiplicity_view(CLUSTER_TOL) {
        entries.push((val, k as i64 * parts.exponent));
    }
    let u = to_f64(&parts.u);
    let v = to_f64(&parts.v);
    let lambdas = eigenvalues_sym(&parts.g1_matrix.to_f64())?;
    for (lambda, count) in lambdas.multiplicity_view(CLUSTER_TOL) {
        let len = u.len().max(v.len());
        let coeffs: Vec<f64> = (0..len)
            .map(|i| u.get(i).unwrap_or(&0.0) - lambda * v.get(i).unwrap_or(&0.0))
            .collect();
        for root in real_roots_f64(&coeffs)? {
            entries.push((root, count as i64));
        }
    }
    settle(entries)
}

fn to_f64(p: &IntPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect()
}

/// Applies negative counts to the nearest positive entries, then merges
/// values closer than the clustering tolerance.
fn settle(mut entries: Vec<(f64, i64)>) -> Result<Vec<(f64, usize)>> {
    entries.sort_by(|a, b| a.0.total_cmp(&b.0));
    let negatives: Vec<(f64, i64)> = entries.iter().copied().filter(|e| e.1 < 0).collect();
    entries.retain(|e| e.1 > 0);
    for (val, k) in negatives {
        let mut left = -k;
        while left > 0 {
            let nearest = entries
                .iter()
                .enumerate()
                .filter(|(_, e)| e.1 > 0)
                .min_by(|a, b| (a.1 .0 - val).abs().total_cmp(&(b.1 .0 - val).abs()))
                .map(|(i, _)| i)
                .filter(|&i| (entries[i].0 - val).abs() <= 1e-6 * val.abs().max(1.0));
            let Some(i) = nearest else {
                return Err(Error::InexactDivision(format!("no eigenvalue near {val} to cancel")));
            };
            let take = left.min(entries[i].1);
            entries[i].1 -= take;
            left -= take;
        }
    }
    let mut out: Vec<(f64, usize)> = Vec::new();
    for (val, k) in entries.into_iter().filter(|e| e.1 > 0) {
        let k = k as usize;
        match out.last_mut() {
            Some((prev, pk)) if val - *prev <= CLUSTER_TOL => {
                *prev = (*prev * *pk as f64 + val * k as f64) / (*pk + k) as f64;
                *pk += k;
            }
            _ => out.push((val, k)),
        }
    }
    Ok(out)
}

/// Full spectrum from the closed form; `G1` must be regular.
pub fn theorem_spectrum(spec: &CoronaSpec, which: MatrixKind) -> Result<SpectrumMultiset> {
    Ok(SpectrumMultiset::from_grouped(&theorem_spectrum_grouped(spec, which)?))
}

/// A- or Q-spectrum of a corona of two regular graphs.
pub fn theorem_spectrum_regular(spec: &CoronaSpec, which: MatrixKind) -> Result<SpectrumMultiset> {
    if !matches!(which, MatrixKind::A | MatrixKind::Q) {
        return Err(Error::InvalidParams(format!("expected A or Q, got {which}")));
    }
    require_regular(spec.g1(), "G1")?;
    require_regular(spec.g2(), "G2")?;
    theorem_spectrum(spec, which)
}

/// A-spectrum of `G ⊙ K_{p,q}` or `G ⊖ K_{p,q}` for a regular `G` with at
/// least as many edges as vertices.
pub fn kpq_spectrum(g: &Graph, p: usize, q: usize, kind: CoronaKind) -> Result<SpectrumMultiset> {
    require_regular(g, "G")?;
    if p == 0 || q == 0 {
        return Err(Error::InvalidParams("K_{p,q} needs p, q >= 1".into()));
    }
    if g.edge_count() < g.vertex_count() {
        return Err(Error::InvalidParams(
            "G needs at least as many edges as vertices".into(),
        ));
    }
    let spec = CoronaSpec::new(g.clone(), Graph::complete_bipartite(p, q)?, kind)?;
    theorem_spectrum(&spec, MatrixKind::A)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::spectra_equal;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn spec(g1: Graph, g2: Graph, kind: CoronaKind) -> CoronaSpec {
        CoronaSpec::new(g1, g2, kind).unwrap()
    }

    fn direct(spec: &CoronaSpec, which: MatrixKind) -> IntPoly {
        charpoly_exact(&spec.build().0.matrix(which)).unwrap()
    }

    fn direct_spectrum(spec: &CoronaSpec, which: MatrixKind) -> SpectrumMultiset {
        eigenvalues_sym(&spec.build().0.matrix(which).to_f64()).unwrap()
    }

    #[test]
    fn k5_vertex_corona_polynomial() {
        let s = spec(
            Graph::complete(5).unwrap(),
            Graph::empty(1),
            CoronaKind::SubdivisionVertex,
        );
        let expected = &(&IntPoly::monomial(1, 10) * &p(&[-9, 0, 1])) * &p(&[-4, 0, 1]).pow(4);
        assert_eq!(theorem_charpoly(&s, MatrixKind::A).unwrap().expanded(), &expected);
    }

    #[test]
    fn k5_edge_corona_polynomial() {
        let s = spec(
            Graph::complete(5).unwrap(),
            Graph::empty(1),
            CoronaKind::SubdivisionEdge,
        );
        let expected =
            &(&(&IntPoly::monomial(1, 5) * &p(&[-9, 0, 1])) * &p(&[-4, 0, 1]).pow(4)) * &p(&[-1, 0, 1]).pow(5);
        assert_eq!(theorem_charpoly(&s, MatrixKind::A).unwrap().expanded(), &expected);
    }

    #[test]
    fn laplacian_c4_k2_matches_direct() {
        for kind in CoronaKind::BOTH {
            let s = spec(Graph::cycle(4).unwrap(), Graph::complete(2).unwrap(), kind);
            assert_eq!(
                theorem_charpoly(&s, MatrixKind::L).unwrap().expanded(),
                &direct(&s, MatrixKind::L)
            );
        }
    }

    #[test]
    fn fewer_edges_than_vertices() {
        // K_2 and a perfect matching have m1 < n1; empty G1 has m1 = 0
        let g1s = [
            Graph::complete(2).unwrap(),
            Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()),
        ];
        for g1 in g1s {
            for g2 in [Graph::empty(1), Graph::path(3).unwrap(), Graph::complete(3).unwrap()] {
                for kind in CoronaKind::BOTH {
                    for which in MatrixKind::SPECTRAL {
                        let s = spec(g1.clone(), g2.clone(), kind);
                        let t = theorem_charpoly(&s, which).unwrap();
                        assert_eq!(t.expanded(), &direct(&s, which), "{s} {which}");
                    }
                }
            }
        }
        for which in MatrixKind::SPECTRAL {
            let s = spec(Graph::empty(3), Graph::path(2).unwrap(), CoronaKind::SubdivisionVertex);
            assert_eq!(theorem_charpoly(&s, which).unwrap().expanded(), &direct(&s, which));
        }
    }

    #[test]
    fn irregular_base_is_rejected() {
        let s = spec(Graph::path(4).unwrap(), Graph::empty(1), CoronaKind::SubdivisionVertex);
        assert_eq!(theorem_charpoly(&s, MatrixKind::A).unwrap_err().code(), "REG_REQUIRED");
        let s = spec(
            Graph::cycle(4).unwrap(),
            Graph::path(3).unwrap(),
            CoronaKind::SubdivisionVertex,
        );
        assert_eq!(
            theorem_spectrum_regular(&s, MatrixKind::A).unwrap_err().code(),
            "REG_REQUIRED"
        );
        assert!(theorem_spectrum(&s, MatrixKind::A).is_ok());
    }

    #[test]
    fn k5_with_single_vertex_spectra() {
        let k5 = Graph::complete(5).unwrap();
        let s = spec(k5.clone(), Graph::empty(1), CoronaKind::SubdivisionVertex);
        let got = theorem_spectrum_regular(&s, MatrixKind::A).unwrap();
        let want = SpectrumMultiset::from_grouped(&[(-3.0, 1), (-2.0, 4), (0.0, 10), (2.0, 4), (3.0, 1)]);
        assert!(spectra_equal(&got, &want, 1e-8), "{got:?}");
        let s = spec(k5, Graph::empty(1), CoronaKind::SubdivisionEdge);
        let got = theorem_spectrum_regular(&s, MatrixKind::A).unwrap();
        let want =
            SpectrumMultiset::from_grouped(&[(-3.0, 1), (-2.0, 4), (-1.0, 5), (0.0, 5), (1.0, 5), (2.0, 4), (3.0, 1)]);
        assert!(spectra_equal(&got, &want, 1e-8), "{got:?}");
    }

    #[test]
    fn signless_spectrum_matches_direct() {
        for kind in CoronaKind::BOTH {
            let s = spec(Graph::cycle(4).unwrap(), Graph::cycle(3).unwrap(), kind);
            let got = theorem_spectrum_regular(&s, MatrixKind::Q).unwrap();
            assert!(spectra_equal(&got, &direct_spectrum(&s, MatrixKind::Q), 1e-8));
        }
    }

    #[test]
    fn kpq_examples() {
        let c3 = Graph::cycle(3).unwrap();
        let a = kpq_spectrum(&c3, 1, 1, CoronaKind::SubdivisionVertex).unwrap();
        let s = spec(c3.clone(), Graph::complete(2).unwrap(), CoronaKind::SubdivisionVertex);
        assert!(spectra_equal(
            &a,
            &theorem_spectrum_regular(&s, MatrixKind::A).unwrap(),
            1e-10
        ));

        let c4 = Graph::cycle(4).unwrap();
        let b = kpq_spectrum(&c4, 2, 1, CoronaKind::SubdivisionVertex).unwrap();
        // m + (p + q - 3)n flat zeros, plus one quartic root at 0 for each
        // λ_j = -r; C_4 is bipartite, so λ = -2 contributes exactly one
        let zeros = b.values().iter().filter(|v| v.abs() < 1e-8).count();
        let (m, n, p, q) = (4usize, 4usize, 2usize, 1usize);
        assert_eq!(zeros, m + (p + q - 3) * n + 1);
        let s = spec(
            c4,
            Graph::complete_bipartite(2, 1).unwrap(),
            CoronaKind::SubdivisionVertex,
        );
        assert!(spectra_equal(&b, &direct_spectrum(&s, MatrixKind::A), 1e-8));

        let e = kpq_spectrum(&c3, 1, 1, CoronaKind::SubdivisionEdge).unwrap();
        let s = spec(c3.clone(), Graph::complete(2).unwrap(), CoronaKind::SubdivisionEdge);
        assert!(spectra_equal(&e, &direct_spectrum(&s, MatrixKind::A), 1e-8));

        assert_eq!(
            kpq_spectrum(&c3, 0, 2, CoronaKind::SubdivisionVertex)
                .unwrap_err()
                .code(),
            "INVALID_PARAMS"
        );
        let path = Graph::path(3).unwrap();
        assert_eq!(
            kpq_spectrum(&path, 1, 1, CoronaKind::SubdivisionVertex)
                .unwrap_err()
                .code(),
            "REG_REQUIRED"
        );
    }

    #[test]
    fn cubic_count_identity() {
        // n1(n2 - 1) + (m1 - n1) + 3n1 equals the vertex count of G1 ⊙ G2
        for (g1, n2) in [
            (Graph::complete(5).unwrap(), 1),
            (Graph::cycle(6).unwrap(), 4),
            (Graph::complete(4).unwrap(), 3),
        ] {
            let (n1, m1) = (g1.vertex_count() as i64, g1.edge_count() as i64);
            let s = spec(g1, Graph::empty(n2), CoronaKind::SubdivisionVertex);
            let n2 = n2 as i64;
            assert_eq!(n1 * (n2 - 1) + (m1 - n1) + 3 * n1, s.vertex_count() as i64);
        }
    }

    #[test]
    fn degree_bookkeeping() {
        let s = spec(
            Graph::complete_bipartite(3, 3).unwrap(),
            Graph::path(3).unwrap(),
            CoronaKind::SubdivisionEdge,
        );
        for which in MatrixKind::SPECTRAL {
            assert_eq!(theorem_charpoly(&s, which).unwrap().degree(), s.vertex_count());
        }
    }

    fn arb_regular() -> impl Strategy<Value = Graph> {
        prop_oneof![
            (3usize..=6).prop_map(|n| Graph::cycle(n).unwrap()),
            (1usize..=5).prop_map(|n| Graph::complete(n).unwrap()),
            (1usize..=3).prop_map(|n| Graph::complete_bipartite(n, n).unwrap()),
            (1usize..=3).prop_map(Graph::empty),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn closed_form_equals_direct(
            g1 in arb_regular(),
            g2 in crate::graph::tests::arb_graph(4),
            edge in any::<bool>(),
            which in prop::sample::select(MatrixKind::SPECTRAL.to_vec()),
        ) {
            let kind = if edge { CoronaKind::SubdivisionEdge } else { CoronaKind::SubdivisionVertex };
            prop_assume!(g2.vertex_count() > 0 && (!edge || g1.edge_count() > 0));
            let s = spec(g1, g2, kind);
            let t = theorem_charpoly(&s, which).unwrap();
            prop_assert_eq!(t.expanded(), &direct(&s, which));
            let numeric = theorem_spectrum(&s, which).unwrap();
            prop_assert!(spectra_equal(&numeric, &direct_spectrum(&s, which), 1e-7));
        }
    }
}
