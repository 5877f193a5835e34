use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{rat, reduced_laplacian_poly, regular_connected_base};
use crate::corona::{CoronaKind, CoronaSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::poly::IntPoly;
use crate::spectra::eigenvalues_sym;

/// `Kf(G) = n Σ_{i≥2} 1/μ_i`, from numeric Laplacian eigenvalues.
pub fn kirchhoff_oracle(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParams("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mu = eigenvalues_sym(&g.matrix(MatrixKind::L).to_f64())?;
    Ok(n as f64 * mu.values()[1..].iter().map(|m| 1.0 / m).sum::<f64>())
}

/// `Σ 1/(a - ρ)` over the roots `ρ` of `f`, i.e. `f'(a)/f(a)`.
fn reciprocal_sum(f: &IntPoly, a: i64) -> BigRational {
    let a = BigInt::from(a);
    BigRational::new(f.derivative().eval(&a), f.eval(&a))
}

/// Kirchhoff index of a corona with regular connected `G1`, exactly.
///
/// `Σ 1/μ_i(G1)` and `Σ 1/(1 + μ_i(G2))` over the nonzero-index Laplacian
/// eigenvalues come from logarithmic derivatives of the characteristic
/// polynomials, so no eigenvalue is computed.
pub fn kirchhoff_formula_exact(spec: &CoronaSpec) -> Result<BigRational> {
    let r1 = regular_connected_base(spec)?;
    let (n1, m1) = (spec.g1().vertex_count() as i64, spec.g1().edge_count() as i64);
    let n2 = spec.g2().vertex_count() as i64;
    let r1 = r1 as i64;
    let big_n = rat(spec.vertex_count());

    let f1 = reduced_laplacian_poly(spec.g1())?;
    // Σ 1/μ_i = -f1'(0)/f1(0); empty for a single vertex
    let inv_mu1 = if n1 == 1 {
        BigRational::zero()
    } else {
        -reciprocal_sum(&f1, 0)
    };
    let f2 = reduced_laplacian_poly(spec.g2())?;
    let inv_shift2 = if n2 == 1 {
        BigRational::zero()
    } else {
        -reciprocal_sum(&f2, -1)
    };

    let (flat, scalar, copies) = match spec.kind() {
        CoronaKind::SubdivisionVertex => (m1 + n1 - 2, 2 + r1 + 2 * n2, n1),
        CoronaKind::SubdivisionEdge => ((3 + n2) * m1 - (n2 + 1) * n1 - 2, 2 + r1 + r1 * n2, m1),
    };
    let kf1 = rat(n1) * inv_mu1;
    let inner = BigRational::new(flat.into(), 2.into())
        + BigRational::new((3 + r1 + n2).into(), scalar.into())
        + BigRational::new(scalar.into(), n1.into()) * kf1
        + rat(copies) * inv_shift2;
    Ok(big_n * inner)
}

pub fn kirchhoff_formula(spec: &CoronaSpec) -> Result<f64> {
    let v = kirchhoff_formula_exact(spec)?;
    Ok(v.to_f64().unwrap_or(f64::NAN))
}
