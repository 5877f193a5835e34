use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rat, reduced_laplacian_poly, regular_connected_base};
use crate::corona::{CoronaKind, CoronaSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};

/// Spanning-tree count by the matrix-tree theorem (exact Laplacian cofactor).
/// Zero for disconnected graphs.
pub fn spanning_trees_oracle(g: &Graph) -> BigInt {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return BigInt::zero();
    }
    let keep: Vec<usize> = (1..n).collect();
    g.matrix(MatrixKind::L)
        .principal_submatrix(&keep)
        .determinant()
        .expect("square minor")
}

/// Spanning-tree count of a corona with regular connected `G1`, from the
/// closed form in `r1`, `n1`, `m1`, `n2`, `t(G1)` and `Π_{i≥2}(1 + μ_i(G2))`.
pub fn spanning_trees_formula(spec: &CoronaSpec) -> Result<BigInt> {
    let r1 = regular_connected_base(spec)?;
    let (n1, m1) = (spec.g1().vertex_count(), spec.g1().edge_count());
    let n2 = spec.g2().vertex_count();
    let t1 = spanning_trees_oracle(spec.g1());

    // Π_{i≥2} (1 + μ_i) = (-1)^(n2-1) · f(-1) where f = φ(L(G2))/x
    let mut shifted = reduced_laplacian_poly(spec.g2())?.eval(&BigInt::from(-1));
    if (n2 - 1) % 2 == 1 {
        shifted = -shifted;
    }

    let (scalar, copies, denom) = match spec.kind() {
        CoronaKind::SubdivisionVertex => (2 + r1 + 2 * n2, n1, n1 + m1 + n1 * n2),
        CoronaKind::SubdivisionEdge => (2 + r1 + r1 * n2, m1, n1 + m1 + m1 * n2),
    };
    let exp = m1 as i64 - n1 as i64;
    let two_pow = if exp >= 0 {
        rat(BigInt::from(2).pow(exp as u32))
    } else {
        BigRational::one() / rat(BigInt::from(2).pow((-exp) as u32))
    };
    let value = two_pow * rat(scalar) * rat(n1) * rat(t1) * rat(num_traits::pow(shifted, copies)) / rat(denom);
    if !value.is_integer() {
        return Err(Error::InexactDivision(format!(
            "spanning-tree count {value} is not an integer"
        )));
    }
    Ok(value.to_integer())
}
