//! Graph invariants of coronae, each paired with an independent oracle.

mod cospectral;
mod integral;
mod kirchhoff;
mod spanning;

pub use cospectral::{
    brute_force_canonical_form, canonical_form, cospectral_search, cospectral_search_regular, graphs_on,
    verify_cospectral_corollary, CospectralPair, Side, MAX_SEARCH_VERTICES,
};
pub use integral::{
    integer_roots, integral_family, is_integral, is_integral_grouped, IntegralFamilyParams, IntegralInstance,
};
pub use kirchhoff::{kirchhoff_formula, kirchhoff_formula_exact, kirchhoff_oracle};
pub use spanning::{spanning_trees_formula, spanning_trees_oracle};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::corona::CoronaSpec;
use crate::error::{Error, Result};
use crate::graph::MatrixKind;
use crate::poly::{charpoly_exact, IntPoly};

/// Common preconditions of the spanning-tree and Kirchhoff formulas:
/// `G1` regular and connected. Returns `r1`.
fn regular_connected_base(spec: &CoronaSpec) -> Result<usize> {
    let r1 = spec
        .g1()
        .regularity()
        .ok_or_else(|| Error::RegRequired("G1 is not regular".into()))?;
    if !spec.g1().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(r1)
}

/// `φ(L(G); x) / x`, whose roots are the Laplacian eigenvalues after `μ_1 = 0`.
fn reduced_laplacian_poly(g: &crate::graph::Graph) -> Result<IntPoly> {
    charpoly_exact(&g.matrix(MatrixKind::L))?.div_x_pow(1)
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}
