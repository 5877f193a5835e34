//! Spectra of subdivision-vertex and subdivision-edge coronae.
//!
//! ```
//! use corona_core::{theorem_charpoly, CoronaKind, CoronaSpec, Graph, MatrixKind};
//!
//! let spec = CoronaSpec::new(Graph::cycle(4)?, Graph::path(3)?, CoronaKind::SubdivisionVertex)?;
//! let (g, _labels) = spec.build();
//! let closed = theorem_charpoly(&spec, MatrixKind::L)?;
//! assert_eq!(closed.expanded(), &corona_core::poly::charpoly_exact(&g.matrix(MatrixKind::L))?);
//! # Ok::<(), corona_core::Error>(())
//! ```

pub mod corona;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod spectra;
pub mod theorem;

pub use corona::{corona, subdivision, CoronaKind, CoronaLabeling, CoronaSpec, LabelingSidecar};
pub use error::{Error, Result};
pub use graph::{Family, Graph, MatrixKind};
pub use invariants::{
    cospectral_search, integral_family, is_integral, kirchhoff_formula, kirchhoff_oracle, spanning_trees_formula,
    spanning_trees_oracle, verify_cospectral_corollary, CospectralPair, IntegralFamilyParams, Side,
};
pub use matrix::IntMatrix;
pub use nalgebra::DMatrix;
pub use poly::{IntPoly, RationalFunc};
pub use spectra::{eigenvalues_sym, real_roots, spectra_equal, SpectrumMultiset};
pub use theorem::{
    kpq_spectrum, theorem_charpoly, theorem_spectrum, theorem_spectrum_grouped, theorem_spectrum_regular,
    FactoredCharPoly,
};
