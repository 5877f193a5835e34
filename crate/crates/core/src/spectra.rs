//! Floating-point eigenvalues, polynomial real roots, and tolerance-aware
//! spectrum comparison.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Absolute threshold below which two roots count as the same value.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Eigenvalue multiset, sorted ascending.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SpectrumMultiset {
    values: Vec<f64>,
}

impl SpectrumMultiset {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values }
    }

    /// Expands `(value, count)` pairs.
    pub fn from_grouped(groups: &[(f64, usize)]) -> Self {
        Self::new(groups.iter().flat_map(|&(v, c)| std::iter::repeat(v).take(c)).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Groups consecutive values closer than `tol` (absolute); each group is
    /// reported by its mean.
    pub fn multiplicity_view(&self, tol: f64) -> Vec<(f64, usize)> {
        cluster_sorted(&self.values, tol)
    }

    pub fn to_report(&self) -> SpectrumReport {
        SpectrumReport {
            values: self.values.clone(),
            multiplicities: self.multiplicity_view(CLUSTER_TOL),
        }
    }
}

/// JSON shape of a spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub values: Vec<f64>,
    pub multiplicities: Vec<(f64, usize)>,
}

pub(crate) fn cluster_sorted(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] > tol {
            if i > start {
                let block = &values[start..i];
                let mean = block.iter().sum::<f64>() / block.len() as f64;
                out.push((mean, block.len()));
            }
            start = i;
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn eigenvalues_sym(m: &DMatrix<f64>) -> Result<SpectrumMultiset> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let asym = (&m.transpose() - m).amax();
    if asym > 1e-12 || asym.is_nan() {
        return Err(Error::NotSymmetric(asym));
    }
    if m.nrows() == 0 {
        return Ok(SpectrumMultiset::default());
    }
    let eig = SymmetricEigen::new(m.clone());
    Ok(SpectrumMultiset::new(eig.eigenvalues.iter().copied().collect()))
}

/// All roots of `p` with multiplicity; every root must be real.
///
/// Multiplicities come exactly from a square-free decomposition, so each
/// companion matrix only ever sees simple roots.
pub fn real_roots(p: &IntPoly) -> Result<SpectrumMultiset> {
    if p.is_zero() {
        return Err(Error::InvalidParams("roots of the zero polynomial".into()));
    }
    let mut values = Vec::with_capacity(p.degree().unwrap());
    for (factor, mult) in p.square_free_decomposition() {
        for r in simple_roots(&factor.to_f64_scaled(), 1e-8)? {
            values.extend(std::iter::repeat(r).take(mult));
        }
    }
    Ok(SpectrumMultiset::new(values))
}

/// Roots of a polynomial with `f64` coefficients (constant term first),
/// expected to be real. Roots whose imaginary part is within `1e-6`
/// (relative) are projected onto the real axis, which also absorbs the
/// splitting of a repeated root into a near-real conjugate pair.
pub fn real_roots_f64(coeffs: &[f64]) -> Result<Vec<f64>> {
    let mut r = simple_roots(coeffs, 1e-6)?;
    r.sort_by(f64::total_cmp);
    Ok(r)
}

fn simple_roots(coeffs: &[f64], imag_tol: f64) -> Result<Vec<f64>> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    if c.is_empty() {
        return Err(Error::InvalidParams("roots of the zero polynomial".into()));
    }
    let zeros = c.iter().take_while(|v| **v == 0.0).count();
    let c = &c[zeros..];
    let mut roots = vec![0.0; zeros];
    let d = c.len() - 1;
    match d {
        0 => {}
        1 => roots.push(-c[0] / c[1]),
        _ => {
            let lc = c[d];
            let companion = DMatrix::from_fn(d, d, |i, j| {
                if j == d - 1 {
                    -c[i] / lc
                } else if i == j + 1 {
                    1.0
                } else {
                    0.0
                }
            });
            let balanced = balance(companion);
            for z in balanced.complex_eigenvalues().iter() {
                if z.im.abs() > imag_tol * z.re.abs().max(1.0) {
                    return Err(Error::ComplexRoots { re: z.re, im: z.im });
                }
                roots.push(polish(c, z.re));
            }
        }
    }
    Ok(roots)
}

/// A few guarded Newton steps on the original coefficients.
fn polish(c: &[f64], mut x: f64) -> f64 {
    let eval = |x: f64| {
        let mut f = 0.0;
        let mut df = 0.0;
        for &a in c.iter().rev() {
            df = df * x + f;
            f = f * x + a;
        }
        (f, df)
    };
    for _ in 0..3 {
        let (f, df) = eval(x);
        if f == 0.0 || df == 0.0 || !df.is_finite() {
            break;
        }
        let next = x - f / df;
        if !next.is_finite() || eval(next).0.abs() >= f.abs() {
            break;
        }
        x = next;
    }
    x
}

/// Parlett–Reinsch diagonal similarity scaling (radix 2).
fn balance(mut a: DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    let radix = 2.0f64;
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / radix;
            while c < g {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while c > g {
                f /= radix;
                c /= radix * radix;
            }
            if (c + r) / f < 0.95 * s {
                converged = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
    a
}

/// Same length and `|a_k - b_k| <= tol·max(1, |a_k|)` after sorting.
pub fn spectra_equal(s1: &SpectrumMultiset, s2: &SpectrumMultiset, tol: f64) -> bool {
    s1.len() == s2.len()
        && s1
            .values
            .iter()
            .zip(&s2.values)
            .all(|(a, b)| (a - b).abs() <= tol * a.abs().max(1.0))
}

/// Largest `|a_k - b_k|` over the sorted lists, `inf` on length mismatch.
pub fn max_abs_difference(s1: &SpectrumMultiset, s2: &SpectrumMultiset) -> f64 {
    if s1.len() != s2.len() {
        return f64::INFINITY;
    }
    s1.values
        .iter()
        .zip(&s2.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}
