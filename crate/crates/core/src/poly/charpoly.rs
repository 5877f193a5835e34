//! Exact characteristic polynomials and matrix coronals.
//!
//! Two independent routes:
//!
//! * Faddeev–LeVerrier over the integers. Each step divides a trace by the
//!   step index; the quotient is a coefficient of the characteristic
//!   polynomial of an integer matrix, so the division is exact (checked).
//!   The intermediate matrices are the coefficients of `adj(xI - M)`, which
//!   is what the coronal needs.
//! * Hessenberg reduction modulo word-size primes with CRT reconstruction,
//!   for large symmetric matrices. The number of primes comes from the bound
//!   `|c_k| <= Π (1 + |λ_i|)` on the coefficients, evaluated with padded
//!   numeric eigenvalues, and the reconstruction must also stay stable under
//!   one extra prime.

use nalgebra::SymmetricEigen;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntPoly, RationalFunc};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Symmetric matrices at least this large use the multimodular route.
const MODULAR_THRESHOLD: usize = 64;

/// `det(xI - M)`.
pub fn charpoly_exact(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.ensure_square()?;
    if n >= MODULAR_THRESHOLD && m.is_symmetric() {
        charpoly_multimodular(m)
    } else {
        charpoly_faddeev_leverrier(m)
    }
}

pub fn charpoly_faddeev_leverrier(m: &IntMatrix) -> Result<IntPoly> {
    m.ensure_square()?;
    Ok(faddeev_leverrier(m, false).0)
}

/// Runs the recurrence; optionally also returns the entry sums of the
/// adjugate coefficients, `s[k] = 1^T N_k 1` with
/// `adj(xI - M) = Σ_k N_k x^k`.
fn faddeev_leverrier(m: &IntMatrix, want_sums: bool) -> (IntPoly, Vec<BigInt>) {
    let n = m.rows();
    let sparse = m.sparse_rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut sums = vec![BigInt::zero(); n];
    if n == 0 {
        return (IntPoly::one(), sums);
    }
    // current adjugate coefficient N_{n-k}, row-major
    let mut cur = vec![BigInt::zero(); n * n];
    for i in 0..n {
        cur[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        if want_sums {
            sums[n - k] = cur.iter().sum();
        }
        let mut prod = vec![BigInt::zero(); n * n];
        for (i, row) in sparse.iter().enumerate() {
            let out = &mut prod[i * n..(i + 1) * n];
            for (l, a) in row {
                let src = &cur[l * n..(l + 1) * n];
                for (o, s) in out.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *o += a * s;
                    }
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &prod[i * n + i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible by {k}");
        c[n - k] = -q;
        for i in 0..n {
            prod[i * n + i] += &c[n - k];
        }
        cur = prod;
    }
    // Cayley-Hamilton: the last update must vanish.
    assert!(cur.iter().all(Zero::is_zero), "Faddeev-LeVerrier residual is nonzero");
    (IntPoly::new(c), sums)
}

/// Multimodular characteristic polynomial of a symmetric integer matrix.
pub fn charpoly_multimodular(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.ensure_square()?;
    if !m.is_symmetric() {
        let asym = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (m.get(i, j) - m.get(j, i)).abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max);
        return Err(Error::NotSymmetric(asym));
    }
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let bound_bits = coefficient_bound_bits(m);
    let mut primes = PrimeIter::new();
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut prev: Option<Vec<BigInt>> = None;
    loop {
        let p = primes.next().expect("enough 31-bit primes");
        let residues = charpoly_mod_p(m, p);
        crt_update(&mut acc, &modulus, &residues, p);
        modulus *= p;
        let half = &modulus >> 1;
        let current: Vec<BigInt> = acc
            .iter()
            .map(|a| if a > &half { a - &modulus } else { a.clone() })
            .collect();
        let covered = modulus.bits() as f64 > bound_bits + 2.0;
        if covered && prev.as_ref() == Some(&current) {
            let poly = IntPoly::new(current);
            check_trace_identities(m, &poly)?;
            return Ok(poly);
        }
        prev = Some(current);
    }
}

/// `log2 Π (1 + |λ_i| + δ)` with numeric eigenvalues padded by `δ`.
fn coefficient_bound_bits(m: &IntMatrix) -> f64 {
    let a = m.to_f64();
    let fro = a.norm();
    let slack = 1e-6 * (1.0 + fro);
    let eig = SymmetricEigen::new(a).eigenvalues;
    eig.iter().map(|l| (1.0 + l.abs() + slack).log2()).sum::<f64>() + 64.0
}

/// Cheap exact sanity checks: `c_{n-1} = -tr M`, `c_{n-2} = (tr² - tr M²)/2`.
fn check_trace_identities(m: &IntMatrix, p: &IntPoly) -> Result<()> {
    let n = m.rows();
    let tr = m.trace();
    let ok1 = p.coeff(n - 1) == -tr.clone();
    let ok2 = n < 2 || {
        // M symmetric: tr(M^2) = sum of squares of entries
        let tr2: BigInt = m.entries().iter().map(|v| v * v).sum();
        p.coeff(n - 2) * BigInt::from(2) == &tr * &tr - tr2
    };
    if ok1 && ok2 && p.is_monic() && p.degree() == Some(n) {
        Ok(())
    } else {
        Err(Error::InexactDivision(
            "multimodular reconstruction failed its trace check".into(),
        ))
    }
}

fn crt_update(acc: &mut [BigInt], modulus: &BigInt, residues: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = (modulus % &pb).to_u64().unwrap();
    let inv = mod_inv(m_mod_p, p);
    for (a, &r) in acc.iter_mut().zip(residues) {
        let a_mod_p = (&*a % &pb).to_u64().unwrap();
        let diff = (r + p - a_mod_p) % p;
        let t = diff * inv % p;
        *a += modulus * BigInt::from(t);
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Descending primes below 2^31, so products of residues fit in `u64`.
struct PrimeIter {
    next: u64,
}

impl PrimeIter {
    fn new() -> Self {
        Self { next: (1 << 31) - 1 }
    }
}

impl Iterator for PrimeIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 1 << 30 {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Characteristic polynomial modulo `p` via similarity reduction to upper
/// Hessenberg form.
fn charpoly_mod_p(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.rows();
    let pb = BigInt::from(p);
    let mut h: Vec<u64> = m
        .entries()
        .iter()
        .map(|v| {
            let r = v.mod_floor(&pb);
            r.to_u64().unwrap()
        })
        .collect();
    let at = |i: usize, j: usize| i * n + j;
    for col in 0..n.saturating_sub(2) {
        let piv_row = col + 1;
        let Some(piv) = (piv_row..n).find(|&i| h[at(i, col)] != 0) else {
            continue;
        };
        if piv != piv_row {
            for j in 0..n {
                h.swap(at(piv, j), at(piv_row, j));
            }
            for i in 0..n {
                h.swap(at(i, piv), at(i, piv_row));
            }
        }
        let inv = mod_inv(h[at(piv_row, col)], p);
        for i in piv_row + 1..n {
            let t = h[at(i, col)] * inv % p;
            if t == 0 {
                continue;
            }
            // row_i -= t * row_piv
            for j in 0..n {
                let v = h[at(piv_row, j)];
                if v != 0 {
                    h[at(i, j)] = (h[at(i, j)] + p - t * v % p) % p;
                }
            }
            // col_piv += t * col_i
            for r in 0..n {
                let v = h[at(r, i)];
                if v != 0 {
                    h[at(r, piv_row)] = (h[at(r, piv_row)] + t * v) % p;
                }
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        let hkk = h[at(k - 1, k - 1)];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - c * hkk % p) % p;
        }
        let mut t = 1u64;
        for i in (1..k).rev() {
            t = t * h[at(i, i - 1)] % p;
            if t == 0 {
                break;
            }
            let coef = h[at(i - 1, k - 1)] * t % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// `Γ_M(x) = 1^T (xI - M)^{-1} 1`, reduced.
pub fn coronal(m: &IntMatrix) -> Result<RationalFunc> {
    m.ensure_square()?;
    let (chi, sums) = faddeev_leverrier(m, true);
    RationalFunc::new(IntPoly::new(sums), chi)
}

/// `n / (x - t)`, the coronal of any `n x n` matrix with constant row sum `t`.
pub fn coronal_constant_rowsum(n: usize, t: impl Into<BigInt>) -> Result<RationalFunc> {
    if n == 0 {
        return Err(Error::InvalidParams("coronal of an empty matrix".into()));
    }
    Ok(RationalFunc::constant_over_linear(BigInt::from(n), t))
}
