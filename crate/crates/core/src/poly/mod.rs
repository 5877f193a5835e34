//! Exact univariate polynomials over the integers.

mod charpoly;
mod rational;

pub use charpoly::{
    charpoly_exact, charpoly_faddeev_leverrier, charpoly_multimodular, coronal, coronal_constant_rowsum,
};
pub use rational::RationalFunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense polynomial, `coeffs[k]` is the coefficient of `x^k`.
///
/// Always canonical: no trailing zero coefficients, and the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: impl Into<BigInt>) -> Self {
        Self::new(vec![-a.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &BigInt) -> Self {
        // synthetic Taylor shift, O(d^2)
        let mut c = self.coeffs.clone();
        let d = c.len();
        for i in 0..d {
            for j in (i..d.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &IntPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `x^k`; the low `k` coefficients must be zero.
    pub fn div_x_pow(&self, k: usize) -> Result<Self> {
        if self.zero_root_multiplicity() < k && !self.is_zero() {
            return Err(Error::InexactDivision(format!("x^{k} does not divide {self}")));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Long division `self = q·d + r` with `deg r < deg d`, valid only when
    /// every quotient coefficient is an integer; returns `None` otherwise.
    pub fn div_rem(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (t, rem) = r[k].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    r[k - dd + i] -= &t * c;
                }
            }
            q[k - dd] = t;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &IntPoly) -> Result<Self> {
        match self.div_rem(d) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::InexactDivision(format!("({d}) does not divide ({self})"))),
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        matches!(other.div_rem(self), Some((_, r)) if r.is_zero())
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1)·self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        let mut steps = r.len() - dd;
        let mut k = r.len();
        while k > dd {
            k -= 1;
            let t = r[k].clone();
            for c in r.iter_mut().take(k) {
                *c *= lc;
            }
            if !t.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate().take(dd) {
                    r[k - dd + i] -= &t * c;
                }
            }
            r[k] = BigInt::zero();
            steps -= 1;
        }
        debug_assert_eq!(steps, 0);
        Self::new(r)
    }

    /// Primitive gcd with positive leading coefficient, by the subresultant
    /// remainder sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if b.is_zero() {
            return a;
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            let divisor = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = Self::new(r.coeffs.iter().map(|c| c / &divisor).collect());
            g = a.leading().unwrap().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
            };
        }
        b.primitive_part()
    }

    /// Square-free decomposition (Yun): primitive factors `f_k` with
    /// `self = c · Π f_k^k`, returned as `(f_k, k)` for the nonconstant
    /// `f_k` only. Factors of a monic polynomial are monic.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), k));
            }
            let next_b = b.div_exact(&a).expect("gcd divides b");
            let next_c = d.div_exact(&a).expect("gcd divides d");
            d = &next_c - &next_b.derivative();
            b = next_b;
            k += 1;
        }
        out
    }

    /// Coefficients as `f64`, all scaled by a common power of two so the
    /// largest fits comfortably in range. Roots are unaffected by the scale.
    pub fn to_f64_scaled(&self) -> Vec<f64> {
        let max_bits = self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
        let shift = max_bits.saturating_sub(900);
        self.coeffs
            .iter()
            .map(|c| {
                let s: BigInt = c >> shift;
                s.to_f64().unwrap_or(0.0)
            })
            .collect()
    }

    /// Decimal strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// `Σ a_k u^k v^(d-k)` where `chi = Σ a_k y^k` is monic of degree `d`,
/// which equals `Π_i (u - λ_i v)` over the roots `λ_i` of `chi`.
pub fn homogeneous_eval(chi: &IntPoly, u: &IntPoly, v: &IntPoly) -> Result<IntPoly> {
    if !chi.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = chi.degree().unwrap();
    // Horner in homogeneous form: acc_j = acc_{j-1}·u + a_{d-j}·v^j
    let mut v_pow = IntPoly::one();
    let mut acc = IntPoly::one();
    for j in 1..=d {
        v_pow = &v_pow * v;
        acc = &(&acc * u) + &v_pow.scale(&chi.coeffs[d - j]);
    }
    Ok(acc)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(c)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        IntPoly::new(c)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        IntPoly::from_decimal_strings(&v).map_err(serde::de::Error::custom)
    }
}
