use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: `gcd(num, den)` is constant, the integer contents of
/// `num` and `den` are jointly coprime, and `den` has a positive leading
/// coefficient. Equal rational functions therefore compare equal with `==`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParams("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = IntPoly::new(num.coeffs().iter().map(|a| a / &c).collect());
            den = IntPoly::new(den.coeffs().iter().map(|a| a / &c).collect());
        }
        Ok(Self { num, den })
    }

    /// `n / (x - t)`.
    pub fn constant_over_linear(n: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        let n = n.into();
        assert!(!n.is_zero());
        Self::new(IntPoly::constant(n), IntPoly::linear_root(t)).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// `f(x + a)` for numerator and denominator alike.
    pub fn shift(&self, a: &BigInt) -> Self {
        // shifting preserves coprimality and leading coefficients
        Self {
            num: self.num.shift(a),
            den: self.den.shift(a),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunc[{self}]")
    }
}

impl Zero for RationalFunc {
    fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: RationalFunc) -> RationalFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunc::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}
