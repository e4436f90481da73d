//! The field `ℚ(α)` with canonical numerator/denominator pairs, and the
//! `β = α − 1` polynomial basis.

mod beta;
mod parse;
pub mod poly;

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use beta::BetaPoly;
pub use poly::IntPoly;

use crate::error::{ArithError, ParseError};

/// Canonical element of `ℚ(α)`: coprime integer polynomials, content of the
/// pair reduced to 1, denominator with positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate `α`.
    pub fn alpha() -> Self {
        RatFunc { num: IntPoly::monomial(BigInt::one(), 1), den: IntPoly::one() }
    }

    /// `α − 1`.
    pub fn beta() -> Self {
        Self::alpha() - Self::one()
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFunc { num: IntPoly::constant(c), den: IntPoly::one() }
    }

    pub fn from_biguint(c: BigUint) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(IntPoly::constant(q.numer().clone()), IntPoly::constant(q.denom().clone()))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    /// Canonicalizes `num / den`. Panics on a zero denominator; use
    /// [`RatFunc::checked_div`] for fallible division.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.degree() == Some(0) || num.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den).primitive();
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let mut c = num.content();
        c = num_integer::Integer::gcd(&c, &den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Polynomial in `α`, possibly with rational coefficients.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Polynomial in `α` with integer coefficients.
    pub fn is_integer_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Degree of the numerator minus that of the denominator; `None` for 0.
    pub fn degree(&self) -> Option<isize> {
        Some(self.num.degree()? as isize - self.den.degree()? as isize)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::from_parts(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(IntPoly::monomial(BigInt::one(), k as usize))
        } else {
            Self::from_parts(IntPoly::one(), IntPoly::monomial(BigInt::one(), (-k) as usize))
        }
    }

    /// `f(1/α)`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dn > dd {
            den = den.mul(&IntPoly::monomial(BigInt::one(), dn - dd));
        } else {
            num = num.mul(&IntPoly::monomial(BigInt::one(), dd - dn));
        }
        Self::from_parts(num, den)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_parts(self.num.scale(c), self.den.clone())
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Option<BigRational> {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Re-expansion at `α = 1 + β`.
    pub fn to_beta(&self) -> Result<BetaPoly, ArithError> {
        if !self.is_polynomial() {
            return Err(ArithError::NotPolynomial { denominator: self.den.format_in('a') });
        }
        let shifted = self.num.shift(&BigInt::one());
        let d = self.den.leading();
        Ok(BetaPoly::new(
            shifted
                .coeffs()
                .iter()
                .map(|c| BigRational::new(c.clone(), d.clone()))
                .collect(),
        ))
    }

    pub fn from_beta(b: &BetaPoly) -> Self {
        b.to_alpha()
    }

    pub fn report(&self) -> PolyReport {
        let beta = self.to_beta().ok();
        PolyReport {
            is_polynomial: self.is_polynomial(),
            degree: if self.is_polynomial() { self.num.degree() } else { None },
            integer_coeffs: self.is_integer_polynomial(),
            beta_nonnegative: beta.as_ref().is_some_and(BetaPoly::is_nonnegative),
            beta_integer: beta.as_ref().is_some_and(BetaPoly::is_integral),
        }
    }
}

/// Polynomiality summary consumed by the conjecture checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyReport {
    pub is_polynomial: bool,
    /// `None` for non-polynomials and for 0.
    pub degree: Option<usize>,
    pub integer_coeffs: bool,
    pub beta_nonnegative: bool,
    pub beta_integer: bool,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.format_in('a'))
        } else {
            write!(f, "({})/({})", self.num.format_in('a'), self.den.format_in('a'))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_ratfunc(s).ok_or_else(|| ParseError::RatFunc(String::from(s)))
    }
}

/// Total order on canonical forms, used only to sort deterministically.
impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        format!("{self}").cmp(&format!("{other}"))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::from_parts(self.num.add(&rhs.num), self.den.clone());
        }
        RatFunc::from_parts(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: self.num.mul(&rhs.num), den: IntPoly::one() };
        }
        RatFunc::from_parts(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("RatFunc division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for RatFunc {
    fn from(c: BigInt) -> Self {
        Self::from_bigint(c)
    }
}

impl From<BigUint> for RatFunc {
    fn from(c: BigUint) -> Self {
        Self::from_biguint(c)
    }
}

impl core::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}
