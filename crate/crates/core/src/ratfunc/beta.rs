use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{format_terms, IntPoly};
use super::RatFunc;
use crate::error::ParseError;

/// Polynomial in `β = α − 1` with rational coefficients, constant first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BetaPoly {
    coeffs: Vec<BigRational>,
}

impl BetaPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    /// From nonnegative integer counts, e.g. a weight histogram.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, b: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * b + c)
    }

    /// Same polynomial as an element of `ℚ(α)`.
    pub fn to_alpha(&self) -> RatFunc {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let num = IntPoly::new(scaled).shift(&-BigInt::one());
        RatFunc::from_parts(num, IntPoly::constant(lcm))
    }

    /// Symbolic form in `b`, e.g. `2*b^2+b+1`.
    pub fn symbolic(&self) -> String {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let den = if c.denom().is_one() { String::new() } else { alloc::format!("/{}", c.denom()) };
            (c.numer().clone(), den, k)
        });
        format_terms(terms, 'b')
    }
}

/// List form, constant first: `[1,1,2]`; rationals as `p/q`.
impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for BetaPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::BetaPoly(String::from(s));
        let inner = s.trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(BetaPoly::default());
        }
        let coeffs = inner
            .split(',')
            .map(|t| t.trim().parse::<BigRational>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BetaPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn list_and_symbolic_forms() {
        let b: BetaPoly = "[1,1,2]".parse().unwrap();
        assert_eq!(b.symbolic(), "2*b^2+b+1");
        assert_eq!(b.to_string(), "[1,1,2]");
        let h: BetaPoly = "[0,1/2]".parse().unwrap();
        assert_eq!(h.symbolic(), "1/2*b");
        assert!(!h.is_integral());
        assert_eq!("[]".parse::<BetaPoly>().unwrap().symbolic(), "0");
        assert!("1,2".parse::<BetaPoly>().is_err());
    }

    #[test]
    fn to_alpha() {
        let b: BetaPoly = "[1,1,2]".parse().unwrap();
        assert_eq!(b.to_alpha().to_string(), "2*a^2-3*a+2");
        let h: BetaPoly = "[0,1/2]".parse().unwrap();
        assert_eq!(h.to_alpha().to_string(), "(a-1)/(2)");
    }
}
