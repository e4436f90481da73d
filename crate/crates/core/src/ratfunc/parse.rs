use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use super::RatFunc;

/// `P` or `(P)/(Q)` with `P`, `Q` sums of `c*a^k` terms.
pub(super) fn parse_ratfunc(s: &str) -> Option<RatFunc> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('(') {
        let (num, tail) = rest.split_once(")/(")?;
        let den = tail.strip_suffix(')')?;
        let den = parse_poly(den, 'a')?;
        if den.is_zero() {
            return None;
        }
        return Some(RatFunc::from_parts(parse_poly(num, 'a')?, den));
    }
    Some(RatFunc::from_poly(parse_poly(s, 'a')?))
}

pub(super) fn parse_poly(s: &str, var: char) -> Option<IntPoly> {
    let s: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        rest = tail;
        let (c, k) = parse_term(term, var)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += if neg { -c } else { c };
    }
    Some(IntPoly::new(coeffs))
}

fn parse_term(t: &str, var: char) -> Option<(BigInt, usize)> {
    if t.is_empty() {
        return None;
    }
    let (coef, power) = match t.find(var) {
        None => return Some((t.parse().ok()?, 0)),
        Some(pos) => (&t[..pos], &t[pos + var.len_utf8()..]),
    };
    let c = match coef {
        "" => BigInt::one(),
        _ => coef.strip_suffix('*')?.parse().ok()?,
    };
    let k = match power {
        "" => 1,
        _ => power.strip_prefix('^')?.parse().ok()?,
    };
    Some((c, k))
}
