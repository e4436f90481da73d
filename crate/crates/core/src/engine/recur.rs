//! The recurrence route, kept independent of the operator tower so the two
//! can check each other.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::EngineError;
use crate::partition::{binomial, factorial, Partition, Surgery};
use crate::ratfunc::RatFunc;

fn int(c: i64) -> RatFunc {
    RatFunc::from_int(c)
}

fn a() -> RatFunc {
    RatFunc::alpha()
}

fn b() -> RatFunc {
    RatFunc::beta()
}

/// Memoized recurrences. Not `Sync`; use one instance per worker.
#[derive(Default, Debug, Clone)]
pub struct Recurrences {
    ann: BTreeMap<Partition, RatFunc>,
    hnn: BTreeMap<Partition, RatFunc>,
    h2m: BTreeMap<Partition, RatFunc>,
    h3m: BTreeMap<Partition, RatFunc>,
    tilde: BTreeMap<(Partition, Partition), RatFunc>,
}

impl Recurrences {
    pub fn new() -> Self {
        Self::default()
    }

    /// `a^λ_{n,n}`.
    pub fn ann(&mut self, lambda: &Partition) -> RatFunc {
        let n = lambda.weight();
        if n <= 1 {
            return RatFunc::one();
        }
        if let Some(v) = self.ann.get(lambda) {
            return v.clone();
        }
        let parts = lambda.parts().to_vec();
        let mut acc = RatFunc::zero();
        for (i, &li) in parts.iter().enumerate() {
            let mut inner = RatFunc::zero();
            if li > 1 {
                let l = lambda.surgery(Surgery::Down(li)).expect("part exists");
                inner += &(b() * int(li as i64 - 1) * self.ann(&l));
            }
            for d in 1..li.saturating_sub(1) {
                if let Some(l) = lambda.surgery(Surgery::Up(li - 1 - d, d)) {
                    inner += &self.ann(&l);
                }
            }
            for (j, &lj) in parts.iter().enumerate() {
                if j != i {
                    let l = lambda.surgery(Surgery::DownMerge(li, lj)).expect("parts exist");
                    inner += &(a() * int(lj as i64) * self.ann(&l));
                }
            }
            acc += &(inner * int(li as i64));
        }
        let v = &acc / &int(n as i64);
        self.ann.insert(lambda.clone(), v.clone());
        v
    }

    /// `h̃^λ_{n,n}`.
    pub fn hnn(&mut self, lambda: &Partition) -> RatFunc {
        let n = lambda.weight();
        if n <= 1 {
            return RatFunc::one();
        }
        if let Some(v) = self.hnn.get(lambda) {
            return v.clone();
        }
        let mut acc = RatFunc::zero();
        for i in lambda.distinct_parts() {
            let l = lambda.surgery(Surgery::Down(i)).expect("part exists");
            let w = ((i - 1) * (i - 1)) as u64 * l.mult_count(&[i - 1]);
            if w > 0 {
                acc += &(b() * int(w as i64) * self.hnn(&l));
            }
            for d in 1..i.saturating_sub(1) {
                let e = i - 1 - d;
                if let Some(l) = lambda.surgery(Surgery::Up(e, d)) {
                    let w = (e * d) as u64 * l.mult_count(&[e, d]);
                    acc += &(a() * int(w as i64) * self.hnn(&l));
                }
            }
        }
        for i in lambda.distinct_parts() {
            for j in lambda.distinct_parts() {
                if let Some(l) = lambda.surgery(Surgery::DownMerge(i, j)) {
                    let w = (i + j - 1) as u64 * l.mult_count(&[i + j - 1]);
                    acc += &(int(w as i64) * self.hnn(&l));
                }
            }
        }
        self.hnn.insert(lambda.clone(), acc.clone());
        acc
    }

    /// `h̃^λ_{2m,[2^m]}`.
    pub fn h2m(&mut self, lambda: &Partition) -> Result<RatFunc, EngineError> {
        let n = lambda.weight();
        if n == 0 || n % 2 != 0 {
            return Err(EngineError::ShapeMismatch("h2m needs an even positive weight"));
        }
        if n == 2 {
            return Ok(self.hnn(lambda));
        }
        if let Some(v) = self.h2m.get(lambda) {
            return Ok(v.clone());
        }
        let mut acc = RatFunc::zero();
        let vals = lambda.distinct_parts();
        for &i in &vals {
            if let Some(l) = lambda.surgery(Surgery::DoubleDown(i)) {
                let w = i.saturating_sub(1) * i.saturating_sub(2);
                let w = w as u64 * if i >= 2 { l.mult_count(&[i - 2]) } else { 0 };
                if w > 0 {
                    acc += &(b() * int(w as i64) * self.h2m(&l)?);
                }
            }
            for d in 1..i.saturating_sub(2) {
                let e = i - 2 - d;
                if let Some(l) = lambda.surgery(Surgery::DoubleUp(e, d)) {
                    let w = (e * d) as u64 * l.mult_count(&[e, d]);
                    acc += &(a() * int(w as i64) * self.h2m(&l)?);
                }
            }
        }
        for &i in &vals {
            for &j in &vals {
                if let Some(l) = lambda.surgery(Surgery::DoubleDownMerge(i, j)) {
                    let s = i + j - 2;
                    let w = s as u64 * l.mult_count(&[s]);
                    if w > 0 {
                        acc += &(int(w as i64) * self.h2m(&l)?);
                    }
                }
            }
        }
        self.h2m.insert(lambda.clone(), acc.clone());
        Ok(acc)
    }

    /// `h̃^λ_{3m,[3^m]}`.
    pub fn h3m(&mut self, lambda: &Partition) -> Result<RatFunc, EngineError> {
        let n = lambda.weight();
        if n == 0 || n % 3 != 0 {
            return Err(EngineError::ShapeMismatch("h3m needs a positive weight divisible by 3"));
        }
        if n == 3 {
            return Ok(self.hnn(lambda));
        }
        if let Some(v) = self.h3m.get(lambda) {
            return Ok(v.clone());
        }
        let h3 = self.hnn(&Partition::row(3));
        let h21 = self.hnn(&Partition::from_parts([2, 1]));
        let h2 = self.hnn(&Partition::row(2));
        let h11 = self.hnn(&Partition::column(2));
        let h1 = self.hnn(&Partition::row(1));
        let h111 = self.hnn(&Partition::column(3));
        let half = &RatFunc::one() / &int(2);
        let vals = lambda.distinct_parts();
        let mut acc = RatFunc::zero();

        let mut s1 = RatFunc::zero();
        for &i in &vals {
            if let Some(l) = lambda.surgery(Surgery::TripleDown(i)) {
                if i > 3 {
                    let w = binomial(i - 1, 3) * num_bigint::BigUint::from(l.mult_count(&[i - 3]));
                    s1 += &(RatFunc::from_biguint(w) * self.h3m(&l)?);
                }
            }
        }
        acc += &(int(3) * h3 * s1);

        let mut s2 = RatFunc::zero();
        for &i in &vals {
            for &j in &vals {
                if let Some(l) = lambda.surgery(Surgery::TripleDownMerge(i, j)) {
                    if i + j > 3 {
                        let s = i + j - 3;
                        let w = ((s + 1) * s) as u64 * l.mult_count(&[s]);
                        s2 += &(int(w as i64) * self.h3m(&l)?);
                    }
                }
            }
        }
        acc += &(h21 * half.clone() * s2);

        let mut s3 = RatFunc::zero();
        for &i in &vals {
            for d in 1..i.saturating_sub(3) {
                let e = i - 3 - d;
                if let Some(l) = lambda.surgery(Surgery::TripleUp(e, d)) {
                    let w = ((i - 1) * e * d) as u64 * l.mult_count(&[e, d]);
                    s3 += &(int(w as i64) * self.h3m(&l)?);
                }
            }
        }
        acc += &(int(6) * a() * h2 * half.clone() * s3);

        let mut s4 = RatFunc::zero();
        for &i in &vals {
            for &j in &vals {
                if lambda.mult_count(&[i, j]) == 0 {
                    continue;
                }
                for d in 1..(i + j).saturating_sub(3) {
                    let e = i + j - 3 - d;
                    let l = lambda.replace(&[i, j], &[e, d]).expect("parts exist");
                    let w = (e * d) as u64 * l.mult_count(&[e, d]);
                    s4 += &(int(w as i64) * self.h3m(&l)?);
                }
            }
        }
        acc += &(int(6) * a() * h11 * half * s4);

        let mut s5 = RatFunc::zero();
        for &i in &vals {
            for d in 1..i {
                for f in 1..i {
                    if d + f + 3 >= i {
                        continue;
                    }
                    let e = i - 3 - d - f;
                    if let Some(l) = lambda.surgery(Surgery::TripleUp3(e, d, f)) {
                        let w = (e * d * f) as u64 * l.mult_count(&[e, d, f]);
                        s5 += &(int(w as i64) * self.h3m(&l)?);
                    }
                }
            }
        }
        acc += &(int(2) * a() * a() * h1 * s5);

        let mut s6 = RatFunc::zero();
        for &i in &vals {
            for &j in &vals {
                for &k in &vals {
                    if let Some(l) = lambda.surgery(Surgery::TripleDownMerge3(i, j, k)) {
                        let s = i + j + k - 3;
                        let w = s as u64 * l.mult_count(&[s]);
                        if w > 0 {
                            s6 += &(int(w as i64) * self.h3m(&l)?);
                        }
                    }
                }
            }
        }
        acc += &(h111 * s6);

        self.h3m.insert(lambda.clone(), acc.clone());
        Ok(acc)
    }

    /// `a^λ_{n+k, ρ∪[1^k]}` by removing the 1-parts of the subscript.
    pub fn ones(&mut self, lambda: &Partition, rho: &Partition, k: usize) -> Result<RatFunc, EngineError> {
        if rho.multiplicity(1) > 0 {
            return Err(EngineError::ShapeMismatch("rho must have no part equal to 1"));
        }
        if lambda.weight() != rho.weight() + k {
            return Err(EngineError::ShapeMismatch("weights of lambda and rho do not add up"));
        }
        if rho.is_empty() {
            return Ok(self.column_chain(lambda));
        }
        if lambda.len() > rho.weight() {
            return Ok(RatFunc::zero());
        }
        let parts = lambda.parts().to_vec();
        let mut kappa = Vec::with_capacity(parts.len());
        let mut acc = RatFunc::zero();
        self.kappa_sum(&parts, k, &mut kappa, rho, &mut acc)?;
        Ok(acc)
    }

    fn kappa_sum(
        &mut self,
        parts: &[usize],
        left: usize,
        kappa: &mut Vec<usize>,
        rho: &Partition,
        acc: &mut RatFunc,
    ) -> Result<(), EngineError> {
        let pos = kappa.len();
        if pos == parts.len() {
            if left == 0 {
                let lam = Partition::from_parts(parts.iter().zip(kappa.iter()).map(|(l, k)| l - k));
                let w = parts.iter().zip(kappa.iter()).fold(num_bigint::BigUint::from(1u32), |w, (&l, &k)| w * binomial(l, k));
                let val = self.a(&lam, rho)?;
                *acc += &(RatFunc::from_biguint(w) * val);
            }
            return Ok(());
        }
        for k in 0..parts[pos].min(left + 1) {
            kappa.push(k);
            self.kappa_sum(parts, left - k, kappa, rho, acc)?;
            kappa.pop();
        }
        Ok(())
    }

    /// `a^λ_{k,[1^k]}` by the single-step reduction with `ρ = ∅`.
    fn column_chain(&mut self, lambda: &Partition) -> RatFunc {
        let k = lambda.weight();
        if k <= 1 {
            return RatFunc::one();
        }
        let key = (lambda.clone(), Partition::column(k));
        if let Some(v) = self.tilde.get(&key) {
            return v.clone();
        }
        let mut acc = RatFunc::zero();
        for &li in lambda.parts() {
            if li > 1 {
                let l = lambda.surgery(Surgery::Down(li)).expect("part exists");
                acc += &(int(li as i64) * self.column_chain(&l));
            }
        }
        let v = &acc / &int(k as i64);
        self.tilde.insert(key, v.clone());
        v
    }

    /// `ã^λ_{n+2l, ρ∪[2^l]}` with `1, 2 ∉ ρ` and `n + 2l > 2`.
    pub fn twos(&mut self, lambda: &Partition, rho: &Partition, l: usize) -> Result<RatFunc, EngineError> {
        // At weight 2 the first sum skips λ = (2); that case belongs to `ann`.
        if rho.parts().iter().any(|&p| p <= 2) || l == 0 || rho.weight() + 2 * l <= 2 {
            return Err(EngineError::ShapeMismatch("twos needs l >= 1, rho without parts 1, 2, weight > 2"));
        }
        if lambda.weight() != rho.weight() + 2 * l {
            return Err(EngineError::ShapeMismatch("weights of lambda and rho do not add up"));
        }
        let mu = rho.union(&Partition::rectangle(2, l - 1));
        let parts = lambda.parts().to_vec();
        let mut acc = RatFunc::zero();
        for &li in &parts {
            if li > 2 {
                let lp = lambda.surgery(Surgery::DoubleDown(li)).expect("part exists");
                acc += &(b() * int((li * (li - 1) / 2) as i64) * self.a_tilde(&lp, &mu)?);
            }
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i] + parts[j] > 2 {
                    let lp = lambda.surgery(Surgery::DoubleDownMerge(parts[i], parts[j])).expect("parts exist");
                    acc += &(a() * int((parts[i] * parts[j]) as i64) * self.a_tilde(&lp, &mu)?);
                }
            }
        }
        let mut third = RatFunc::zero();
        for &li in &parts {
            for d in 1..li.saturating_sub(2) {
                let lp = lambda.surgery(Surgery::DoubleUp(li - 2 - d, d)).expect("split is valid");
                third += &(int(li as i64) * self.a_tilde(&lp, &mu)?);
            }
        }
        acc += &(&third / &int(2));
        Ok(acc)
    }

    /// `ã^λ_{n+3m, ρ∪[3^m]}` with `1, 2, 3 ∉ ρ` and `n + 3m > 3`.
    pub fn threes(&mut self, lambda: &Partition, rho: &Partition, m: usize) -> Result<RatFunc, EngineError> {
        if rho.parts().iter().any(|&p| p <= 3) || m == 0 || rho.weight() + 3 * m <= 3 {
            return Err(EngineError::ShapeMismatch("threes needs m >= 1, rho without parts <= 3, weight > 3"));
        }
        if lambda.weight() != rho.weight() + 3 * m {
            return Err(EngineError::ShapeMismatch("weights of lambda and rho do not add up"));
        }
        let mu = rho.union(&Partition::rectangle(3, m - 1));
        let p = lambda.parts().to_vec();
        let len = p.len();
        let two = int(2);
        let c_s1 = two.clone() * b() * b() + b() + int(1);
        let c_s2 = two.clone() * b() * b() + int(4) * b() + two.clone();
        let c_s4 = b() * b() + b();
        let c_s5 = b() + int(1);

        let mut s1 = RatFunc::zero();
        for &li in &p {
            if li > 3 {
                let lp = lambda.surgery(Surgery::TripleDown(li)).expect("part exists");
                s1 += &(RatFunc::from_biguint(binomial(li, 3)) * self.a_tilde(&lp, &mu)?);
            }
        }
        let mut s2 = RatFunc::zero();
        for i in 0..len {
            for j in i + 1..len {
                for k in j + 1..len {
                    if p[i] + p[j] + p[k] > 3 {
                        let lp = lambda.surgery(Surgery::TripleDownMerge3(p[i], p[j], p[k])).expect("parts exist");
                        s2 += &(int((p[i] * p[j] * p[k]) as i64) * self.a_tilde(&lp, &mu)?);
                    }
                }
            }
        }
        let mut s3 = RatFunc::zero();
        for &li in &p {
            for d in 1..li {
                for f in 1..li {
                    if d + f + 3 < li {
                        let lp = lambda.surgery(Surgery::TripleUp3(f, d, li - 3 - d - f)).expect("split is valid");
                        s3 += &(int(li as i64) * self.a_tilde(&lp, &mu)?);
                    }
                }
            }
        }
        let mut s4 = RatFunc::zero();
        let mut s5 = RatFunc::zero();
        for i in 0..len {
            for j in i + 1..len {
                let (x, y) = (p[i], p[j]);
                if x + y > 3 {
                    let lp = lambda.surgery(Surgery::TripleDownMerge(x, y)).expect("parts exist");
                    s4 += &(int((x * y * (x + y - 2)) as i64) * self.a_tilde(&lp, &mu)?);
                }
                for d in 1..(x + y).saturating_sub(3) {
                    let lp = lambda.replace(&[x, y], &[d, x + y - 3 - d]).expect("parts exist");
                    s5 += &(int((x * y) as i64) * self.a_tilde(&lp, &mu)?);
                }
            }
        }
        let mut s6 = RatFunc::zero();
        for &li in &p {
            for d in 1..li.saturating_sub(3) {
                let lp = lambda.surgery(Surgery::TripleUp(d, li - 3 - d)).expect("split is valid");
                s6 += &(RatFunc::from_biguint(binomial(li, 2)) * self.a_tilde(&lp, &mu)?);
            }
        }
        Ok(c_s1 * s1 + c_s2 * s2 + &s3 / &int(3) + c_s4 * s4 + c_s5 * s5 + b() * s6)
    }

    /// `ã^λ_{n,ν}` for `ν` with at most one part above 3: strip 1-parts, then
    /// 2-parts, then 3-parts, down to `ν = (n)`.
    pub fn a_tilde(&mut self, lambda: &Partition, nu: &Partition) -> Result<RatFunc, EngineError> {
        let n = nu.weight();
        if lambda.weight() != n {
            return Err(EngineError::NotAPartitionOf { nu: lambda.clone(), n });
        }
        if n == 0 {
            return Ok(RatFunc::one());
        }
        if nu.len() == 1 {
            return Ok(self.ann(lambda));
        }
        let key = (lambda.clone(), nu.clone());
        if let Some(v) = self.tilde.get(&key) {
            return Ok(v.clone());
        }
        let v = if nu.multiplicity(1) > 0 {
            let (rho, k) = nu.strip(1);
            RatFunc::from_biguint(rho.aut()) * self.ones(lambda, &rho, k)?
        } else if nu.multiplicity(2) > 0 {
            let (rho, l) = nu.strip(2);
            self.twos(lambda, &rho, l)?
        } else if nu.multiplicity(3) > 0 {
            let (rho, m) = nu.strip(3);
            self.threes(lambda, &rho, m)?
        } else {
            return Err(EngineError::OutOfScope(nu.clone()));
        };
        self.tilde.insert(key, v.clone());
        Ok(v)
    }

    /// `a^λ_{n,ν} = (m₁(ν)!/Aut_ν) ã^λ_{n,ν}`.
    pub fn a(&mut self, lambda: &Partition, nu: &Partition) -> Result<RatFunc, EngineError> {
        let t = self.a_tilde(lambda, nu)?;
        let c = &RatFunc::from_biguint(factorial(nu.multiplicity(1))) / &RatFunc::from_biguint(nu.aut());
        Ok(c * t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ann_values() {
        let mut r = Recurrences::new();
        assert_eq!(r.ann(&p("2")).to_string(), "a-1");
        assert_eq!(r.ann(&p("1,1")).to_string(), "a");
        assert_eq!(r.ann(&p("3")).to_beta().unwrap().symbolic(), "2*b^2+b+1");
    }

    #[test]
    fn hnn_values() {
        let mut r = Recurrences::new();
        assert_eq!(r.hnn(&p("2")).to_beta().unwrap().symbolic(), "b");
        assert_eq!(r.hnn(&p("1,1")).to_string(), "1");
        assert_eq!(r.hnn(&p("3")).to_beta().unwrap().symbolic(), "4*b^2+2*b+2");
    }

    #[test]
    fn ones_values() {
        let mut r = Recurrences::new();
        for n in 1..6 {
            assert!(r.ones(&Partition::row(n), &Partition::empty(), n).unwrap().is_one());
        }
        assert!(r.ones(&p("1,1,1"), &p("2"), 1).unwrap().is_zero());
        assert_eq!(r.ones(&p("2,1"), &p("2"), 1).unwrap().to_string(), "2*a");
    }

    #[test]
    fn twos_base() {
        let mut r = Recurrences::new();
        assert!(r.twos(&p("2"), &Partition::empty(), 1).is_err());
        assert_eq!(r.twos(&p("4"), &Partition::empty(), 2).unwrap(), r.a_tilde(&p("4"), &p("2,2")).unwrap());
        assert!(r.a_tilde(&p("4,4"), &p("4,4")).is_err());
    }
}
