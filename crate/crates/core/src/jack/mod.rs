//! Jack symmetric functions `J_λ` in the power-sum basis, built by
//! orthogonalizing the monomial basis, and the Cauchy-type series `Φ`, `Ψ`
//! they generate.

mod identities;
mod series;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::powersum::PSFun;
use crate::ratfunc::RatFunc;

pub use identities::{identity_suite, Bilinear, Identity, IdentityCheck, IdentityReport};
pub use series::{JackOracle, TripleSeries};

/// `J_λ = Σ_μ θ^λ_μ p_μ` together with `j_λ = ⟨J_λ, J_λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackExpansion {
    pub lambda: Partition,
    pub theta: BTreeMap<Partition, RatFunc>,
    pub norm: RatFunc,
}

impl JackExpansion {
    pub fn theta(&self, mu: &Partition) -> RatFunc {
        self.theta.get(mu).cloned().unwrap_or_default()
    }

    pub fn to_psfun(&self) -> PSFun {
        PSFun::from_terms(self.theta.iter().map(|(l, c)| (l.clone(), c.clone())))
    }

    /// Rescales `J_λ` by `c`; the norm picks up `c²`.
    pub fn rescaled(&self, c: &RatFunc) -> JackExpansion {
        JackExpansion {
            lambda: self.lambda.clone(),
            theta: self.theta.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
            norm: &self.norm * &(c * c),
        }
    }
}

/// Every `J_λ` with `λ ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackTable {
    pub n: usize,
    jacks: BTreeMap<Partition, JackExpansion>,
}

impl JackTable {
    pub fn from_expansions<I: IntoIterator<Item = JackExpansion>>(n: usize, it: I) -> Self {
        JackTable { n, jacks: it.into_iter().map(|j| (j.lambda.clone(), j)).collect() }
    }

    pub fn get(&self, lambda: &Partition) -> &JackExpansion {
        &self.jacks[lambda]
    }

    /// In reverse-lexicographic order of `λ`.
    pub fn expansions(&self) -> impl Iterator<Item = &JackExpansion> {
        self.jacks.values().rev()
    }

    pub fn map(&self, f: impl Fn(&JackExpansion) -> JackExpansion) -> JackTable {
        JackTable::from_expansions(self.n, self.jacks.values().map(f))
    }
}

/// Number of maps `f` from the parts of `μ` to the parts of `λ` with
/// `Σ_{f(i)=j} μ_i = λ_j`: the coefficient of `m_λ` in `p_μ`.
pub fn p_to_m(mu: &Partition, lambda: &Partition) -> u64 {
    fn rec(parts: &[usize], rem: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return rem.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for j in 0..rem.len() {
            if rem[j] >= first {
                rem[j] -= first;
                total += rec(rest, rem);
                rem[j] += first;
            }
        }
        total
    }
    if mu.weight() != lambda.weight() {
        return 0;
    }
    let mut rem = lambda.parts().to_vec();
    rec(mu.parts(), &mut rem)
}

/// `m_λ` in the power-sum basis for every `λ ⊢ n`, by back substitution in
/// the triangular `p → m` transition.
pub fn monomials_in_p(n: usize) -> BTreeMap<Partition, BTreeMap<Partition, BigRational>> {
    let parts = partitions_of(n);
    let mut m: BTreeMap<Partition, BTreeMap<Partition, BigRational>> = BTreeMap::new();
    // (n) first: every coarser partition is already expressed.
    for mu in &parts {
        let mut expr: BTreeMap<Partition, BigRational> = BTreeMap::new();
        expr.insert(mu.clone(), BigRational::one());
        let mut diag = BigRational::zero();
        for lambda in &parts {
            let r = p_to_m(mu, lambda);
            if r == 0 {
                continue;
            }
            let r = BigRational::from_integer(BigInt::from(r));
            if lambda == mu {
                diag = r;
            } else {
                for (k, c) in &m[lambda] {
                    let e = expr.entry(k.clone()).or_insert_with(BigRational::zero);
                    *e -= &r * c;
                }
            }
        }
        expr.retain(|_, c| !c.is_zero());
        for c in expr.values_mut() {
            *c /= &diag;
        }
        m.insert(mu.clone(), expr);
    }
    m
}

/// `J_λ` for every `λ ⊢ n`: Gram–Schmidt on `m_λ` in increasing
/// lexicographic order (a linear extension of dominance), normalized so the
/// coefficient of `m_{1^n}` is `n!`, i.e. the `p_{1^n}` coefficient is 1.
pub fn jack_gram_schmidt(n: usize) -> JackTable {
    if n == 0 {
        let e = JackExpansion {
            lambda: Partition::empty(),
            theta: [(Partition::empty(), RatFunc::one())].into_iter().collect(),
            norm: RatFunc::one(),
        };
        return JackTable::from_expansions(0, [e]);
    }
    let mono = monomials_in_p(n);
    let ones = Partition::column(n);
    let mut done: Vec<(PSFun, RatFunc)> = Vec::new();
    let mut out = Vec::new();
    for (lambda, expr) in &mono {
        let m = PSFun::from_terms(expr.iter().map(|(k, c)| (k.clone(), RatFunc::from_rational(c))));
        let mut f = m.clone();
        for (q, qq) in &done {
            let c = &m.inner(q) / qq;
            f.add_scaled(q, &-c);
        }
        let qq = f.inner(&f);
        let lead = f.coeff(&ones);
        let j = f.scale(&lead.inv().expect("p_{1^n} coefficient of a monic P_λ is nonzero"));
        let norm = j.inner(&j);
        out.push(JackExpansion { lambda: lambda.clone(), theta: j.clone().into_terms(), norm });
        done.push((f, qq));
    }
    JackTable::from_expansions(n, out)
}

fn cells(lambda: &Partition) -> impl Iterator<Item = (usize, usize)> + '_ {
    lambda.parts().iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
}

/// `j_λ = ∏_s (α a(s) + l(s) + 1)(α a(s) + l(s) + α)`.
pub fn jack_norm_closed(lambda: &Partition) -> RatFunc {
    let conj = lambda.conjugate();
    let mut acc = RatFunc::one();
    for (i, j) in cells(lambda) {
        let arm = lambda.parts()[i] - j - 1;
        let leg = conj.parts()[j] - i - 1;
        let aa = RatFunc::alpha().scale_int(&BigInt::from(arm));
        acc *= &(&aa + &RatFunc::from_int(leg as i64 + 1));
        acc *= &(&(&aa + &RatFunc::from_int(leg as i64)) + &RatFunc::alpha());
    }
    acc
}

/// `θ^λ_{(n)} = ∏_{s ≠ (1,1)} (α a'(s) − l'(s))`.
pub fn theta_row_closed(lambda: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in cells(lambda).skip(1) {
        acc *= &(&RatFunc::alpha().scale_int(&BigInt::from(j)) - &RatFunc::from_int(i as i64));
    }
    acc
}
