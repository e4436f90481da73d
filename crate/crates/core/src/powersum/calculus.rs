//! Named operators: Stanley's `D_α`, `E₂`, `E₂^⊥`, `p₁/α`, `p₁^⊥`, the
//! commutator tower `Δ, Ω_k, Π_k`, and the closed forms of `Ω_1..Ω_3`.

use alloc::vec;
use alloc::vec::Vec;

use super::operator::{one, Family, GradedOperator};
use super::PSFun;
use crate::error::OperatorError;
use crate::partition::{factorial, Partition};
use crate::ratfunc::RatFunc;

fn a() -> RatFunc {
    RatFunc::alpha()
}

fn int(c: usize) -> RatFunc {
    RatFunc::from_int(c as i64)
}

fn half(x: RatFunc) -> RatFunc {
    &x / &RatFunc::from_int(2)
}

fn max_input(bound: usize, shift: isize) -> usize {
    (bound as isize - shift.max(0)).max(0) as usize
}

/// Stanley's form of the Laplace–Beltrami operator on degrees `≤ bound`.
pub fn d_alpha(bound: usize) -> GradedOperator {
    let beta_half = half(RatFunc::beta());
    let alpha_half = half(a());
    let unit_half = half(RatFunc::one());
    let op = GradedOperator::from_families(
        0,
        bound,
        &[
            Family::new(1, |v| one(beta_half.clone() * int(v[0] * (v[0] - 1)), &[v[0]])),
            Family::new(2, |v| one(alpha_half.clone() * int(v[0] * v[1]), &[v[0] + v[1]])),
            Family::new(1, |v| (1..v[0]).map(|i| (unit_half.clone() * int(v[0]), vec![i, v[0] - i])).collect()),
        ],
    );
    op
}

/// `E₂ = Σ i p_{i+1} ∂_i`.
pub fn e2(bound: usize) -> GradedOperator {
    GradedOperator::from_families(1, max_input(bound, 1), &[Family::new(1, |v| one(int(v[0]), &[v[0] + 1]))])
}

/// `E₂^⊥ = Σ (i+1) p_i ∂_{i+1}`.
pub fn e2_perp(bound: usize) -> GradedOperator {
    GradedOperator::from_families(
        -1,
        bound,
        &[Family::new(1, |v| if v[0] >= 2 { one(int(v[0]), &[v[0] - 1]) } else { Vec::new() })],
    )
}

/// Multiplication by `p₁/α`.
pub fn p1_over_alpha(bound: usize) -> GradedOperator {
    let c = a().inv().expect("alpha is nonzero");
    GradedOperator::from_families(1, max_input(bound, 1), &[Family::new(0, move |_| one(c.clone(), &[1]))])
}

/// `p₁^⊥ = α ∂/∂p₁`.
pub fn p1_perp(bound: usize) -> GradedOperator {
    partial(1, bound).scale(&a())
}

/// `∂/∂p_k`.
pub fn partial(k: usize, bound: usize) -> GradedOperator {
    GradedOperator::from_families(
        -(k as isize),
        bound,
        &[Family::new(1, move |v| if v[0] == k { one(RatFunc::one(), &[]) } else { Vec::new() })],
    )
}

/// `Ω_k` built term by term from its explicit formula, `k ∈ {1, 2, 3}`.
pub fn omega_closed(k: usize, bound: usize) -> Result<GradedOperator, OperatorError> {
    let b = RatFunc::beta();
    let sh = k as isize;
    let m = max_input(bound, sh);
    let op = match k {
        1 => GradedOperator::from_families(sh, m, &[Family::new(1, |v| one(int(v[0]), &[v[0] + 1]))]),
        2 => GradedOperator::from_families(
            sh,
            m,
            &[
                // (α−1) Σ (i−1)(i−2) p_i ∂_{i−2}, with v = i−2
                Family::new(1, |v| one(b.clone() * int((v[0] + 1) * v[0]), &[v[0] + 2])),
                // Σ (i+j−2) p_i p_j ∂_{i+j−2}
                Family::new(1, |v| ordered_splits(v[0] + 2, 2).map(|s| (int(v[0]), s)).collect()),
                // α Σ ij p_{i+j+2} ∂_i ∂_j
                Family::new(2, |v| one(a() * int(v[0] * v[1]), &[v[0] + v[1] + 2])),
            ],
        ),
        3 => {
            let c1 = RatFunc::from_int(2) * b.clone() * b.clone() + a();
            let c2 = RatFunc::from_int(3) * b.clone();
            let c3 = RatFunc::from_int(3) * a() * b.clone();
            let c4 = RatFunc::from_int(3) * a();
            let c5 = RatFunc::from_int(2) * a() * a();
            let op3 = GradedOperator::from_families(
                sh,
                m,
                &[
                    // (2(α−1)²+α) Σ (i−1)(i−2)(i−3) p_i ∂_{i−3}
                    Family::new(1, |v| one(c1.clone() * int((v[0] + 2) * (v[0] + 1) * v[0]), &[v[0] + 3])),
                    // 3(α−1) Σ (i+j−2)(i+j−3) p_i p_j ∂_{i+j−3}
                    Family::new(1, |v| {
                        ordered_splits(v[0] + 3, 2).map(|s| (c2.clone() * int((v[0] + 1) * v[0]), s)).collect()
                    }),
                    // 3α(α−1) Σ ij(i+j+2) p_{i+j+3} ∂_i ∂_j
                    Family::new(2, |v| {
                        one(c3.clone() * int(v[0] * v[1] * (v[0] + v[1] + 2)), &[v[0] + v[1] + 3])
                    }),
                    // 3α Σ ij p_{i+j−k+3} p_k ∂_i ∂_j
                    Family::new(2, |v| {
                        let s = v[0] + v[1];
                        (1..=s + 2).map(|k| (c4.clone() * int(v[0] * v[1]), vec![s + 3 - k, k])).collect()
                    }),
                    // 2α² Σ ijk p_{i+j+k+3} ∂_i ∂_j ∂_k
                    Family::new(3, |v| {
                        one(c5.clone() * int(v[0] * v[1] * v[2]), &[v[0] + v[1] + v[2] + 3])
                    }),
                    // 2 Σ (i+j+k−3) p_i p_j p_k ∂_{i+j+k−3}
                    Family::new(1, |v| ordered_splits(v[0] + 3, 3).map(|s| (int(2 * v[0]), s)).collect()),
                ],
            );
            op3
        }
        _ => return Err(OperatorError::NoClosedForm(k)),
    };
    Ok(op)
}

/// Ordered compositions of `total` into `parts` positive pieces.
fn ordered_splits(total: usize, parts: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if rest >= 1 {
                cur.push(rest);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..rest {
            cur.push(first);
            rec(rest - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, &mut cur, &mut out);
    out.into_iter()
}

/// `k! ∂/∂p_k`.
pub fn pi_closed(k: usize, bound: usize) -> GradedOperator {
    partial(k, bound).scale(&RatFunc::from_biguint(factorial(k)))
}

/// `Δ`, `Ω_k` and `Π_k` materialized on degrees `≤ bound`.
///
/// `Ω_k` lives on inputs of degree `≤ bound − k`; `Π_k` on all of them.
#[derive(Clone, Debug)]
pub struct OperatorTower {
    bound: usize,
    d_alpha: GradedOperator,
    delta: GradedOperator,
    omegas: Vec<GradedOperator>,
    pis: Vec<GradedOperator>,
}

impl OperatorTower {
    /// Every `Ω_k`, `Π_k` with `k ≤ bound`.
    pub fn build(bound: usize) -> Self {
        Self::build_partial(bound, bound)
    }

    /// Only `k ≤ k_max`; Theorem 1 at weight `n` needs `k ≤ n/2`.
    pub fn build_partial(bound: usize, k_max: usize) -> Self {
        let d = d_alpha(bound);
        let omega1 = GradedOperator::commutator(&d, &p1_over_alpha(bound));
        let delta = GradedOperator::commutator(&d, &omega1);
        let mut omegas = vec![omega1];
        while omegas.len() < k_max.min(bound) {
            let next = GradedOperator::commutator(&delta, omegas.last().expect("nonempty"));
            omegas.push(next);
        }
        omegas.truncate(k_max.min(bound).max(1));
        let ep = e2_perp(bound);
        let mut pis = vec![partial(1, bound)];
        while pis.len() < k_max.min(bound) {
            let next = GradedOperator::commutator(pis.last().expect("nonempty"), &ep);
            pis.push(next);
        }
        OperatorTower { bound, d_alpha: d, delta, omegas, pis }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn d_alpha(&self) -> &GradedOperator {
        &self.d_alpha
    }

    pub fn delta(&self) -> &GradedOperator {
        &self.delta
    }

    /// `Ω_k`, `k ≥ 1`.
    pub fn omega(&self, k: usize) -> Option<&GradedOperator> {
        self.omegas.get(k.checked_sub(1)?)
    }

    /// `Π_k`, `k ≥ 1`.
    pub fn pi(&self, k: usize) -> Option<&GradedOperator> {
        self.pis.get(k.checked_sub(1)?)
    }

    pub fn omega_count(&self) -> usize {
        self.omegas.len()
    }
}

/// `p₁/α` as a power-sum function.
pub fn p1_over_alpha_fn() -> PSFun {
    PSFun::term(Partition::row(1), RatFunc::alpha().inv().expect("alpha is nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> PSFun {
        PSFun::p(s.parse().unwrap())
    }
    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }
    fn t(c: &str, l: &str) -> PSFun {
        PSFun::term(l.parse().unwrap(), rf(c))
    }

    #[test]
    fn stanley_d_alpha() {
        let d = d_alpha(6);
        assert!(d.apply(&p("1")).unwrap().is_zero());
        assert_eq!(d.apply(&p("2")).unwrap(), t("a-1", "2").add(&p("1,1")));
        assert_eq!(d.apply(&p("1,1")).unwrap(), t("a", "2"));
    }

    #[test]
    fn e2_pair() {
        assert_eq!(e2(4).apply(&p("1")).unwrap(), p("2"));
        assert_eq!(e2(4).apply(&p("2,1")).unwrap(), t("2", "3,1").add(&p("2,2")));
        assert_eq!(e2_perp(4).apply(&p("2")).unwrap(), t("2", "1"));
    }

    #[test]
    fn tower_small_values() {
        let tw = OperatorTower::build(6);
        assert_eq!(tw.omega(1).unwrap().apply(&p("1")).unwrap(), p("2"));
        let d1 = tw.delta().apply(&p("1")).unwrap();
        assert_eq!(d1, t("a-1", "2").add(&p("1,1")));
        let d2 = tw.delta().apply(&d1).unwrap();
        let want = t("4*a^2-6*a+4", "3").add(&t("6*a-6", "2,1")).add(&t("2", "1,1,1"));
        assert_eq!(d2, want);
        assert_eq!(tw.pi(3).unwrap().apply(&p("3")).unwrap(), t("6", ""));
    }

    #[test]
    fn overflow_is_signalled() {
        let err = e2(4).apply(&p("4")).unwrap_err();
        assert_eq!(err, OperatorError::DegreeOverflow { requested: 4, bound: 3 });
        assert!(omega_closed(4, 6).is_err());
    }

    #[test]
    fn omega2_coefficient() {
        // (α−1)(i−1)(i−2) on p_{i−2} → p_i, i = 5
        let o = omega_closed(2, 7).unwrap();
        assert_eq!(o.apply(&p("3")).unwrap().coeff(&"5".parse().unwrap()).to_string(), "12*a-12");
    }
}
