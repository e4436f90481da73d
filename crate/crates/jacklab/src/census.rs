//! Per-shape censuses and JSON witnesses for matchings and hypermaps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use jacklab_core::hypermap::{enumerate_labelled, StarHypermap};
use jacklab_core::matching::{is_hat, labelled_matchings, weight, LabelledMatching};
use jacklab_core::partition::partitions_of;
use jacklab_core::{BetaPoly, EnumerationError, Partition};

use crate::formats::{BetaForm, CensusRow};

/// `Σ β^ϑ`, orientable count and total for every face type of the labelled
/// star hypermaps with `m` black vertices of degree `k`.
pub fn hypermap_census(k: usize, m: usize, budget: usize) -> Result<Vec<CensusRow>, EnumerationError> {
    let mut acc: BTreeMap<Partition, (Vec<u64>, u64, u64)> = BTreeMap::new();
    enumerate_labelled(&vec![k; m], budget, |map| {
        let e = acc.entry(map.face_degrees()).or_default();
        let t = map.theta();
        if e.0.len() <= t {
            e.0.resize(t + 1, 0);
        }
        e.0[t] += 1;
        e.1 += map.is_orientable() as u64;
        e.2 += 1;
    })?;
    Ok(partitions_of(k * m)
        .into_iter()
        .filter_map(|l| {
            let (hist, orientable, total) = acc.remove(&l)?;
            Some(CensusRow {
                k,
                m,
                lambda: l.to_string(),
                beta_poly: BetaForm::from_poly(&BetaPoly::from_counts(&hist)),
                orientable,
                total,
            })
        })
        .collect())
}

/// `Σ β^{wt}` over the labelled matchings of each `λ ⊢ n`, for fixed `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCensusRow {
    pub nu: String,
    pub lambda: String,
    pub beta_poly: BetaForm,
    pub bipartite: u64,
    pub total: u64,
}

pub fn matching_census(nu: &Partition, budget: usize) -> Result<Vec<MatchingCensusRow>, EnumerationError> {
    let mut out = Vec::new();
    for l in partitions_of(nu.weight()) {
        let mut hist: Vec<u64> = Vec::new();
        let (mut bip, mut total) = (0, 0);
        for lm in labelled_matchings(&l, nu, budget)? {
            let w = weight(&lm)?;
            if hist.len() <= w {
                hist.resize(w + 1, 0);
            }
            hist[w] += 1;
            bip += lm.delta.is_bipartite() as u64;
            total += 1;
        }
        if total > 0 {
            out.push(MatchingCensusRow {
                nu: nu.to_string(),
                lambda: l.to_string(),
                beta_poly: BetaForm::from_poly(&BetaPoly::from_counts(&hist)),
                bipartite: bip,
                total,
            });
        }
    }
    Ok(out)
}

fn vertex_name(v: usize) -> String {
    format!("{}{}", v / 2 + 1, if is_hat(v) { "^" } else { "" })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingWitness {
    pub lambda: String,
    pub nu: String,
    /// Edges of δ, hats written `i^`.
    pub pairs: Vec<[String; 2]>,
    /// Cycle of `b_λ ∪ δ` (by its smallest vertex) and its label.
    pub labels: Vec<(String, usize)>,
    pub wt: usize,
    pub bipartite: bool,
}

impl MatchingWitness {
    pub fn of(lm: &LabelledMatching) -> Result<MatchingWitness, EnumerationError> {
        Ok(MatchingWitness {
            lambda: lm.lambda.to_string(),
            nu: lm.nu().to_string(),
            pairs: lm.delta.edges().into_iter().map(|(u, v)| [vertex_name(u), vertex_name(v)]).collect(),
            labels: lm.labels().iter().map(|(&v, &l)| (vertex_name(v), l)).collect(),
            wt: weight(lm)?,
            bipartite: lm.delta.is_bipartite(),
        })
    }
}

pub fn matching_witnesses(lambda: &Partition, nu: &Partition, budget: usize) -> Result<Vec<MatchingWitness>, EnumerationError> {
    labelled_matchings(lambda, nu, budget)?.iter().map(MatchingWitness::of).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypermapWitness {
    /// Black-vertex degrees in label order.
    pub blocks: Vec<usize>,
    /// Successor of each edge label around the white vertex.
    pub white: Vec<usize>,
    /// Successor of each edge label around its black vertex.
    pub black: Vec<usize>,
    /// Labels of the twisted edges.
    pub twisted: Vec<usize>,
    pub faces: String,
    pub orientable: bool,
    pub theta: usize,
    /// Root types met while deleting down to the empty map.
    pub trace: Vec<String>,
}

impl HypermapWitness {
    pub fn of(map: &StarHypermap) -> HypermapWitness {
        let (theta, trace) = map.theta_trace();
        HypermapWitness {
            blocks: map.blocks().to_vec(),
            white: map.white_rotation().iter().map(|e| e + 1).collect(),
            black: map.black_rotation().iter().map(|e| e + 1).collect(),
            twisted: map.twists().iter().enumerate().filter(|(_, &t)| t).map(|(e, _)| e + 1).collect(),
            faces: map.face_degrees().to_string(),
            orientable: map.is_orientable(),
            theta,
            trace: trace.iter().map(ToString::to_string).collect(),
        }
    }
}

pub fn hypermap_witnesses(k: usize, m: usize, budget: usize) -> Result<Vec<HypermapWitness>, EnumerationError> {
    let mut out = Vec::new();
    enumerate_labelled(&vec![k; m], budget, |map| out.push(HypermapWitness::of(map)))?;
    Ok(out)
}
