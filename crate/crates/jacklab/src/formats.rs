//! JSON and CSV forms of coefficient tables, Jack tables and censuses.
//! Every number is a decimal string so no consumer loses precision.

use std::collections::BTreeMap;

use jacklab_core::jack::{JackExpansion, JackTable};
use jacklab_core::{BetaPoly, CoeffKind, CoeffTable, Partition, RatFunc};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed record: {0}")]
    Malformed(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, FormatError> {
    s.parse().map_err(|_| FormatError::Malformed(s.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaForm {
    /// Coefficients of `β^0, β^1, …`.
    pub coeffs: Vec<String>,
    pub symbolic: String,
}

impl BetaForm {
    pub fn of(r: &RatFunc) -> Option<BetaForm> {
        let b = r.to_beta().ok()?;
        Some(BetaForm { coeffs: b.coeffs().iter().map(ToString::to_string).collect(), symbolic: b.symbolic() })
    }

    pub fn from_poly(b: &BetaPoly) -> BetaForm {
        BetaForm { coeffs: b.coeffs().iter().map(ToString::to_string).collect(), symbolic: b.symbolic() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub lambda: String,
    pub alpha: String,
    /// Absent when the entry is not a polynomial.
    pub beta: Option<BetaForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub kind: String,
    pub n: usize,
    pub nu: String,
    pub rows: Vec<TableRow>,
}

impl TableRecord {
    pub fn from_table(t: &CoeffTable) -> TableRecord {
        TableRecord {
            kind: t.kind.name().to_string(),
            n: t.n,
            nu: t.nu.to_string(),
            rows: t
                .rows()
                .into_iter()
                .map(|(l, v)| TableRow { lambda: l.to_string(), alpha: v.to_string(), beta: BetaForm::of(&v) })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<CoeffTable, FormatError> {
        let kind: CoeffKind = parse(&self.kind)?;
        let nu: Partition = parse(&self.nu)?;
        let mut vals = BTreeMap::new();
        for r in &self.rows {
            vals.insert(parse::<Partition>(&r.lambda)?, parse::<RatFunc>(&r.alpha)?);
        }
        if vals.len() != jacklab_core::partitions_of(self.n).len() {
            return Err(FormatError::Malformed(format!("expected one row per partition of {}", self.n)));
        }
        Ok(CoeffTable::from_fn(self.n, nu, kind, |l| vals.get(l).cloned().unwrap_or_default()))
    }
}

/// Columns `kind,n,nu,lambda,alpha,beta_poly`; `beta_poly` is symbolic in
/// `b` and empty for non-polynomial entries.
pub fn table_csv(t: &CoeffTable) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "n", "nu", "lambda", "alpha", "beta_poly"])?;
    let rec = TableRecord::from_table(t);
    for r in &rec.rows {
        let beta = r.beta.as_ref().map(|b| b.symbolic.as_str()).unwrap_or("");
        w.write_record([rec.kind.as_str(), &rec.n.to_string(), &rec.nu, &r.lambda, &r.alpha, beta])?;
    }
    let bytes = w.into_inner().map_err(|e| FormatError::Malformed(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JackRecord {
    pub lambda: String,
    pub norm: String,
    /// `θ^λ_μ` keyed by `μ`; zeros omitted.
    pub theta: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JackTableRecord {
    pub n: usize,
    pub jacks: Vec<JackRecord>,
}

impl JackTableRecord {
    pub fn from_table(t: &JackTable) -> JackTableRecord {
        JackTableRecord {
            n: t.n,
            jacks: t
                .expansions()
                .map(|j| JackRecord {
                    lambda: j.lambda.to_string(),
                    norm: j.norm.to_string(),
                    theta: j.theta.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.to_string(), v.to_string())).collect(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<JackTable, FormatError> {
        let mut out = Vec::new();
        for j in &self.jacks {
            let mut theta = BTreeMap::new();
            for (k, v) in &j.theta {
                theta.insert(parse::<Partition>(k)?, parse::<RatFunc>(v)?);
            }
            out.push(JackExpansion { lambda: parse(&j.lambda)?, theta, norm: parse(&j.norm)? });
        }
        Ok(JackTable::from_expansions(self.n, out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub k: usize,
    pub m: usize,
    pub lambda: String,
    /// `Σ β^ϑ` over the maps of this face type.
    pub beta_poly: BetaForm,
    pub orientable: u64,
    pub total: u64,
}

/// Columns `k,m,lambda,beta_poly,orientable,total`.
pub fn census_csv(rows: &[CensusRow]) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "m", "lambda", "beta_poly", "orientable", "total"])?;
    for r in rows {
        w.write_record([
            r.k.to_string(),
            r.m.to_string(),
            r.lambda.clone(),
            r.beta_poly.symbolic.clone(),
            r.orientable.to_string(),
            r.total.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| FormatError::Malformed(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}
