//! Command implementations. Each returns the text to print, so runs are
//! byte-for-byte reproducible and testable without spawning a process.

use anyhow::{bail, Context};
use serde::Serialize;

use jacklab_core::jack::{jack_gram_schmidt, JackOracle, JackTable};
use jacklab_core::matching::DEFAULT_BUDGET;
use jacklab_core::{CoeffKind, CoeffTable, CoefficientEngine, Partition};

use crate::cache::{Cache, CacheKind};
use crate::census::{hypermap_census, hypermap_witnesses, matching_census, matching_witnesses};
use crate::formats::{census_csv, table_csv, JackTableRecord, TableRecord};
use crate::verify::{self, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Omega,
    Identities,
    Conjectures,
    Matchings,
    Hypermaps,
}

fn json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn table_key(kind: CoeffKind, n: usize, nu: &Partition) -> String {
    let k = match kind {
        CoeffKind::A => "a",
        CoeffKind::H => "h",
        CoeffKind::ATilde => "at",
        CoeffKind::HTilde => "ht",
    };
    format!("{k}-n{n}-nu{}", nu.to_string().replace(',', "_"))
}

pub fn parse_nu(n: usize, nu: &str) -> anyhow::Result<Partition> {
    let p: Partition = nu.parse().with_context(|| format!("invalid partition {nu:?}"))?;
    if p.weight() != n {
        bail!("{nu} is not a partition of {n}");
    }
    Ok(p)
}

/// The table, from the cache when possible.
pub fn coeff_table(kind: CoeffKind, n: usize, nu: &Partition, cache: &Cache) -> anyhow::Result<CoeffTable> {
    let (rec, _) = cache.get_or_compute(CacheKind::CoeffTable, &table_key(kind, n, nu), || {
        CoefficientEngine::new(n).table(kind, n, nu).map(|t| TableRecord::from_table(&t))
    })?;
    Ok(rec.to_table()?)
}

pub fn coeffs(kind: CoeffKind, n: usize, nu: &Partition, format: Format, cache: &Cache) -> anyhow::Result<String> {
    let t = coeff_table(kind, n, nu, cache)?;
    match format {
        Format::Json => json(&TableRecord::from_table(&t)),
        Format::Csv => Ok(table_csv(&t)?),
    }
}

/// Jack expansions of degree `n`, from the cache when possible.
pub fn jack_table(n: usize, cache: &Cache) -> anyhow::Result<JackTable> {
    let (rec, _) = cache.get_or_compute(CacheKind::JackTheta, &format!("n{n}"), || {
        Ok::<_, anyhow::Error>(JackTableRecord::from_table(&jack_gram_schmidt(n)))
    })?;
    Ok(rec.to_table()?)
}

/// Jack expansions of degree `n`, or with `nu` the `a` table extracted from
/// the Cauchy sum instead of the operator route.
pub fn oracle(n: usize, nu: Option<&Partition>, format: Format, cache: &Cache) -> anyhow::Result<String> {
    match nu {
        None => {
            if format == Format::Csv {
                bail!("Jack tables are exported as JSON only");
            }
            json(&JackTableRecord::from_table(&jack_table(n, cache)?))
        }
        Some(nu) => {
            let tables = (0..=n).map(|d| jack_table(d, cache)).collect::<anyhow::Result<Vec<_>>>()?;
            let t = JackOracle::from_tables(tables).a_table(n, nu)?;
            match format {
                Format::Json => json(&TableRecord::from_table(&t)),
                Format::Csv => Ok(table_csv(&t)?),
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyArgs {
    pub degree: Option<usize>,
    pub n_max: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
}

pub fn run_suite(suite: Suite, args: &VerifyArgs) -> anyhow::Result<SuiteReport> {
    Ok(match suite {
        Suite::Omega => verify::omega(args.degree.unwrap_or(10)),
        Suite::Identities => verify::identities(args.degree.unwrap_or(5)),
        Suite::Conjectures => verify::conjectures(args.n_max.unwrap_or(8)),
        Suite::Matchings => verify::matchings(args.n_max.unwrap_or(6)),
        Suite::Hypermaps => match (args.k, args.m) {
            (Some(k), Some(m)) if k > 0 && m > 0 => verify::hypermaps(&[(k, m)]),
            (None, None) => verify::hypermaps(&verify::default_hypermap_shapes()),
            _ => bail!("hypermaps needs both --k and --m (positive), or neither"),
        },
    })
}

/// Report text and whether every check passed.
pub fn verify(suite: Suite, args: &VerifyArgs) -> anyhow::Result<(String, bool)> {
    let report = run_suite(suite, args)?;
    Ok((json(&report)?, report.passed))
}

pub fn census_hypermaps(k: usize, m: usize, format: Format, witness: bool) -> anyhow::Result<String> {
    let budget = (k * m).max(DEFAULT_BUDGET);
    if witness {
        return json(&hypermap_witnesses(k, m, budget)?);
    }
    let rows = hypermap_census(k, m, budget)?;
    match format {
        Format::Json => json(&rows),
        Format::Csv => Ok(census_csv(&rows)?),
    }
}

pub fn census_matchings(nu: &Partition, lambda: Option<&Partition>, format: Format, witness: bool) -> anyhow::Result<String> {
    let budget = nu.weight().max(DEFAULT_BUDGET);
    if witness {
        let Some(lambda) = lambda else { bail!("witness dumps need --lambda") };
        return json(&matching_witnesses(lambda, nu, budget)?);
    }
    let rows = matching_census(nu, budget)?;
    match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["nu", "lambda", "beta_poly", "bipartite", "total"])?;
            for r in &rows {
                w.write_record([r.nu.as_str(), &r.lambda, &r.beta_poly.symbolic, &r.bipartite.to_string(), &r.total.to_string()])?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}
