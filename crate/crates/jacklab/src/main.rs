use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use jacklab::app::{self, Format, Suite, VerifyArgs};
use jacklab::cache::Cache;
use jacklab_core::CoeffKind;

#[derive(Parser)]
#[command(name = "jacklab", version, about = "Jack connection coefficients: tables, censuses and checks")]
struct Cli {
    /// Cache directory; JACKLAB_CACHE takes precedence. Off when neither is set.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// A coefficient table a, h, a~ or h~ for mu = (n) and every lambda.
    Coeffs {
        #[arg(long, default_value = "a", value_parser = parse_kind)]
        kind: CoeffKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: String,
    },
    /// Run a verification suite; exits 1 on any failed check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Degree bound for omega and identities.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Weight or theta polynomials per face type, or witness dumps.
    Census {
        #[command(subcommand)]
        what: CensusCmd,
    },
    /// Jack expansions of degree n, or with --nu the a table read off the Cauchy sum.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: Option<String>,
    },
}

#[derive(Subcommand)]
enum CensusCmd {
    /// Labelled star hypermaps with m black vertices of degree k.
    Hypermaps {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Dump every map as JSON instead.
        #[arg(long)]
        witness: bool,
    },
    /// Labelled matchings with Lambda(b, delta) = nu.
    Matchings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: String,
        /// Restrict a witness dump to this lambda.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        witness: bool,
    },
}

fn parse_kind(s: &str) -> Result<CoeffKind, String> {
    s.parse().map_err(|_| format!("unknown kind {s:?}; expected a, h, a~ or h~"))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().context("configuring the worker pool")?;
    }
    let cache = Cache::from_env_or(cli.cache_dir.clone());
    let (text, ok) = match cli.cmd {
        Cmd::Coeffs { kind, n, nu } => (app::coeffs(kind, n, &app::parse_nu(n, &nu)?, cli.format, &cache)?, true),
        Cmd::Verify { suite, degree, n_max, k, m } => app::verify(suite, &VerifyArgs { degree, n_max, k, m })?,
        Cmd::Census { what: CensusCmd::Hypermaps { k, m, witness } } => (app::census_hypermaps(k, m, cli.format, witness)?, true),
        Cmd::Census { what: CensusCmd::Matchings { n, nu, lambda, witness } } => {
            let nu = app::parse_nu(n, &nu)?;
            let lambda = lambda.map(|l| app::parse_nu(n, &l)).transpose()?;
            (app::census_matchings(&nu, lambda.as_ref(), cli.format, witness)?, true)
        }
        Cmd::Oracle { n, nu } => {
            let nu = nu.map(|s| app::parse_nu(n, &s)).transpose()?;
            (app::oracle(n, nu.as_ref(), cli.format, &cache)?, true)
        }
    };
    match &cli.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
