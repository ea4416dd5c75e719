mod artifact;
mod manifest;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cobound::building::{degree_disparity_report, explore_conjecture, FlagComplexA};
use cobound::building_like::VerifyOptions;
use cobound::expansion::{self, DEFAULT_BUDGET};
use cobound::families::{certify, CertifyOptions, Family};
use cobound::rational::fmt_ratio;
use cobound::tester::{self, TesterConfig};
use cobound::{h_exact, SearchOptions};
use serde_json::json;

use manifest::{ManifestBuilder, RunManifest};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_CERTIFY: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "cobound",
    version,
    about = "Exact coboundary expansion of simplicial complexes over F2"
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap on the size of any single exhaustive enumeration.
    #[arg(long, global = true, env = "COBOUND_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a complex and write it as a JSON artifact plus facet text.
    Build {
        /// simplex, partition, building, rp2 or sphere.
        #[arg(long)]
        family: String,
        params: Vec<u64>,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Exact h_k by coset enumeration.
    Hk {
        input: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        no_prune: bool,
    },
    /// Closed-form bounds for a family.
    Bounds {
        #[arg(long)]
        family: String,
        params: Vec<u64>,
        #[arg(long)]
        dim: usize,
        /// Also compute a_k and θ_k from filling chains (buildings only).
        #[arg(long)]
        structure: bool,
        /// Add the best singleton upper bound.
        #[arg(long)]
        upper: bool,
    },
    /// Verify building-like structure and certify bounds for an artifact.
    Certify {
        input: PathBuf,
        #[arg(long)]
        kmax: usize,
        /// Compute h_k exactly and check every bound against it.
        #[arg(long)]
        exact: bool,
        /// Check equivariance on this many random triples.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the randomized coboundary tester on a cochain.
    Test {
        input: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Top-minus-one expansion of A_{n+1}(F_q) over a range of q.
    ExploreConjecture {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
        q: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write CSV here and the manifest next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cofacet counts and singleton ratios per vertex type of A_{n+1}(F_q).
    Disparity { n: usize, q: u32 },
}

#[derive(Debug)]
struct CertificationFailed;

impl std::fmt::Display for CertificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("certification failed")
    }
}

impl std::error::Error for CertificationFailed {}

fn emit(value: &serde_json::Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_family(name: &str, params: &[u64]) -> Result<Family> {
    Ok(Family::parse(name, params)?)
}

fn cmd_build(family: &str, params: &[u64], out: &Path, budget: u64) -> Result<()> {
    let fam = parse_family(family, params)?;
    let mb = ManifestBuilder::new("build", json!({ "family": fam, "out": out }), budget);
    let x = fam.complex(budget)?;
    artifact::write(out, &x, Some(fam), mb.finish())?;
    emit(&json!({ "artifact": out, "f_vector": x.f_vector(), "facet_hash": artifact::facet_hash(&x) }))
}

fn cmd_hk(input: &Path, k: usize, no_prune: bool, budget: u64) -> Result<()> {
    let mut mb = ManifestBuilder::new("hk", json!({ "dim": k, "prune": !no_prune }), budget);
    let loaded = artifact::load(input, &mut mb)?;
    let x = &loaded.complex;
    let opts = SearchOptions {
        budget,
        prune: !no_prune,
        ..SearchOptions::default()
    };
    let r = h_exact(x, k, opts)?;
    let witness: Vec<Vec<String>> = r.witness_faces(x).into_iter().map(|f| x.face_labels(f)).collect();
    emit(&json!({
        "manifest": mb.finish(),
        "k": k,
        "value": fmt_ratio(&r.value),
        "exact": r.exact,
        "search_size": r.search_size,
        "witness": witness,
    }))
}

fn cmd_bounds(family: &str, params: &[u64], k: usize, structure: bool, upper: bool, budget: u64) -> Result<()> {
    let fam = parse_family(family, params)?;
    let mb = ManifestBuilder::new(
        "bounds",
        json!({ "family": fam, "dim": k, "structure": structure, "upper": upper }),
        budget,
    );
    let mut certs = match (fam, structure) {
        (Family::Building { n, q }, true) => {
            cobound::building::building_bounds(&FlagComplexA::with_budget(n, q, budget)?, k, true)?
        }
        (_, true) => bail!(cobound::Error::InvalidArgument(
            "--structure applies to buildings".into()
        )),
        _ => fam.closed_form_bounds(k, budget)?,
    };
    if upper {
        certs.push(expansion::singleton_upper_bound(&fam.complex(budget)?, k, budget)?);
    }
    emit(&json!({ "manifest": mb.finish(), "certificates": certs }))
}

fn cmd_certify(input: &Path, kmax: usize, exact: bool, sample: Option<usize>, seed: u64, budget: u64) -> Result<()> {
    let mut mb = ManifestBuilder::new(
        "certify",
        json!({ "kmax": kmax, "exact": exact, "sample": sample }),
        budget,
    )
    .seed(seed);
    let loaded = artifact::load(input, &mut mb)?;
    let Some(fam) = loaded.family else {
        bail!(cobound::Error::InvalidArgument(format!(
            "{} carries no family metadata; build it with the build command",
            input.display()
        )));
    };
    if artifact::facet_hash(&fam.complex(budget)?) != artifact::facet_hash(&loaded.complex) {
        bail!(cobound::Error::Parse("artifact facets differ from its family".into()));
    }
    let opts = CertifyOptions {
        verify: VerifyOptions {
            sample,
            seed,
            ..VerifyOptions::default()
        },
        exact,
        budget,
    };
    let report = certify(fam, kmax, &opts)?;
    emit(&json!({ "manifest": mb.finish(), "report": report }))?;
    if !report.passed {
        bail!(CertificationFailed);
    }
    Ok(())
}

fn cmd_test(input: &Path, cochain: &Path, k: usize, trials: u64, seed: u64, budget: u64) -> Result<()> {
    let mut mb = ManifestBuilder::new("test", json!({ "dim": k, "trials": trials }), budget).seed(seed);
    let loaded = artifact::load(input, &mut mb)?;
    let x = &loaded.complex;
    let alpha = artifact::load_cochain(cochain, x, k, &mut mb)?;
    let mut cfg = TesterConfig::new(k, trials, seed);
    cfg.budget = budget;
    match tester::exact_epsilon(x, k, budget) {
        Ok((eps, src)) => cfg = cfg.with_epsilon(eps, src),
        Err(cobound::Error::BudgetExceeded { .. }) => {
            let best = match loaded.family {
                Some(f) => f
                    .closed_form_bounds(k, budget)?
                    .into_iter()
                    .filter(|c| c.side == expansion::Side::Lower)
                    .max_by(|a, b| a.value.cmp(&b.value)),
                None => None,
            };
            if let Some(c) = best {
                let label = serde_json::to_value(c.name)?.as_str().unwrap_or("bound").to_string();
                cfg = cfg.with_epsilon(c.value, label);
            }
        }
        Err(e) => return Err(e.into()),
    }
    let report = tester::run(x, &alpha, &cfg)?;
    emit(&json!({ "manifest": mb.finish(), "report": report }))
}

fn cmd_explore(n: usize, qs: &[u32], seed: u64, out: Option<&Path>, budget: u64) -> Result<()> {
    let mb = ManifestBuilder::new("explore-conjecture", json!({ "n": n, "q": qs }), budget).seed(seed);
    let rows = qs
        .iter()
        .map(|&q| {
            log::info!("A_{}(F_{q})", n + 1);
            explore_conjecture(n, q, budget, seed)
        })
        .collect::<cobound::Result<Vec<_>>>()?;
    let manifest: RunManifest = mb.finish();
    match out {
        Some(path) => {
            let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
            let mpath = path.with_extension("manifest.json");
            fs::write(&mpath, serde_json::to_string_pretty(&manifest)?)?;
            emit(&json!({ "csv": path, "manifest_file": mpath, "rows": rows.len() }))
        }
        None => emit(&json!({ "manifest": manifest, "rows": rows })),
    }
}

fn cmd_disparity(n: usize, q: u32, budget: u64) -> Result<()> {
    let mb = ManifestBuilder::new("disparity", json!({ "n": n, "q": q }), budget);
    let b = FlagComplexA::with_budget(n, q, budget)?;
    emit(&json!({ "manifest": mb.finish(), "report": degree_disparity_report(&b) }))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<CertificationFailed>().is_some() {
        return EXIT_CERTIFY;
    }
    match err.downcast_ref::<cobound::Error>() {
        Some(cobound::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let budget = cli.budget;
    match cli.command {
        Command::Build { family, params, out } => cmd_build(&family, &params, &out, budget),
        Command::Hk { input, dim, no_prune } => cmd_hk(&input, dim, no_prune, budget),
        Command::Bounds {
            family,
            params,
            dim,
            structure,
            upper,
        } => cmd_bounds(&family, &params, dim, structure, upper, budget),
        Command::Certify {
            input,
            kmax,
            exact,
            sample,
            seed,
        } => cmd_certify(&input, kmax, exact, sample, seed, budget),
        Command::Test {
            input,
            cochain,
            dim,
            trials,
            seed,
        } => cmd_test(&input, &cochain, dim, trials, seed, budget),
        Command::ExploreConjecture { n, q, seed, out } => cmd_explore(n, &q, seed, out.as_deref(), budget),
        Command::Disparity { n, q } => cmd_disparity(n, q, budget),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_mapping() {
        assert_eq!(exit_code(&anyhow::Error::new(CertificationFailed)), EXIT_CERTIFY);
        let budget = cobound::Error::BudgetExceeded { bits: 30, cap: 8 };
        assert_eq!(exit_code(&anyhow::Error::new(budget)), EXIT_BUDGET);
        assert_eq!(exit_code(&anyhow::anyhow!("io")), EXIT_INPUT);
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
