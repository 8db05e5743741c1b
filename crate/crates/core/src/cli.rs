//! Command-line front end. `run` returns the exit code and both output streams so the binary stays
//! a two-liner and tests can drive it in-process.
//!
//! Exit codes: 0 success or pass, 1 a certificate fails, 2 bad input, 3 inconclusive.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::admissible::{search, AdmissibleError, MuTemplate, SearchOptions, TripleSpec};
use crate::certificate::{Certificate, Status};
use crate::gcslin::sample::{random_structure, rng};
use crate::gcslin::{bfield_decompose, GCStructure, GcsError, Kind};
use crate::liealg::{LieError, RealForm, VoganDiagram, WeylAlgebra};
use crate::rootsys::{enumerate_sigma_parabolic, EnumerateOptions, RootSubset};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Gcs(#[from] GcsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "gcs", about = "Exact Lie-theoretic generalized complex structures")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct FormArgs {
    /// Vogan diagram JSON `{"type", "theta", "painted"}`.
    #[arg(long, conflicts_with = "type")]
    pub vogan: Option<PathBuf>,
    /// Cartan type; stands for the compact form.
    #[arg(long = "type")]
    pub r#type: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots and structure constants of the Weyl basis.
    Algebra {
        #[arg(long = "type")]
        r#type: String,
    },
    /// `a_α`, `σ` on roots and the real basis of a real form.
    Realform {
        #[command(flatten)]
        form: FormArgs,
    },
    /// σ-parabolic subsets of the roots.
    Subsets {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long)]
        sigma_positive: bool,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
    /// Certificate for a triple JSON.
    Verify {
        #[arg(long)]
        triple: PathBuf,
    },
    /// Triples assembled over every σ-parabolic `R₀` that verify.
    Search {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long)]
        sigma_positive: bool,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Templates for μ; repeatable.
        #[arg(long = "template", value_enum, default_values_t = [TemplateArg::Zero])]
        templates: Vec<TemplateArg>,
    },
    /// B-field normal form of a symmetric structure, read from `--input` or sampled from `--seed`.
    Decompose {
        #[arg(long, conflicts_with = "seed")]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest `n` when sampling.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TemplateArg {
    Zero,
    Height,
}

impl From<TemplateArg> for MuTemplate {
    fn from(t: TemplateArg) -> Self {
        match t {
            TemplateArg::Zero => MuTemplate::Zero,
            TemplateArg::Height => MuTemplate::Height,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output types serialize");
    s.push('\n');
    s
}

fn real_form(args: &FormArgs) -> Result<RealForm, CliError> {
    let vogan = match (&args.vogan, &args.r#type) {
        (Some(p), None) => read_json::<VoganDiagram>(p)?,
        (None, Some(t)) => VoganDiagram::inner(t, &[])?,
        _ => return Err(CliError::Usage("give --vogan FILE or --type T".into())),
    };
    let w = WeylAlgebra::from_type_str(&vogan.cartan_type.to_string())?;
    Ok(RealForm::build(&w, &vogan)?)
}

fn certificate_code(c: &Certificate) -> i32 {
    match c.status() {
        Status::Fail => 1,
        Status::Inconclusive => 3,
        _ => 0,
    }
}

#[derive(Serialize)]
struct AlgebraReport {
    #[serde(rename = "type")]
    cartan_type: String,
    rank: usize,
    dim: usize,
    /// Coefficients over the simple roots, in basis order.
    roots: Vec<Vec<i64>>,
    /// `(α, β, N_{αβ})` for every pair with `α + β` a root.
    n_table: Vec<(usize, usize, Scalar)>,
}

#[derive(Serialize)]
struct RealFormReport {
    vogan: VoganDiagram,
    inner: bool,
    a: Vec<i64>,
    sigma: Vec<usize>,
    real_basis: Vec<String>,
}

#[derive(Serialize)]
struct SearchOutput {
    candidates: usize,
    verified: Vec<TripleSpec>,
    rejected: Vec<(RootSubset, String)>,
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Algebra { r#type } => {
            let w = WeylAlgebra::from_type_str(r#type)?;
            let rs = w.rs();
            let report = AlgebraReport {
                cartan_type: rs.cartan_type.to_string(),
                rank: w.rank,
                dim: w.dim,
                roots: (0..rs.len()).map(|k| rs.root(k).to_vec()).collect(),
                n_table: w.n_table(),
            };
            if text {
                let mut out = format!("{}: rank {}, dim {}, {} roots\n", report.cartan_type, w.rank, w.dim, rs.len());
                for (k, r) in report.roots.iter().enumerate() {
                    out.push_str(&format!("  {k}: {r:?}\n"));
                }
                out.push_str(&format!("{} nonzero N\n", report.n_table.len()));
                Ok((0, out))
            } else {
                Ok((0, json(&report)))
            }
        }
        Command::Realform { form } => {
            let f = real_form(form)?;
            let report = RealFormReport {
                vogan: f.vogan.clone(),
                inner: f.inner,
                a: f.a.clone(),
                sigma: f.sigma.perm.clone(),
                real_basis: f.kinds.iter().map(|k| format!("{k:?}")).collect(),
            };
            if text {
                let kind = if f.inner { "inner" } else { "outer" };
                Ok((0, format!("{} ({kind}), a = {:?}, sigma = {:?}\n", f.vogan.cartan_type, f.a, report.sigma)))
            } else {
                Ok((0, json(&report)))
            }
        }
        Command::Subsets { form, sigma_positive, budget } => {
            let f = real_form(form)?;
            let opts = EnumerateOptions { sigma_positive_only: *sigma_positive, max_results: None, budget: *budget };
            let sets = enumerate_sigma_parabolic(f.algebra.rs(), &f.sigma, opts).map_err(LieError::from)?;
            if text {
                let lines: Vec<String> = sets.iter().map(|s| format!("{:?}\n", s.members)).collect();
                Ok((0, format!("{} subsets\n{}", sets.len(), lines.concat())))
            } else {
                Ok((0, json(&sets)))
            }
        }
        Command::Verify { triple } => {
            let spec: TripleSpec = read_json(triple)?;
            let cert = spec.verify()?;
            let out = if text {
                cert.render_text()
            } else {
                json(&serde_json::json!({ "status": cert.status(), "certificate": cert }))
            };
            Ok((certificate_code(&cert), out))
        }
        Command::Search { form, sigma_positive, budget, templates } => {
            let f = real_form(form)?;
            let opts = SearchOptions {
                templates: templates.iter().map(|&t| t.into()).collect(),
                sigma_positive_only: *sigma_positive,
                budget: *budget,
            };
            let report = search(&f, &opts)?;
            let out = SearchOutput {
                candidates: report.candidates,
                verified: report.verified.iter().map(|h| TripleSpec::from_hit(&f, h)).collect(),
                rejected: report.rejected,
            };
            if text {
                let mut s = format!("{} candidates, {} verified\n", out.candidates, out.verified.len());
                for t in &out.verified {
                    s.push_str(&format!("  R0 {:?}\n", t.r0.members));
                }
                Ok((0, s))
            } else {
                Ok((0, json(&out)))
            }
        }
        Command::Decompose { input, seed, n } => {
            let s = match (input, seed) {
                (Some(p), _) => {
                    let raw: GCStructure = read_json(p)?;
                    GCStructure::new(raw.j, raw.kind)?
                }
                (None, Some(seed)) => {
                    let mut r = rng(*seed);
                    loop {
                        let s = random_structure(&mut r, (*n).max(1));
                        if s.kind == Kind::Symmetric {
                            break s;
                        }
                    }
                }
                (None, None) => return Err(CliError::Usage("give --input FILE or --seed N".into())),
            };
            let nf = bfield_decompose(&s)?;
            let code = if nf.verified { 0 } else { 1 };
            if text {
                Ok((code, format!("dim Delta = {}, verified = {}\nB = {:?}\n", nf.delta.len(), nf.verified, nf.b)))
            } else {
                Ok((code, json(&nf)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcs(args: &[&str]) -> Outcome {
        run(std::iter::once("gcs").chain(args.iter().copied()))
    }

    #[test]
    fn algebra_counts() {
        let out = gcs(&["algebra", "--type", "A2"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 6);
        assert_eq!(v["n_table"].as_array().unwrap().len(), 6);
        let a1: serde_json::Value = serde_json::from_str(&gcs(&["algebra", "--type", "A1"]).stdout).unwrap();
        assert!(a1["n_table"].as_array().unwrap().is_empty());
    }

    #[test]
    fn bad_type_and_usage() {
        let out = gcs(&["algebra", "--type", "H9"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("H9"), "{}", out.stderr);
        assert_eq!(gcs(&["frobnicate"]).code, 2);
        assert_eq!(gcs(&["--help"]).code, 0);
        assert_eq!(gcs(&["decompose"]).code, 2);
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let a = gcs(&["decompose", "--seed", "7"]);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a, gcs(&["decompose", "--seed", "7"]));
    }
}
