//! Command line front end: describe a group, verify its Hopf structure,
//! contract it, or classify all contractions of a given size.

pub mod report;
pub mod spec_json;

use std::io::Write;
use std::path::PathBuf;

use ckgroup_core::classify::{enumerate_catalog_with, CatalogOptions, KeyOptions};
use ckgroup_core::contraction::{contract_group, eliminate_generators};
use ckgroup_core::group::{r_tilde, yang_baxter_defect, GroupSpec, SpecError};
use ckgroup_core::hopf::{all_relations, verify_group, Check, VerificationReport};
use ckgroup_core::scalars::{ExpScalar, IndexSet};
use ckgroup_core::tensoralg::{random_points, NcPoly, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::{catalog_json, catalog_text, ContractReport, DescribeReport, VerifyReport};
use spec_json::load_spec;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("invalid group: {0}")]
    Spec(#[from] SpecError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "ckgroup",
    version,
    about = "Quantum orthogonal Cayley-Klein groups: verification, contraction, classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for the random evaluation points of span tests.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Number of random evaluation points.
    #[arg(long, global = true, default_value_t = 3)]
    pub points: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generating matrix, ρ, J and the nilpotent pattern.
    Describe {
        /// Group spec as a JSON file or inline JSON.
        #[arg(long)]
        spec: String,
        /// Also dump every defining relation as `TAG(i,k): poly`.
        #[arg(long)]
        relations: bool,
    },
    /// Check structure identities, Yang-Baxter and the Hopf axioms.
    Verify {
        /// Group spec as a JSON file or inline JSON.
        #[arg(long)]
        spec: String,
        /// Also check the classical limit v = 0, where the RUU relations
        /// reduce to commutators.
        #[arg(long)]
        classical: bool,
        /// Add 1 to one entry of R̃ (1-based ROW,COL) before the Yang-Baxter
        /// check; a negative control.
        #[arg(long, hide = true, value_name = "ROW,COL")]
        perturb_r_tilde: Option<String>,
    },
    /// Contract the group and report verdicts, relations and Hopf maps.
    Contract {
        /// Group spec with at least one nilpotent parameter.
        #[arg(long)]
        spec: String,
    },
    /// Classify all contractions of SO(N).
    Classify {
        #[arg(long)]
        n: usize,
        /// Ignore J and classify patterns only.
        #[arg(long)]
        shadow: bool,
        /// Only nilpotent sets inside this comma separated list, e.g. 1,2.
        #[arg(long, value_name = "K,..")]
        within: Option<String>,
        /// Allow renaming ι_k to ι_{N-k} without reflecting.
        #[arg(long)]
        bare_relabel: bool,
    },
}

/// A rendered report and whether everything it checked passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

fn emit<T: Serialize>(format: Format, dto: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(dto).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(dto),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("expected a number, got {x:?}")))
        })
        .collect()
}

/// Yang-Baxter on `R̃` with one entry perturbed.
fn perturbed_yang_baxter(n: usize, at: &str, seed: u64, points: usize) -> Result<Check, CliError> {
    let idx = parse_list(at)?;
    let [row, col] = idx[..] else {
        return Err(CliError::Input("--perturb-r-tilde expects ROW,COL".into()));
    };
    let size = n * n;
    if !(1..=size).contains(&row) || !(1..=size).contains(&col) {
        return Err(CliError::Input(format!("R̃ entry ({row},{col}) outside 1..{size}")));
    }
    let mut r = r_tilde(n);
    let bumped = r.get(row - 1, col - 1) + &ExpScalar::one(n - 1);
    r.set(row - 1, col - 1, bumped);
    let failure = random_points(seed, points, n - 1).into_iter().find_map(|p| {
        yang_baxter_defect(&r, n, &p.t).map(|(a, b)| format!("YBE fails at t = {} entry {a:?},{b:?}", p.t.compact()))
    });
    Ok(Check {
        name: format!("Yang-Baxter (R̃ perturbed at {row},{col})"),
        passed: failure.is_none(),
        detail: failure,
    })
}

/// At `v = 0` the RUU relations have to become plain commutators: they vanish
/// once generators commute.
fn classical_limit(spec: &GroupSpec) -> Check {
    let failure = all_relations(spec)
        .into_iter()
        .filter(|r| r.tag == ckgroup_core::hopf::RelationTag::Ruu)
        .find_map(|r| {
            let at_zero = r.poly.map_coeffs(|c| c.at_t_one());
            let mut commutative = NcPoly::zero();
            for (w, c) in at_zero.terms() {
                let mut gens = w.gens().to_vec();
                gens.sort();
                commutative.add_term(Word::from_gens(gens), c.clone());
            }
            (!commutative.is_zero()).then(|| format!("RUU({},{}) is not a commutator at v = 0", r.row, r.col))
        });
    Check {
        name: "classical limit".into(),
        passed: failure.is_none(),
        detail: failure,
    }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let c = &cli.common;
    let outcome = match &cli.command {
        Command::Describe { spec, relations } => {
            let spec = load_spec(spec)?;
            let r = DescribeReport::build(&spec, *relations);
            Outcome {
                output: emit(c.format, &r, DescribeReport::text),
                passed: true,
            }
        }
        Command::Verify {
            spec,
            classical,
            perturb_r_tilde,
        } => {
            let spec = load_spec(spec)?;
            let mut report = verify_group(&spec, c.seed, c.points);
            if let Some(at) = perturb_r_tilde {
                if spec.n() < 3 {
                    return Err(CliError::Input("R̃ needs N ≥ 3".into()));
                }
                let check = perturbed_yang_baxter(spec.n(), at, c.seed, c.points)?;
                report.checks.retain(|x| x.name != "Yang-Baxter");
                report.checks.push(check);
            }
            if *classical {
                report.checks.push(classical_limit(&spec));
            }
            let r = VerifyReport::build(&spec, &report);
            Outcome {
                passed: r.passed,
                output: emit(c.format, &r, VerifyReport::text),
            }
        }
        Command::Contract { spec } => {
            let spec = load_spec(spec)?;
            if spec.nilpotent_set().is_empty() {
                return Err(CliError::Input("contract needs at least one \"nil\" parameter".into()));
            }
            if spec.assignment().mixes_nil_and_imag() {
                return Err(CliError::Input(
                    "mixing nilpotent and imaginary parameters is not supported".into(),
                ));
            }
            let g = eliminate_generators(contract_group(&spec));
            let checks: VerificationReport = g.hopf_checks(c.seed, c.points);
            let r = ContractReport::build(&g, &checks, c.seed, c.points);
            Outcome {
                passed: r.passed,
                output: emit(c.format, &r, ContractReport::text),
            }
        }
        Command::Classify {
            n,
            shadow,
            within,
            bare_relabel,
        } => {
            if !(3..=6).contains(n) {
                return Err(CliError::Input(format!("classify supports 3 ≤ N ≤ 6, got {n}")));
            }
            let within = match within {
                None => None,
                Some(s) => {
                    let idx = parse_list(s)?;
                    if idx.iter().any(|&k| k == 0 || k >= *n) {
                        return Err(CliError::Input(format!("parameter indices must lie in 1..{}", n - 1)));
                    }
                    Some(IndexSet::from_indices(idx))
                }
            };
            let opts = CatalogOptions {
                key: KeyOptions {
                    ignore_j: *shadow,
                    bare_relabel: *bare_relabel,
                },
                within,
            };
            let classes = enumerate_catalog_with(*n, opts);
            let output = match c.format {
                Format::Json => emit(c.format, &catalog_json(&classes), |_| String::new()),
                Format::Text => catalog_text(*n, &classes),
            };
            Outcome { output, passed: true }
        }
    };
    Ok(outcome)
}

/// Parses arguments, runs, writes the report and returns the exit code:
/// 0 when every check passed, 1 on a failed check, 2 on bad input.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(
                if code == 0 {
                    stdout as &mut dyn Write
                } else {
                    stderr as &mut dyn Write
                },
                "{e}"
            );
            return code;
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => stdout.write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}
