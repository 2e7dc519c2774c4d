//! `kerdelta`: batch front end for the constants of `Σ f_i(x_i) ∂/∂y_i`.
//!
//! Exit codes: 0 on success, 1 for a false verdict (not a constant, basis
//! check failed), 2 for usage, I/O and parse errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use kerdelta::dill_gb::{LeadReport, PairOutcome, ReducednessReport};
use kerdelta::kernel_basis::DEFAULT_MONOMIAL_BUDGET;
use kerdelta::{
    build_relations, enumerate_normal_words, kernel_dim_oracle, parse_poly, rewrite_constant,
    verify_groebner, APoly, DegreeMeasure, GeneratorTable, InstanceFile, KernelError, OrderVariant,
    ProblemInstance,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kerdelta", version, about = "Constants of an elementary derivation Σ f_i(x_i) ∂/∂y_i")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance JSON file: {"d": 3, "f": [[0,1], [1,0,1], [0,0,2]]}
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Corrected,
    Paper,
}

impl From<VariantArg> for OrderVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Corrected => OrderVariant::Corrected,
            VariantArg::Paper => OrderVariant::PaperLiteral,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Image,
    Internal,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relations R and S, one per line.
    Relations {
        #[command(flatten)]
        instance: InstanceArg,
        /// Also write the relations as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that R ∪ S is a reduced Gröbner basis.
    VerifyGb {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: VariantArg,
        /// Write the per-pair certificate as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// List normal words up to a degree bound, ascending in the DILL order.
    NormalWords {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        max_deg: u32,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "corrected")]
        variant: VariantArg,
        /// Bound the degree of the image in K[X,Y] or the degree in K[X,U].
        #[arg(long, value_enum, default_value = "image")]
        measure: MeasureArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exit 0 if the polynomial is a constant, 1 otherwise.
    Check {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        poly: String,
    },
    /// Rewrite a constant as a polynomial in the x_i and u_jk.
    Rewrite {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension of the constants of degree at most N, by exact elimination.
    KernelDim {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        max_deg: u32,
        /// Print the nullspace basis.
        #[arg(long)]
        basis: bool,
        /// Refuse slices with more monomials than this.
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_BUDGET)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// A well-formed question whose answer is "no".
    Verdict,
    Semantic(String),
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            // clap's first paragraph, folded onto one line
            let rendered = e.render().to_string();
            let head: Vec<&str> =
                rendered.lines().map(str::trim).take_while(|l| !l.is_empty()).collect();
            eprintln!("error: {}", head.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_instance(arg: &InstanceArg) -> Result<ProblemInstance, Failure> {
    let text = fs::read_to_string(&arg.instance)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", arg.instance.display())))?;
    ProblemInstance::from_json(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", arg.instance.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Failure::usage)?;
    fs::write(path, text + "\n")
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn unix_ms() -> u128 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0)
}

#[derive(Serialize)]
struct RelationOut {
    label: String,
    poly: String,
}

#[derive(Serialize)]
struct Timestamps {
    started_unix_ms: u128,
    finished_unix_ms: u128,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct Certificate<'a> {
    instance: InstanceFile,
    variant: OrderVariant,
    verdict: bool,
    failure: &'a Option<String>,
    lead_conformance: &'a LeadReport,
    pairs: &'a [PairOutcome],
    reducedness: &'a Option<ReducednessReport>,
    timestamps: Timestamps,
}

#[derive(Serialize)]
struct RewriteOut {
    input: String,
    output: String,
}

#[derive(Serialize)]
struct KernelOut {
    max_degree: u32,
    dim: usize,
    normal_words: usize,
    basis: Vec<String>,
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Relations { instance, out: path } => {
            let inst = load_instance(&instance)?;
            let rels = build_relations(&inst);
            let lines: Vec<RelationOut> = rels
                .iter()
                .map(|r| RelationOut { label: r.label.to_string(), poly: r.poly.to_string() })
                .collect();
            for r in &lines {
                writeln!(out, "{}: {}", r.label, r.poly)?;
            }
            if let Some(path) = path {
                write_json(&path, &lines)?;
            }
            Ok(())
        }
        Command::VerifyGb { instance, variant, certificate, jobs } => {
            let inst = load_instance(&instance)?;
            let started_unix_ms = unix_ms();
            let clock = Instant::now();
            let report = verify_groebner(&inst, variant.into(), jobs as usize);
            let elapsed_ms = clock.elapsed().as_millis();
            let lc = &report.lead_conformance;
            let conforming = lc.entries.iter().filter(|e| e.conforms).count();
            let zero = report.pairs.iter().filter(|p| p.reduces_to_zero).count();
            let w = &mut *out;
            (|| -> io::Result<()> {
                writeln!(w, "variant: {}", report.variant)?;
                writeln!(w, "relations: {}", lc.entries.len())?;
                writeln!(w, "lead conformance: {conforming}/{}", lc.entries.len())?;
                writeln!(w, "s-pairs reduced to zero: {zero}/{}", report.pairs.len())?;
                match &report.reducedness {
                    Some(r) => writeln!(w, "reduced: {}", if r.passed() { "yes" } else { "no" })?,
                    None => writeln!(w, "reduced: not checked")?,
                }
                if let Some(p) = report.first_failing_pair() {
                    writeln!(w, "first failing pair: S({}, {}) -> {}", p.first, p.second, p.remainder)?;
                }
                if let Some(f) = &report.failure {
                    writeln!(w, "failure: {f}")?;
                }
                writeln!(w, "verdict: {}", if report.verdict { "verified" } else { "failed" })
            })()?;
            if let Some(path) = certificate {
                let cert = Certificate {
                    instance: inst.to_file(),
                    variant: report.variant,
                    verdict: report.verdict,
                    failure: &report.failure,
                    lead_conformance: &report.lead_conformance,
                    pairs: &report.pairs,
                    reducedness: &report.reducedness,
                    timestamps: Timestamps {
                        started_unix_ms,
                        finished_unix_ms: started_unix_ms + elapsed_ms,
                        elapsed_ms,
                    },
                };
                write_json(&path, &cert)?;
            }
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::Verdict)
            }
        }
        Command::NormalWords { instance, max_deg, count_only, variant, measure, out: path } => {
            let inst = load_instance(&instance)?;
            let table = GeneratorTable::build(&inst);
            let measure = match measure {
                MeasureArg::Image => DegreeMeasure::Image,
                MeasureArg::Internal => DegreeMeasure::Internal,
            };
            let words = enumerate_normal_words(&table, max_deg, measure, variant.into());
            let text: Vec<String> = words.iter().map(ToString::to_string).collect();
            if count_only {
                writeln!(out, "{}", words.len())?;
            } else {
                for t in &text {
                    writeln!(out, "{t}")?;
                }
            }
            if let Some(path) = path {
                write_json(&path, &text)?;
            }
            Ok(())
        }
        Command::Check { instance, poly } => {
            let inst = load_instance(&instance)?;
            let g: APoly = parse_poly(&poly, inst.d()).map_err(Failure::usage)?;
            let constant = inst.derivation().is_constant(&g).map_err(Failure::usage)?;
            if constant {
                writeln!(out, "constant")?;
                Ok(())
            } else {
                writeln!(out, "not a constant")?;
                Err(Failure::Verdict)
            }
        }
        Command::Rewrite { instance, poly, out: path } => {
            let inst = load_instance(&instance)?;
            let g: APoly = parse_poly(&poly, inst.d()).map_err(Failure::usage)?;
            let table = GeneratorTable::build(&inst);
            let h = rewrite_constant(&table, &g).map_err(|e| match e {
                KernelError::Ring(_) | KernelError::Derivation(_) => Failure::usage(e),
                other => Failure::Semantic(other.to_string()),
            })?;
            writeln!(out, "{h}")?;
            if let Some(path) = path {
                write_json(&path, &RewriteOut { input: g.to_string(), output: h.to_string() })?;
            }
            Ok(())
        }
        Command::KernelDim { instance, max_deg, basis, budget, out: path } => {
            let inst = load_instance(&instance)?;
            let slice = kernel_dim_oracle(&inst, max_deg, budget)
                .map_err(|e| Failure::Semantic(e.to_string()))?;
            let table = GeneratorTable::build(&inst);
            let words = enumerate_normal_words(
                &table,
                max_deg,
                DegreeMeasure::Image,
                OrderVariant::Corrected,
            )
            .len();
            let basis_text: Vec<String> = slice.basis.iter().map(ToString::to_string).collect();
            writeln!(out, "dimension: {}", slice.dim)?;
            writeln!(out, "normal words (informational): {words}")?;
            if basis {
                for b in &basis_text {
                    writeln!(out, "{b}")?;
                }
            }
            if let Some(path) = path {
                write_json(
                    &path,
                    &KernelOut { max_degree: max_deg, dim: slice.dim, normal_words: words, basis: basis_text },
                )?;
            }
            Ok(())
        }
    }
}
