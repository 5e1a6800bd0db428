use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qmodel_core::diagonal::build_diagonal;
use qmodel_core::io::{parse_dgl, parse_lie_expr, parse_magma_expr, print_dgl, DglFile, ParseError};
use qmodel_core::product::{build_candidate_model, build_product_model, ProductGenerators, ResidualReport};
use qmodel_core::report::{DiagonalListing, ModelListing, Report, ValueReport};
use qmodel_core::reproduce::{reproduce, TARGETS};
use qmodel_core::{Dgl, Error};

/// Quillen models of products of cones and their diagonals.
#[derive(Parser)]
#[command(name = "qmodel", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation: d² = 0, minimality, cone length.
    Check { file: PathBuf },
    /// Build the product model of two presentations.
    Product {
        left: PathBuf,
        right: PathBuf,
        /// Apply the 2-cone formula to longer cones and report residuals.
        #[arg(long)]
        force: bool,
        /// Write the model as a presentation file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the diagonal model of a 2-cone.
    Diagonal {
        file: PathBuf,
        /// Write the model of X × X as a presentation file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a star product A ⋆ T.
    Star {
        left: PathBuf,
        right: PathBuf,
        /// Magma expression over the left generators, e.g. `a*(b*c)`.
        #[arg(short = 'A', long = "magma")]
        magma: String,
        /// Lie expression over the right generators, e.g. `[y,z]`.
        #[arg(short = 'T', long = "lie")]
        lie: String,
    },
    /// Print the canonical form of a Lie expression.
    Normalize {
        file: PathBuf,
        #[arg(short, long)]
        expr: String,
    },
    /// Report d² on every generator of a model file, optionally after edits.
    Residual {
        file: PathBuf,
        /// `GEN=EXPR`: add EXPR to the differential of GEN.
        #[arg(long = "override", value_name = "GEN=EXPR")]
        overrides: Vec<String>,
        /// `GEN=EXPR`: replace the differential of GEN by EXPR.
        #[arg(long = "replace", value_name = "GEN=EXPR")]
        replacements: Vec<String>,
    },
    /// Recompute a worked example and compare with its printed display.
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(TARGETS))]
        target: String,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(m) => Failure::Verification(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: ParseError) -> Failure {
    Failure::Input(format!("{}:{e}", path.display()))
}

fn load(path: &Path) -> Result<DglFile, Failure> {
    parse_dgl(&read(path)?).map_err(|e| located(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn expr_arg(what: &str, text: &str, e: ParseError) -> Failure {
    Failure::Input(format!("{what} `{text}`: {e}"))
}

fn edits(p: &Dgl, specs: &[String]) -> Result<Vec<(qmodel_core::Gen, qmodel_core::Lie)>, Failure> {
    specs
        .iter()
        .map(|spec| {
            let (name, expr) =
                spec.split_once('=').ok_or_else(|| Failure::Input(format!("expected GEN=EXPR, found `{spec}`")))?;
            let g = p.set().require(name.trim())?;
            let value = parse_lie_expr(expr, p.set()).map_err(|e| expr_arg("expression", expr, e))?;
            let expected = p.set().degree(g) as i64 - 1;
            match value.degree() {
                Ok(Some(d)) if d as i64 != expected => Err(Error::DegreeMismatch {
                    generator: name.trim().to_string(),
                    expected,
                    found: d as i64,
                }
                .into()),
                Err(e) => Err(e.into()),
                _ => Ok((g, value)),
            }
        })
        .collect()
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Check { file } => {
            let parsed = load(&file)?;
            let mut report = parsed.presentation.validate();
            for g in &mut report.generators {
                g.line = parsed.line_of(&g.name);
            }
            Ok(Report::Validation(report))
        }
        Command::Product { left, right, force, output } => {
            let x = load(&left)?.presentation;
            let y = load(&right)?.presentation;
            let model = match build_product_model(&x, &y) {
                Ok(m) => m,
                Err(Error::ConeLengthExceeded { found, allowed }) if !force => {
                    return Err(Failure::Input(format!(
                        "cone length {found} exceeds {allowed}; rerun with --force to build a candidate model"
                    )))
                }
                Err(Error::ConeLengthExceeded { .. }) => build_candidate_model(&x, &y, &[])?.0,
                Err(e) => return Err(e.into()),
            };
            if let Some(out) = output {
                write(&out, &print_dgl(&model.to_presentation()))?;
            }
            Ok(Report::Model(ModelListing::new(&model)))
        }
        Command::Diagonal { file, output } => {
            let x = load(&file)?.presentation;
            let diagonal = build_diagonal(&x)?;
            if let Some(out) = output {
                write(&out, &print_dgl(&diagonal.product().to_presentation()))?;
            }
            Ok(Report::Diagonal(DiagonalListing::new(&diagonal)))
        }
        Command::Star { left, right, magma, lie } => {
            let v = load(&left)?.presentation;
            let w = load(&right)?.presentation;
            let gens = ProductGenerators::new(&v, &w)?;
            let a = parse_magma_expr(&magma, gens.set()).map_err(|e| expr_arg("magma expression", &magma, e))?;
            let t = parse_lie_expr(&lie, gens.set()).map_err(|e| expr_arg("Lie expression", &lie, e))?;
            let value = gens.star(&a, &t)?;
            Ok(Report::Value(ValueReport {
                operation: "star".into(),
                input: format!("{a}, {t}"),
                value: value.to_string(),
            }))
        }
        Command::Normalize { file, expr } => {
            let p = load(&file)?.presentation;
            let value = parse_lie_expr(&expr, p.set()).map_err(|e| expr_arg("expression", &expr, e))?;
            Ok(Report::Value(ValueReport { operation: "normalize".into(), input: expr, value: value.to_string() }))
        }
        Command::Residual { file, overrides, replacements } => {
            let p = load(&file)?.presentation;
            let mut values: Vec<_> = p.set().gens().map(|g| p.d(g).clone()).collect();
            for (g, v) in edits(&p, &replacements)? {
                values[g.index()] = v;
            }
            for (g, v) in edits(&p, &overrides)? {
                values[g.index()] += v;
            }
            let edited = Dgl::new(p.label(), p.set(), p.set().gens().zip(values))?;
            Ok(Report::Residual(ResidualReport::of_presentation(&edited)))
        }
        Command::Reproduce { target } => Ok(Report::Reproduction(reproduce(&target)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"))
                }
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(message)) => {
            eprintln!("verification failed: {message}");
            ExitCode::from(1)
        }
    }
}
