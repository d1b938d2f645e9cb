//! Argument definitions and command dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use circgeo_core::rational::{self, Rational};
use circgeo_core::synthesis::{replay, synthesize, verify_representation, Representation, SynthesisConfig};
use circgeo_core::{FiniteLattice, SynthesisError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analyze::{self, closed_set_lattice, AnalyzeOptions};
use crate::enumerate::{self, EnumerateOptions, Scope};
use crate::error::CliError;
use crate::files::{self, DocumentKind};
use crate::render;

#[derive(Debug, Parser)]
#[command(name = "circgeo", version, about = "Convex geometries of circles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Args)]
pub struct ReportFormat {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Same as `--format json`.
    #[arg(long)]
    pub json: bool,
}

impl ReportFormat {
    fn json(&self) -> Result<bool, CliError> {
        match (self.json, self.format) {
            (true, _) | (false, Format::Json) => Ok(true),
            (false, Format::Text) => Ok(false),
            (false, f) => Err(CliError::Usage(
                format!("--format {f:?} is not available for this command").to_lowercase(),
            )),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report on the convex geometry of a circle file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        format: ReportFormat,
        /// Containment tolerance for planar families, as P/Q.
        #[arg(long)]
        tolerance: Option<String>,
        /// Largest family accepted.
        #[arg(long, default_value_t = circgeo_core::closure::DEFAULT_ENUMERATION_BOUND)]
        max_size: usize,
        /// Seed for sampled verification of large families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a collinear circle file whose closed sets form the given lattice.
    Synthesize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Where to write the synthesis trace.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        format: ReportFormat,
    },
    /// Rebuild a circle file from a lattice file and a recorded trace.
    Replay {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Draw a circle file as SVG, or a Hasse diagram as DOT.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Explore random small families within a class of circle geometries.
    Enumerate {
        #[arg(long, value_enum)]
        scope: Scope,
        /// Largest family sampled.
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Number of random families after the built-in witnesses.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        format: ReportFormat,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_tolerance(text: &str) -> Result<Rational, CliError> {
    let t = rational::parse(text).map_err(|e| CliError::Usage(format!("--tolerance: {e}")))?;
    if t < rational::zero() {
        return Err(CliError::Usage("--tolerance must be nonnegative".into()));
    }
    Ok(t)
}

fn synthesis_error(e: SynthesisError) -> CliError {
    match e {
        SynthesisError::Precondition(_) => CliError::Precondition(e.to_string()),
        SynthesisError::Replay(_) => CliError::Parse(e.to_string()),
        other => CliError::Verification(other.to_string()),
    }
}

fn verified(rep: &Representation, l: &FiniteLattice) -> Result<(), CliError> {
    let report = verify_representation(rep, l).map_err(synthesis_error)?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{report:?}")))
    }
}

#[derive(Serialize)]
struct SynthesisSummary {
    circles: usize,
    steps: usize,
    backtracks: usize,
    verified: bool,
}

/// Runs a command and returns what it prints on standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Analyze {
            input,
            format,
            tolerance,
            max_size,
            seed,
        } => {
            let as_json = format.json()?;
            let mut family = files::parse_circle_file(&read(input)?)?;
            if let Some(t) = tolerance {
                family = family.with_tolerance(parse_tolerance(t)?);
            }
            let report = analyze::analyze(
                &family,
                &AnalyzeOptions {
                    max_size: *max_size,
                    seed: *seed,
                },
            )?;
            Ok(if as_json {
                json(&report)
            } else {
                analyze::render_text(&report)
            })
        }
        Command::Synthesize {
            input,
            output,
            trace,
            format,
        } => {
            let as_json = format.json()?;
            let l = files::parse_lattice_file(&read(input)?)?;
            let (rep, tr) = synthesize(&l).map_err(synthesis_error)?;
            verified(&rep, &l)?;
            write(output, &files::emit_circle_file(&rep.family))?;
            if let Some(path) = trace {
                write(path, &files::emit_trace_file(&tr))?;
            }
            let summary = SynthesisSummary {
                circles: rep.family.len(),
                steps: tr.steps.len(),
                backtracks: tr.backtracks,
                verified: true,
            };
            Ok(if as_json {
                json(&summary)
            } else {
                format!(
                    "wrote {} circles ({} insertions, {} backtracks); representation verified\n",
                    summary.circles, summary.steps, summary.backtracks
                )
            })
        }
        Command::Replay { input, trace, output } => {
            let l = files::parse_lattice_file(&read(input)?)?;
            let tr = files::parse_trace_file(&read(trace)?)?;
            let rep = replay(&l, &tr, &SynthesisConfig::default()).map_err(synthesis_error)?;
            verified(&rep, &l)?;
            write(output, &files::emit_circle_file(&rep.family))?;
            Ok(format!(
                "replayed {} insertions; representation verified\n",
                tr.steps.len()
            ))
        }
        Command::Render { input, format, output } => {
            let text = read(input)?;
            let doc = match (files::sniff(&text)?, format) {
                (DocumentKind::Circles, Format::Svg) => render::svg(&files::parse_circle_file(&text)?),
                (DocumentKind::Circles, Format::Dot) => {
                    let family = files::parse_circle_file(&text)?;
                    render::dot(&closed_set_lattice(&family, circgeo_core::set::MAX_MEMBERS)?)
                }
                (DocumentKind::Lattice, Format::Dot) => render::dot(&files::parse_lattice_file(&text)?),
                (DocumentKind::Lattice, Format::Svg) => {
                    return Err(CliError::Usage("svg output needs a circle file".into()))
                }
                (_, f) => {
                    return Err(CliError::Usage(
                        format!("render supports dot and svg, not {f:?}").to_lowercase(),
                    ))
                }
            };
            match output {
                Some(path) => {
                    write(path, &doc)?;
                    Ok(String::new())
                }
                None => Ok(doc),
            }
        }
        Command::Enumerate {
            scope,
            max_size,
            samples,
            seed,
            format,
        } => {
            let as_json = format.json()?;
            let summary = enumerate::enumerate(&EnumerateOptions {
                scope: *scope,
                max_size: *max_size,
                samples: *samples,
                seed: *seed,
            })?;
            Ok(if as_json {
                json(&summary)
            } else {
                enumerate::render_text(&summary)
            })
        }
    }
}
