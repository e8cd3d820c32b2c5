use std::fs;
use std::io::Write;
use std::path::PathBuf;

use cgspec_core::invariants::{
    full_report, ReportOptions, DEFAULT_EXHAUSTIVE_CAP, MAX_EXHAUSTIVE_CAP,
};
use cgspec_core::spectrum::{analyze_spectrum, DEFAULT_TOLERANCE};
use cgspec_core::CommutingGraph;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::input::{load, GroupSource};
use crate::render;
use crate::verify::run_verify;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "cgspec",
    version,
    about = "Laplacian spectra and graph invariants of commuting graphs of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form spectrum (or certificates) checked against a numeric solver.
    Spectrum(GroupArgs),
    /// Every graph invariant with its formula value, bounds and status.
    Invariants(GroupArgs),
    /// The commuting graph as JSON, DOT or an adjacency list.
    Export(GroupArgs),
    /// Run the built-in checklist over the catalog.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Catalog spec, e.g. `dihedral:8`, `symmetric:4`, `product:cyclic:2xsymmetric:3`.
    #[arg(long, value_name = "SPEC")]
    pub catalog: Option<String>,
    /// JSON file `{"names": [...], "table": [[...]]}` with 0-based entries.
    #[arg(long, value_name = "PATH")]
    pub cayley: Option<PathBuf>,
    /// Permutation generators in 1-based cycle notation, as a JSON array or one per line.
    #[arg(long, value_name = "PATH")]
    pub generators: Option<PathBuf>,
}

impl SourceArgs {
    pub fn source(&self) -> GroupSource {
        match (&self.catalog, &self.cayley, &self.generators) {
            (Some(spec), _, _) => GroupSource::Catalog(spec.clone()),
            (_, Some(path), _) => GroupSource::Cayley(path.clone()),
            (_, _, Some(path)) => GroupSource::Generators(path.clone()),
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Largest vertex count for exhaustive searches.
    #[arg(long, env = "CGSPEC_CAP", default_value_t = DEFAULT_EXHAUSTIVE_CAP, value_parser = parse_cap)]
    pub cap: usize,
    /// Off-diagonal tolerance of the numeric eigensolver.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tol)]
    pub tol: f64,
    /// Isoperimetric number over `2|S| < n` instead of `|S| ≤ ⌊n/2⌋`.
    #[arg(long)]
    pub iso_strict: bool,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Add a spurious edge to one graph; the run must then fail.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|e| format!("{e}"))?;
    if cap > MAX_EXHAUSTIVE_CAP {
        return Err(format!("cap must be at most {MAX_EXHAUSTIVE_CAP}"));
    }
    Ok(cap)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err("tolerance must be positive".into());
    }
    Ok(tol)
}

fn emit(common: &CommonArgs, text: String) -> Result<(), CliError> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn json_text(j: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(j).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn no_dot(command: &str) -> CliError {
    CliError::Usage(format!(
        "--format dot is only available for export, not {command}"
    ))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum(args) => {
            let g = load(&args.source.source())?;
            let a = analyze_spectrum(&g, &CommutingGraph::build(&g), args.common.tol);
            let text = match args.common.format {
                Format::Json => json_text(&render::spectrum_json(&g, &a)),
                Format::Text => render::spectrum_text(&g, &a),
                Format::Dot => return Err(no_dot("spectrum")),
            };
            emit(&args.common, text)
        }
        Command::Invariants(args) => {
            let g = load(&args.source.source())?;
            let options = ReportOptions {
                cap: args.common.cap,
                strict_iso: args.common.iso_strict,
                tolerance: args.common.tol,
            };
            let report = full_report(&g, options);
            let text = match args.common.format {
                Format::Json => json_text(&render::invariants_json(&g, &report)),
                Format::Text => render::invariants_text(&g, &report),
                Format::Dot => return Err(no_dot("invariants")),
            };
            emit(&args.common, text)
        }
        Command::Export(args) => {
            let g = load(&args.source.source())?;
            let graph = CommutingGraph::build(&g);
            let text = match args.common.format {
                Format::Json => json_text(&render::graph_json(&graph)),
                Format::Text => render::graph_text(&graph),
                Format::Dot => render::graph_dot(&graph),
            };
            emit(&args.common, text)
        }
        Command::Verify(args) => {
            let summary = run_verify(args.common.cap, args.common.tol, args.inject_fault);
            let text = match args.common.format {
                Format::Json => json_text(&summary.to_json()),
                Format::Text => summary.to_text(),
                Format::Dot => return Err(no_dot("verify")),
            };
            emit(&args.common, text)?;
            let failed: Vec<&str> = summary.failed().iter().map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::VerifyFailed(failed.join("; ")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn exactly_one_source() {
        assert!(Cli::try_parse_from(["cgspec", "spectrum"]).is_err());
        assert!(Cli::try_parse_from([
            "cgspec",
            "spectrum",
            "--catalog",
            "cyclic:3",
            "--cayley",
            "t.json"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["cgspec", "spectrum", "--catalog", "cyclic:3"]).is_ok());
    }

    #[test]
    fn cap_and_tolerance_are_validated() {
        assert!(Cli::try_parse_from(["cgspec", "verify", "--cap", "25"]).is_err());
        assert!(Cli::try_parse_from(["cgspec", "verify", "--cap", "24"]).is_ok());
        assert!(Cli::try_parse_from(["cgspec", "verify", "--tol", "0"]).is_err());
        assert!(Cli::try_parse_from(["cgspec", "verify", "--tol", "-1e-9"]).is_err());
    }
}
