mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crossing_ledger::audit::{density_report, AuditK};
use crossing_ledger::drawing::{DrawingSpec, PlanarizedMap};
use crossing_ledger::generator::{generate_optimal_with, GeneratorOptions};
use crossing_ledger::io::{emit, parse_str, section, to_dot, to_svg, ReportDocument};
use crossing_ledger::segments::{decompose, face_profiles};
use crossing_ledger::skeleton::{extract_skeleton, SkeletonDecomposition, SkeletonMode};
use crossing_ledger::validate::{check_homotopy, check_k_planar, check_sanity, ValidationReport};
use crossing_ledger::Exact;

#[derive(Parser, Debug)]
#[command(name = "crossing-ledger", version, about = "Validate, decompose and audit k-planar drawings")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Greedy,
}

impl From<Mode> for SkeletonMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => SkeletonMode::Exact,
            Mode::Greedy => SkeletonMode::Greedy,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Figure {
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a drawing with 11n/2 - 11 edges that is 3-planar.
    Generate {
        #[arg(long)]
        n: usize,
        /// Also require n - 2 to be divisible by 4.
        #[arg(long)]
        strict_paper: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check k-planarity, crossing sanity and non-homotopy of parallel edges.
    Validate {
        #[arg(long)]
        k: usize,
        /// Input drawing; stdin when absent or `-`.
        file: Option<PathBuf>,
    },
    /// Extract the planar skeleton and cut residual edges into pieces.
    Analyze {
        #[arg(long)]
        skeleton: bool,
        #[arg(long)]
        segments: bool,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        file: Option<PathBuf>,
    },
    /// Run the density ledger and structural checks.
    Audit {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
        k: u8,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        file: Option<PathBuf>,
    },
    /// Draw the planarization as Graphviz or SVG.
    Export {
        #[arg(long, value_enum)]
        to: Figure,
        #[arg(long)]
        outer_face: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        file: Option<PathBuf>,
    },
}

const OK: u8 = 0;
const USAGE: u8 = 1;
const VIOLATION: u8 = 2;

/// A failure that ends the run with exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<DrawingSpec, Failure> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_str(&text)?)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text)?,
        _ => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn validation(map: &PlanarizedMap, k: usize) -> ValidationReport {
    let mut report = check_k_planar(map, k).merge(check_sanity(map));
    match check_homotopy(map) {
        Ok(h) => report = report.merge(h),
        Err(e) => report.warnings.push(format!("homotopy check skipped: {e}")),
    }
    report
}

fn skeleton_section(dec: &SkeletonDecomposition<'_>) -> serde_json::Value {
    let faces: Vec<Vec<&str>> = dec.faces().iter().map(|f| dec.skeleton.face_node_ids(f.id)).collect();
    json!({
        "mode": dec.mode,
        "optimal": dec.optimal,
        "kept": dec.kept,
        "residual": dec.residual,
        "conflicts": dec.conflicts.conflict_count(),
        "connected": dec.is_connected(),
        "triangulated": dec.is_triangulated(),
        "faces": faces,
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let json_out = cli.format == Format::Json;
    match cli.command {
        Command::Generate { n, strict_paper, output } => {
            let spec = generate_optimal_with(n, GeneratorOptions::from_env(strict_paper))?;
            write_output(output.as_ref(), &emit(&spec))?;
            Ok(OK)
        }
        Command::Validate { k, file } => {
            let spec = read_input(file.as_ref())?;
            let map = PlanarizedMap::build(&spec)?;
            let report = validation(&map, k);
            if json_out {
                let mut doc = ReportDocument::new(spec);
                doc.validation = Some(section(&report));
                print!("{}", doc.to_json());
            } else {
                print!("{}", render::validation(&report));
            }
            Ok(if report.is_valid() { OK } else { VIOLATION })
        }
        Command::Analyze { skeleton, segments, mode, file } => {
            let spec = read_input(file.as_ref())?;
            let map = PlanarizedMap::build(&spec)?;
            let (want_skeleton, want_segments) = if skeleton || segments { (skeleton, segments) } else { (true, true) };
            let dec = extract_skeleton(&map, mode.into())?;
            let seg = if want_segments { Some(decompose(&dec)?) } else { None };
            let profiles = seg.as_ref().map(|s| face_profiles(&dec, s));
            if json_out {
                let mut doc = ReportDocument::new(spec);
                doc.skeleton = Some(skeleton_section(&dec));
                if let (Some(s), Some(p)) = (&seg, &profiles) {
                    doc.segments = Some(json!({ "pieces": s.pieces, "profiles": p, "warnings": s.warnings }));
                }
                print!("{}", doc.to_json());
            } else {
                let mut out = String::new();
                if want_skeleton || want_segments {
                    out.push_str(&render::skeleton(&dec));
                }
                if let (Some(s), Some(p)) = (&seg, &profiles) {
                    out.push_str(&render::segments(&dec, s, p));
                }
                print!("{out}");
            }
            Ok(OK)
        }
        Command::Audit { k, mode, file } => {
            let spec = read_input(file.as_ref())?;
            let map = PlanarizedMap::build(&spec)?;
            let k = AuditK::from_k(usize::from(k)).expect("clap restricts k");
            let valid = validation(&map, k.k());
            let dec = extract_skeleton(&map, mode.into())?;
            let seg = decompose(&dec)?;
            let profiles = face_profiles(&dec, &seg);
            let report = density_report::<Exact>(&dec, &seg, &profiles, k)?;
            let violation = !valid.is_valid() || report.is_violation();
            if json_out {
                let mut doc = ReportDocument::new(spec);
                doc.validation = Some(section(&valid));
                doc.skeleton = Some(skeleton_section(&dec));
                doc.segments = Some(json!({ "pieces": seg.pieces, "profiles": profiles, "warnings": seg.warnings }));
                doc.audit = Some(section(&report));
                print!("{}", doc.to_json());
            } else {
                print!("{}{}", render::validation(&valid), render::audit(&report));
            }
            Ok(if violation { VIOLATION } else { OK })
        }
        Command::Export { to, outer_face, output, file } => {
            let spec = read_input(file.as_ref())?;
            let map = PlanarizedMap::build(&spec)?;
            let hint = outer_face.or(spec.outer_face_hint);
            let text = match to {
                Figure::Dot => to_dot(&map),
                Figure::Svg => to_svg(&map, hint)?,
            };
            write_output(output.as_ref(), &text)?;
            Ok(OK)
        }
    }
}
