mod corpus;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use classgraph_core::analysis::AnalysisOptions;
use classgraph_core::block_square::WitnessReading;
use classgraph_core::constructor::{self, ConstructOptions, Construction, Verification, CONGRUENCE_NOTE};
use classgraph_core::report::{analyze, AnalysisReport};
use classgraph_core::spec_file::GroupSpecFile;
use classgraph_core::{Error, ErrorCategory};
use serde::Serialize;

const CAP_ENV: &str = "CLASSGRAPH_CAP";

#[derive(Parser)]
#[command(name = "classgraph", version, about = "Prime graphs on conjugacy class sizes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a group spec file and print a JSON report.
    Analyze {
        spec: PathBuf,
        /// Also write the prime graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Accept block-square witnesses split across two vertices.
        #[arg(long)]
        weak_witness: bool,
    },
    /// Build a group whose prime graph is the admissible block square with
    /// the given block sizes, and verify it.
    Construct {
        #[arg(long, value_name = "M1,M2,M3,M4", value_delimiter = ',', num_args = 1, required = true)]
        blocks: Vec<usize>,
        #[arg(long, value_name = "P,...", value_delimiter = ',')]
        avoid: Vec<u64>,
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
    },
    /// Analyze every `*.json` spec in a directory and print a summary table.
    Corpus { dir: PathBuf },
    /// Print the prime graph of a spec file in DOT format.
    ExportDot { spec: PathBuf },
}

/// A failure with its exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.category() {
            ErrorCategory::Input => 2,
            ErrorCategory::Limit => 3,
            ErrorCategory::Invariant => 4,
            ErrorCategory::BoundExhausted => 5,
        };
        Self { code, message: e.to_string() }
    }
}

fn analysis_options(weak: bool) -> Result<AnalysisOptions, Failure> {
    let mut opts = AnalysisOptions::default();
    if let Ok(v) = std::env::var(CAP_ENV) {
        opts.cap =
            v.trim().parse().map_err(|_| Failure::usage(format!("{CAP_ENV} must be a positive integer, got {v:?}")))?;
        if opts.cap == 0 {
            return Err(Failure::usage(format!("{CAP_ENV} must be positive")));
        }
    }
    if weak {
        opts.reading = WitnessReading::Weak;
    }
    Ok(opts)
}

pub(crate) fn read_spec(path: &Path) -> Result<GroupSpecFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    GroupSpecFile::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn analyze_checked(spec: &GroupSpecFile, opts: &AnalysisOptions) -> Result<AnalysisReport, Failure> {
    Ok(analyze(spec, opts)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn cmd_analyze(spec: &Path, dot: Option<&Path>, weak: bool) -> Result<(), Failure> {
    let opts = analysis_options(weak)?;
    let report = analyze_checked(&read_spec(spec)?, &opts)?;
    print!("{}", report.to_json());
    if let Some(path) = dot {
        write_file(path, &report.graph.export_dot())?;
    }
    let violations = report.violations();
    if !violations.is_empty() {
        return Err(Failure { code: 4, message: violations.join("\n") });
    }
    Ok(())
}

#[derive(Serialize)]
struct PredictionReport<'a> {
    note: &'static str,
    spec_file: String,
    #[serde(flatten)]
    construction: &'a Construction,
    verification: &'a Verification,
}

fn cmd_construct(blocks: &[usize], avoid: &[u64], out: &Path) -> Result<(), Failure> {
    let blocks: [usize; 4] = blocks
        .try_into()
        .map_err(|_| Failure::usage(format!("--blocks needs exactly four sizes, got {}", blocks.len())))?;
    let opts = ConstructOptions { avoid: avoid.iter().copied().collect(), ..Default::default() };
    let analysis = analysis_options(false)?;
    let (construction, verification) = constructor::construct_block_square_group(blocks, &opts, &analysis)?;

    let [m1, m2, m3, m4] = blocks;
    let name = format!("block-square-{m1}-{m2}-{m3}-{m4}");
    let spec = GroupSpecFile::new(name.clone(), construction.expr.clone());
    let spec_file = format!("{name}.json");
    let prediction = PredictionReport {
        note: CONGRUENCE_NOTE,
        spec_file: spec_file.clone(),
        construction: &construction,
        verification: &verification,
    };
    let mut json = serde_json::to_string_pretty(&prediction).expect("prediction serializes");
    json.push('\n');
    fs::create_dir_all(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
    write_file(&out.join(&spec_file), &spec.to_canonical_json())?;
    write_file(&out.join(format!("{name}.prediction.json")), &json)?;
    print!("{json}");
    Ok(())
}

fn cmd_export_dot(spec: &Path) -> Result<(), Failure> {
    let opts = analysis_options(false)?;
    let spec = read_spec(spec)?;
    let group = spec.construct.evaluate_with(opts.eval())?;
    let spectrum = classgraph_core::analysis::spectrum_of(&group, &opts)?;
    print!("{}", classgraph_core::prime_graph::delta_of(&spectrum)?.export_dot());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { spec, dot, weak_witness } => cmd_analyze(&spec, dot.as_deref(), weak_witness),
        Command::Construct { blocks, avoid, out } => cmd_construct(&blocks, &avoid, &out),
        Command::Corpus { dir } => corpus::run(&dir, &analysis_options(false)?),
        Command::ExportDot { spec } => cmd_export_dot(&spec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
