mod family;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use closeness_core::bounds::{GraphParameters, Measure};
use closeness_core::harness::bench::{fastpath_benchmark, BenchFamily};
use closeness_core::harness::{run_suite, CheckId, CorpusConfig, Family, SuiteConfig};
use closeness_core::invariants::default_alpha_grid;
use closeness_core::io::{GraphDocument, GraphFormat, GraphSource};
use closeness_core::{distance_summary, Alpha, InvariantSet};
use serde_json::Value;

use family::FamilyRequest;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unparseable input or invalid parameters.
    Usage(String),
    /// Input parsed but violates the command's precondition.
    Precondition(String),
    /// A verification or benchmark run found disagreements.
    Failed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<closeness_core::Error> for CliError {
    fn from(e: closeness_core::Error) -> Self {
        match e {
            closeness_core::Error::Disconnected => CliError::Precondition(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "closeness",
    version,
    about = "Closeness, generalized closeness and degree-based bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of a named graph family.
    Generate(GenerateArgs),
    /// Compute every invariant of a graph as JSON.
    Compute(ComputeArgs),
    /// Evaluate every applicable bound against the exact value.
    Bounds(BoundsArgs),
    /// Run the verification suite over the corpus.
    Verify(VerifyArgs),
    /// Time the degree formulas against the BFS sweep.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// path, cycle, complete, star, bistar, tnd, petersen, pentagon or random.
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Pendant counts r_1,...,r_D for bistar and tnd.
    #[arg(long, value_delimiter = ',')]
    r: Option<Vec<usize>>,
    /// Non-tree edges for random.
    #[arg(long)]
    extra: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "graph6", value_parser = parse_format)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    input: Option<String>,
    /// Input format; sniffed when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<GraphFormat>,
    /// Inline family spec instead of a file, e.g. `tnd:5,0,0,0`.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha)]
    alpha: Option<Vec<Alpha>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha)]
    alpha: Option<Vec<Alpha>>,
    /// Relative tolerance used for the `holds` and `attained` fields.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 8)]
    trees_max_n: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    random_count: usize,
    #[arg(long, default_value_t = 6)]
    tnd_max_branches: usize,
    #[arg(long, default_value_t = 12)]
    tnd_max_pendants: usize,
    #[arg(long, default_value_t = 64)]
    path_max_n: usize,
    /// Corpus families to include; all when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_corpus_family)]
    families: Option<Vec<Family>>,
    /// Checks to run; all when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    checks: Option<Vec<CheckId>>,
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha)]
    alpha: Option<Vec<Alpha>>,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_parser = parse_bench_family)]
    family: BenchFamily,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repetitions: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: closeness_core::Error| e.to_string())
}

fn parse_alpha(s: &str) -> Result<Alpha, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    Alpha::new(x).map_err(|e| e.to_string())
}

fn parse_check(s: &str) -> Result<CheckId, String> {
    s.trim()
        .parse()
        .map_err(|e: closeness_core::Error| e.to_string())
}

fn parse_corpus_family(s: &str) -> Result<Family, String> {
    s.trim()
        .parse()
        .map_err(|e: closeness_core::Error| e.to_string())
}

fn parse_bench_family(s: &str) -> Result<BenchFamily, String> {
    s.trim()
        .parse()
        .map_err(|e: closeness_core::Error| e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}"))),
    }
}

fn emit_json(value: &Value, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit(&text, out)
}

fn load(args: &InputArgs) -> Result<GraphDocument, CliError> {
    if let Some(spec) = &args.family {
        let generated = FamilyRequest::parse_spec(spec)?.build()?;
        return Ok(GraphDocument {
            source: GraphSource::Family(spec.clone()),
            format: GraphFormat::Graph6,
            graph: generated.graph,
            label: generated.label,
            vertex_labels: None,
        });
    }
    let (text, source, label) = match args.input.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            (text, GraphSource::Stdin, "stdin".to_string())
        }
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
            (text, GraphSource::File(path.to_string()), path.to_string())
        }
    };
    Ok(GraphDocument::parse(&text, args.format, source, label)?)
}

fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let request = FamilyRequest {
        family: args.family,
        n: args.n,
        r: args.r,
        extra: args.extra,
        seed: args.seed,
    };
    let generated = request.build()?;
    if generated.canonicalized {
        eprintln!("note: r sorted into non-increasing order");
    }
    let doc = GraphDocument {
        source: GraphSource::Family(request.family),
        format: args.format,
        graph: generated.graph,
        label: generated.label,
        vertex_labels: None,
    };
    emit(&doc.write(args.format)?, args.out.as_ref())
}

fn compute(args: ComputeArgs) -> Result<(), CliError> {
    let doc = load(&args.input)?;
    let alphas = args.alpha.unwrap_or_else(default_alpha_grid);
    let inv = InvariantSet::compute(&doc.graph, &alphas);
    emit_json(&render::invariants(&doc, &inv), args.out.as_ref())
}

fn bounds(args: BoundsArgs) -> Result<(), CliError> {
    let doc = load(&args.input)?;
    let summary = distance_summary(&doc.graph);
    let params = GraphParameters::with_summary(&doc.graph, &summary)?;
    let alphas = args.alpha.unwrap_or_else(default_alpha_grid);
    let mut measures = Vec::with_capacity(alphas.len() + 1);
    for a in alphas {
        let m = Measure::Generalized(a);
        measures.push((m, params.reports(m)?));
    }
    measures.push((Measure::Closeness, params.reports(Measure::Closeness)?));
    let value = render::bounds(&doc, &params, &summary, &measures, args.tolerance);
    emit_json(&value, args.out.as_ref())
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let defaults = CorpusConfig::default();
    let config = SuiteConfig {
        corpus: CorpusConfig {
            families: args.families.unwrap_or(defaults.families),
            max_n: args.max_n,
            trees_max_n: args.trees_max_n,
            tnd_max_branches: args.tnd_max_branches,
            tnd_max_pendants: args.tnd_max_pendants,
            path_max_n: args.path_max_n,
            random_count: args.random_count,
            seed: args.seed,
        },
        alpha_grid: args.alpha.unwrap_or_else(default_alpha_grid),
        tolerance: args.tolerance,
        checks: args.checks.unwrap_or_default(),
    };
    let report = run_suite(&config)?;
    emit_json(&report.to_json(), args.out.as_ref())?;
    if report.total_failures() > 0 {
        Err(CliError::Failed)
    } else {
        Ok(())
    }
}

fn bench(args: BenchArgs) -> Result<(), CliError> {
    let rows = fastpath_benchmark(args.family, &args.sizes, args.repetitions)?;
    emit_json(&render::bench(&rows), args.out.as_ref())?;
    if rows.iter().all(|r| r.values_equal) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Compute(a) => compute(a),
        Command::Bounds(a) => bounds(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Precondition(msg) => eprintln!("error: {msg}"),
                CliError::Failed => eprintln!("error: verification failed"),
            }
            ExitCode::from(e.code())
        }
    }
}
