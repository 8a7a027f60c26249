use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use gcsets::generators::{cg_with_prescribed_2node_lines, principal_lattice, random_carnicer_gasca, random_chung_yao};
use gcsets::harness::{count_failures, run_suite, Suite, TargetSpec};
use gcsets::io::{
    analysis_summary, fundpoly_summary, parse_nodeset, render_svg, serialize_nodeset, serialize_report,
    triplets_summary, LoadedSet, NodeSetDocument, SvgOptions,
};

#[derive(Parser)]
#[command(name = "gcsets", version, about = "Exact analysis of bivariate interpolation node sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a node set and write it as JSON.
    Generate(GenerateArgs),
    /// Census, maximal lines, classification and per-node usage.
    Analyze { file: PathBuf },
    /// Fundamental polynomial of one node.
    Fundpoly {
        file: PathBuf,
        #[arg(long)]
        node: usize,
        /// Also print the factorization into census lines.
        #[arg(long)]
        factor: bool,
    },
    /// Special triplets of the set.
    Triplets {
        file: PathBuf,
        /// Only triplets containing this node.
        #[arg(long, conflicts_with = "all")]
        node: Option<usize>,
        /// All triplets (the default).
        #[arg(long)]
        all: bool,
    },
    /// Check structural claims; exit status 1 when any claim fails.
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Draw the set and its lines as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Draw lines through at least this many nodes.
        #[arg(long, default_value_t = 3)]
        min_k: usize,
        /// Highlight a node and the used 2-node lines through it.
        #[arg(long)]
        highlight: Option<usize>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    ChungYao,
    CarnicerGasca,
    Principal,
    CgPrescribed,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn load(path: &Path) -> Result<LoadedSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let loaded = parse_nodeset(&text).with_context(|| format!("parsing {}", path.display()))?;
    for w in &loaded.warnings {
        eprintln!("warning: {w}");
    }
    Ok(loaded)
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let (set, distinguished) = match args.kind {
        Kind::ChungYao => (random_chung_yao(args.degree, args.seed)?, None),
        Kind::CarnicerGasca => (random_carnicer_gasca(args.degree, args.seed)?, None),
        Kind::Principal => (principal_lattice(args.degree)?, None),
        Kind::CgPrescribed => {
            let (set, b) = cg_with_prescribed_2node_lines(args.degree, args.seed)?;
            (set, Some(b))
        }
    };
    let doc = NodeSetDocument::from_set(&set).with_distinguished(distinguished);
    fs::write(&args.output, serialize_nodeset(&doc)).with_context(|| format!("writing {}", args.output.display()))?;
    Ok(())
}

/// Runs a command, returning the process exit code on success.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate(args) => generate(&args)?,
        Command::Analyze { file } => {
            let loaded = load(&file)?;
            print!("{}", analysis_summary(&loaded.set));
            if let Some(b) = loaded.document.distinguished {
                println!("distinguished: #{b} {}", loaded.set.node(b));
            }
        }
        Command::Fundpoly { file, node, factor } => print!("{}", fundpoly_summary(&load(&file)?.set, node, factor)?),
        Command::Triplets { file, node, .. } => print!("{}", triplets_summary(&load(&file)?.set, node)?),
        Command::Verify { file, suite, seed } => {
            let loaded = load(&file)?;
            let name = file.file_name().map_or_else(|| file.display().to_string(), |n| n.to_string_lossy().into_owned());
            let target = TargetSpec::Supplied { name, set: loaded.set, distinguished: loaded.document.distinguished };
            let reports = run_suite(&[target], &suite.families(), seed);
            print!("{}", serialize_report(&reports));
            return Ok(if count_failures(&reports) > 0 { 1 } else { 0 });
        }
        Command::Render { file, output, min_k, highlight } => {
            let loaded = load(&file)?;
            if let Some(h) = highlight {
                loaded.set.check_index(h)?;
            }
            let options = SvgOptions { min_k, highlight: highlight.or(loaded.document.distinguished) };
            fs::write(&output, render_svg(&loaded.set, &options)).with_context(|| format!("writing {}", output.display()))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
