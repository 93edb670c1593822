use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use meg_cli::commands::{self, CliError, Output, VerifyArgs};
use meg_core::solver::{SolverConfig, DEFAULT_BUDGET};

/// Monitoring edge-geodetic sets: exact values, closed forms and edge deletion.
#[derive(Parser)]
#[command(name = "meg", version)]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Master seed for random families and suites
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Trials per suite (default: the suite's own)
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Largest component the exact solver will attempt
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Keep every instance record in suite reports
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum MEG-set with witnesses, plus the class formula when one applies
    Compute { file: PathBuf },
    /// Edges monitored by a vertex pair (all pairs when none is given)
    Monitors {
        file: PathBuf,
        u: Option<usize>,
        v: Option<usize>,
    },
    /// Vertices in every minimum set and vertices in none
    Forced { file: PathBuf },
    /// Delete edges, compare the exact meg with the predicted value or bounds
    Delete {
        file: PathBuf,
        /// Edge as "a b", "a-b" or "a,b"; repeatable
        #[arg(long = "edge", required = true)]
        edges: Vec<String>,
        /// Family tag file (default: FILE.tag.json when present)
        #[arg(long)]
        tag: Option<PathBuf>,
    },
    /// Check every single-edge bound that applies to an edge
    Bounds {
        file: PathBuf,
        #[arg(long)]
        edge: String,
    },
    /// Run a theorem suite, or `all`
    Verify { suite: String },
    /// Build a graph family
    #[command(after_help = commands::FAMILIES)]
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Pad sizes for extremal-tree, comma separated
        #[arg(long, value_delimiter = ',')]
        pads: Vec<usize>,
    },
    /// Suite ids with their theorem and default trial count
    ListSuites,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = SolverConfig::with_budget(cli.budget);
    let name = |p: &PathBuf| p.display().to_string();
    match &cli.command {
        Command::Compute { file } => commands::compute(&commands::load_graph(file)?, cfg),
        Command::Monitors { file, u, v } => {
            let pair = match (u, v) {
                (Some(u), Some(v)) => Some((*u, *v)),
                (None, None) => None,
                _ => return Err(CliError::Usage("give both U and V, or neither".into())),
            };
            commands::monitors(&commands::load_graph(file)?, pair)
        }
        Command::Forced { file } => commands::forced(&commands::load_graph(file)?),
        Command::Delete { file, edges, tag } => {
            let g = commands::load_graph(file)?;
            let edges = edges.iter().map(|e| commands::parse_edge(e)).collect::<Result<Vec<_>, _>>()?;
            let tag = match tag {
                Some(p) => Some(commands::load_tag(p)?),
                None => {
                    let p = commands::tag_path(file);
                    if p.exists() { Some(commands::load_tag(&p)?) } else { None }
                }
            };
            commands::delete(&name(file), &g, &edges, tag.as_ref(), cfg)
        }
        Command::Bounds { file, edge } => {
            let g = commands::load_graph(file)?;
            commands::bounds(&name(file), &g, commands::parse_edge(edge)?, cfg)
        }
        Command::Verify { suite } => commands::verify(
            suite,
            &VerifyArgs {
                seed: cli.seed,
                trials: cli.trials,
                budget: cli.budget,
                verbose: cli.verbose,
            },
        ),
        Command::Generate { family, params, out, pads } => {
            let gg = commands::build_family(family, params, pads, cli.seed)?;
            commands::generate(&gg, out.as_deref())
        }
        Command::ListSuites => Ok(commands::list_suites()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json value"));
            } else {
                print!("{}", out.text);
            }
            if out.violation { ExitCode::from(1) } else { ExitCode::SUCCESS }
        }
        Err(e) => {
            eprintln!("meg: {e}");
            ExitCode::from(2)
        }
    }
}
