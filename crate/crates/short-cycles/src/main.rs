use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use short_cycles::io::{self, Format};
use short_cycles::solvers::{run_query, Outcome, Query};
use short_cycles::{oracle, EmbeddingScheme, Graph};

#[derive(Parser)]
#[command(
    name = "short-cycles",
    version,
    about = "Shortest two-sided, even, odd, and contractible cycles in embedded graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Worker threads for the candidate scan (default: all cores). Any
    /// thread count produces identical output.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Shortest two-sided cycle under the instance's signature.
    Twosided { file: String },
    /// All shortest even cycles.
    Even { file: String },
    /// All shortest odd cycles; only defined when the girth is odd.
    Odd { file: String },
    /// A shortest cycle (its length is the girth).
    Girth { file: String },
    /// Shortest contractible cycle of a projective-planar embedding
    /// (requires rotations).
    Contractible { file: String },
    /// Euler genus, orientability, and face count (requires rotations).
    Genus { file: String },
    /// Cross-check the solvers against brute-force enumeration.
    Verify { file: String },
    /// Generate a random connected instance.
    Gen {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edges beyond the spanning tree.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Probability of a -1 signature per edge.
        #[arg(long, default_value_t = 0.0)]
        neg: f64,
        /// Emit a random rotation system.
        #[arg(long)]
        rot: bool,
        /// Generator seed (decimal).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; real usage errors exit 1
            // because 2 is reserved for certified-empty results
            let is_error = err.use_stderr();
            let _ = err.print();
            return if is_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    let result = match cli.threads {
        None => run_command(cli.command, format),
        Some(k) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool,
                Err(e) => {
                    eprintln!("error: building thread pool: {e}");
                    return ExitCode::from(1);
                }
            };
            pool.install(|| run_command(cli.command, format))
        }
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run_command(cmd: Command, format: Format) -> Result<ExitCode, String> {
    match cmd {
        Command::Twosided { file } => query(&file, format, Query::TwoSided),
        Command::Even { file } => query(&file, format, Query::Even),
        Command::Odd { file } => query(&file, format, Query::Odd),
        Command::Girth { file } => query(&file, format, Query::Girth),
        Command::Contractible { file } => query(&file, format, Query::ContractibleProjective),
        Command::Genus { file } => {
            let (g, s) = load(&file)?;
            let faces = s.trace_faces(&g).map_err(|e| e.to_string())?;
            let surface = s.euler_genus(&g).map_err(|e| e.to_string())?;
            print!("{}", io::serialize_genus(surface, &faces, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file } => {
            let (g, s) = load(&file)?;
            let check = oracle::cross_check(&g, &s).map_err(|e| e.to_string())?;
            print!("{}", io::serialize_verify(&check, format));
            Ok(if check.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen {
            n,
            extra,
            neg,
            rot,
            seed,
        } => {
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            if !(0.0..=1.0).contains(&neg) {
                return Err("--neg must lie in [0, 1]".into());
            }
            let params = oracle::InstanceParams {
                n,
                extra_edges: extra,
                negative_fraction: neg,
                with_rotation: rot,
                seed,
            };
            let (g, s) = oracle::random_instance(&params).map_err(|e| e.to_string())?;
            print!("{}", io::serialize_instance(&g, &s));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn query(file: &str, format: Format, q: Query) -> Result<ExitCode, String> {
    let (g, s) = load(file)?;
    let report = run_query(&g, &s, q).map_err(|e| e.to_string())?;
    let code = match report.outcome {
        Outcome::Found(_) => ExitCode::SUCCESS,
        Outcome::None { .. } => ExitCode::from(2),
    };
    print!("{}", io::serialize_report(&report, format));
    Ok(code)
}

fn load(file: &str) -> Result<(Graph, EmbeddingScheme), String> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(file).map_err(|e| format!("reading {file}: {e}"))?
    };
    let (g, s) = io::parse_instance(&text).map_err(|e| e.to_string())?;
    if !g.is_connected() {
        return Err("the instance graph is not connected".into());
    }
    Ok((g, s))
}
