use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcg_cli::report::{write_jsonl, write_summary, write_table};
use pcg_cli::{exit, exit_code_for, run_claim, Budgets, Claim, ParamRange, Summary, Verdict};
use pcg_core::closedforms::{
    clique_number, decomposition_catalog, is_hamiltonian, vertex_degree, Catalog,
};
use pcg_core::oracles::{DEFAULT_CLIQUE_BUDGET, DEFAULT_HAM_BUDGET};
use pcg_core::theta::{to_dot, ThetaExport};
use pcg_core::{build_theta_with_cap, Error, Family, GroupElement, GroupSpec, DEFAULT_VERTEX_CAP};

/// Prime coprime graphs of cyclic, dihedral and dicyclic groups.
#[derive(Parser)]
#[command(name = "pcg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph of a group and export it as DOT or JSON.
    Theta {
        family: Family,
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: u64,
    },
    /// Print a closed-form answer.
    Query {
        #[command(subcommand)]
        query: Query,
    },
    /// Check a claim against its brute-force oracle over a parameter range.
    #[command(after_help = claim_help())]
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Query {
    /// Clique number.
    Clique { family: Family, n: u64 },
    /// Degree of one element, given by its label (g5, r2, s0, a7, a3b).
    Degree {
        family: Family,
        n: u64,
        element: String,
    },
    /// Whether the graph is Hamiltonian.
    Hamiltonian { family: Family, n: u64 },
    /// H-join decomposition, or "not covered".
    Decompose { family: Family, n: u64 },
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id, see below.
    claim: String,
    /// Inclusive range A..B over n, or A..B-by-group-order over |G|.
    range: String,
    /// Restrict multi-family claims to one family.
    #[arg(long)]
    family: Option<Family>,
    /// JSON-lines report path.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CLIQUE_BUDGET)]
    clique_budget: u64,
    #[arg(long, default_value_t = DEFAULT_HAM_BUDGET)]
    ham_budget: u64,
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: u64,
    /// Worker threads; 0 uses one per core.
    #[arg(short, long, default_value_t = 0)]
    jobs: usize,
    /// Record elapsed milliseconds (reports are no longer byte-stable).
    #[arg(long)]
    timings: bool,
    /// Print every record instead of only the non-passing ones.
    #[arg(short, long)]
    verbose: bool,
}

fn claim_help() -> String {
    format!("Claims:\n  {}", Claim::ids().join("\n  "))
}

enum Failure {
    Core(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(exit::USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Theta {
            family,
            n,
            format,
            output,
            vertex_cap,
        } => {
            let group = GroupSpec::new(family, n)?;
            let graph = build_theta_with_cap(&group, vertex_cap)?;
            let text = match format {
                Format::Dot => to_dot(&graph),
                Format::Json => ThetaExport::new(&group, &graph).to_json() + "\n",
            };
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => io::stdout().write_all(text.as_bytes())?,
            }
            Ok(exit::PASS)
        }
        Command::Query { query } => {
            println!("{}", answer(query)?);
            Ok(exit::PASS)
        }
        Command::Verify(args) => verify(args),
    }
}

fn answer(query: Query) -> Result<String, Failure> {
    Ok(match query {
        Query::Clique { family, n } => clique_number(&GroupSpec::new(family, n)?)?.to_string(),
        Query::Degree { family, n, element } => {
            let group = GroupSpec::new(family, n)?;
            let x: GroupElement = element.parse()?;
            if !group.contains(x) {
                return Err(Error::ElementOutOfRange {
                    element,
                    group: group.to_string(),
                }
                .into());
            }
            vertex_degree(&group, x)?.to_string()
        }
        Query::Hamiltonian { family, n } => is_hamiltonian(&GroupSpec::new(family, n)?).to_string(),
        Query::Decompose { family, n } => match decomposition_catalog(family, n)? {
            Catalog::NotCovered => "not covered".to_string(),
            Catalog::Covered(entry) => {
                let spec = entry.spec();
                let parts: Vec<String> = spec.parts().iter().map(ToString::to_string).collect();
                let edges: Vec<String> = spec
                    .pattern()
                    .edges()
                    .map(|(u, v)| format!("{}{}", u + 1, v + 1))
                    .collect();
                let (k, l) = entry.kl();
                format!(
                    "pattern: {}\nparts: {}\nedges: {}\n(k, l): ({k}, {l})",
                    entry.pattern().notation(),
                    parts.join(", "),
                    edges.join(" ")
                )
            }
        },
    })
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let claim: Claim = args.claim.parse()?;
    let range: ParamRange = args.range.parse()?;
    let budgets = Budgets {
        clique: args.clique_budget,
        ham: args.ham_budget,
        vertex_cap: args.vertex_cap,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let records = pool.install(|| run_claim(claim, &range, args.family, &budgets, args.timings))?;

    if let Some(path) = &args.report {
        write_jsonl(BufWriter::new(File::create(path)?), &records)?;
    }
    let summary = Summary::of(&records);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let shown: Vec<_> = if args.verbose {
        records.clone()
    } else {
        records
            .iter()
            .filter(|r| r.verdict != Verdict::Pass)
            .cloned()
            .collect()
    };
    if !shown.is_empty() {
        write_table(&mut out, &shown)?;
        writeln!(out)?;
    }
    write_summary(&mut out, &summary)?;
    writeln!(out, "{} records over {range}", records.len())?;
    Ok(summary.exit_code())
}
