mod commands;
mod errors;
mod output;

use clap::{ArgGroup, Args, Parser, Subcommand};

/// Exact invariants of coordinate-axes algebras: orbit counts, relative
/// K-groups and topological cyclic homology over perfect fields, and
/// cyclic homology over characteristic-zero bases. Results are printed
/// as canonical JSON on stdout; errors go to stderr with exit code 1.
#[derive(Parser)]
#[command(name = "axesk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count aperiodic orbits of cyclic words with no equal neighbours.
    Cyc(CycArgs),
    /// Relative K-group of the coordinate axes in one degree.
    K(KArgs),
    /// Relative topological cyclic homology in one degree.
    Tc(TcArgs),
    /// Periodic and half-periodic tables of a single word orbit.
    Summand(SummandArgs),
    /// Homology of the cyclic bar construction on one word orbit.
    Homology(HomologyArgs),
    /// Relative or birelative cyclic homology over a rational base.
    Hc(HcArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["s", "table"])))]
struct CycArgs {
    /// Number of axes (alphabet size).
    #[arg(long)]
    d: u64,
    /// Single period to count.
    #[arg(long)]
    s: Option<u64>,
    /// Emit one row per period from 1 up to this bound.
    #[arg(long)]
    table: Option<u64>,
    /// Recount by exhaustive enumeration and cross-check the formula.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct KArgs {
    /// Field characteristic; 0 selects the characteristic-zero route.
    #[arg(long)]
    p: u64,
    /// Number of axes.
    #[arg(long)]
    d: u64,
    /// Homological degree.
    #[arg(long)]
    q: u64,
    /// Finite field F_{p^n}; omit for a symbolic perfect field.
    #[arg(long)]
    n: Option<u32>,
    /// Transcendence degree of the base field (characteristic zero only).
    #[arg(long)]
    trdeg: Option<u64>,
}

#[derive(Args)]
struct TcArgs {
    /// Field characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Number of axes.
    #[arg(long)]
    d: u64,
    /// Homological degree.
    #[arg(long)]
    q: u64,
    /// Finite field F_{p^n}; omit for a symbolic perfect field.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("table").required(true).args(["tp", "tcminus"])))]
struct SummandArgs {
    /// Orbit length (the word length m).
    #[arg(long)]
    m: u64,
    /// Orbit period (s divides m).
    #[arg(long)]
    s: u64,
    /// Field characteristic (prime).
    #[arg(long)]
    p: u64,
    /// Finite field F_{p^n}; omit for a symbolic perfect field.
    #[arg(long)]
    n: Option<u32>,
    /// Fully periodic table of the orbit.
    #[arg(long)]
    tp: bool,
    /// Half-periodic table of the orbit.
    #[arg(long)]
    tcminus: bool,
    /// Degree to read the table at.
    #[arg(long)]
    degree: u64,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["word", "m"])))]
struct HomologyArgs {
    /// Concrete word such as x1x2x3; runs the matrix oracle as well.
    #[arg(long, conflicts_with = "s")]
    word: Option<String>,
    /// Orbit length for the closed form alone.
    #[arg(long, requires = "s")]
    m: Option<u64>,
    /// Orbit period for the closed form alone.
    #[arg(long, requires = "m")]
    s: Option<u64>,
    /// Coefficient field characteristic; omit for integral coefficients.
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("variant").required(true).args(["trdeg", "birelative"])))]
struct HcArgs {
    /// Homological degree.
    #[arg(long)]
    q: u64,
    /// Number of axes.
    #[arg(long)]
    d: u64,
    /// Relative groups over an ind-smooth base of this transcendence degree.
    #[arg(long)]
    trdeg: Option<u64>,
    /// Birelative groups with symbolic Hochschild coefficients.
    #[arg(long)]
    birelative: bool,
}

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match commands::run(cli.command, argv) {
        Ok(document) => println!("{}", output::render_document(&document)),
        Err(error) => {
            eprintln!("{}", output::render_error(&error));
            std::process::exit(1);
        }
    }
}
