//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qpvi", version, about = "Exact y-seed dynamics and q-Painleve flows of the generalized q-P_VI quiver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build or mutate exchange matrices.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Apply a group word to a y-seed.
    Act(ActArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Generate orbits of a flow.
    #[command(subcommand)]
    Evolve(EvolveCmd),
    /// Lax-form checks.
    #[command(subcommand)]
    Lax(LaxCmd),
}

#[derive(Subcommand, Debug)]
pub enum QuiverCmd {
    /// The generalized q-P_VI quiver for family parameter `n`.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mutate a quiver read from JSON at the given vertices, rightmost first.
    Mutate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Vertex to mutate at; repeat for a sequence.
        #[arg(long, required = true, num_args = 1..)]
        k: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct ActArgs {
    /// Word such as "s_0 pi^-1 T_2"; the rightmost factor acts first.
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub n: usize,
    /// Seed JSON `{n, y, lambda}`, `{y}` or a bare array of "p/q" strings.
    /// Without it a random seed is drawn from `--seed`.
    #[arg(long)]
    pub y: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Quiver,
    Weyl,
    Translations,
    Tau1,
    Tilde,
    Qluc,
    LaxCompat,
    Garnier,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quiver => "quiver",
            Suite::Weyl => "weyl",
            Suite::Translations => "translations",
            Suite::Tau1 => "tau1",
            Suite::Tilde => "tilde",
            Suite::Qluc => "qluc",
            Suite::LaxCompat => "lax-compat",
            Suite::Garnier => "garnier",
            Suite::All => "all",
        }
    }
}

/// Optional grouping word before the flags, e.g. `verify painleve --suite tau1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Quiver,
    Weyl,
    Translations,
    Painleve,
    Lax,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub group: Option<Group>,
    #[arg(long)]
    pub suite: Option<Suite>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Translation relation families: `all` or a comma-separated list.
    #[arg(long, default_value = "all")]
    pub relations: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum EvolveCmd {
    /// Iterate the q-P_(n+1,n+1) step `t -> q t`.
    Qp(EvolveArgs),
    /// Iterate `tau3` on a y-seed, reporting the root variables.
    Tau3(EvolveArgs),
}

#[derive(Args, Debug)]
pub struct EvolveArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub steps: usize,
    /// Initial state (a Painleve state for `qp`, a seed for `tau3`);
    /// random from `--seed` when absent.
    #[arg(long, alias = "y")]
    pub state: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to csv when `--out` ends in `.csv`, json otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Subcommand, Debug)]
pub enum LaxCmd {
    /// Compatibility of the Lax matrices or the q-Garnier reduction.
    Check(LaxArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LaxWhich {
    Compat,
    Garnier,
}

#[derive(Args, Debug)]
pub struct LaxArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub which: LaxWhich,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the Garnier pair at the state for `--seed` to this file.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}
