use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand, ValueEnum};
use patavoid::verify::Suite;
use patavoid::{PartsFlavor, Pattern};

/// Count and enumerate pattern-avoiding compositions and multiset
/// permutations.
#[derive(Debug, Parser)]
#[command(name = "patavoid", version)]
pub struct Cli {
    /// Emit one JSON record instead of plain text.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV rows instead of plain text.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Omit elapsed time from the output.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Worker threads for the counting engines.
    #[arg(long, global = true, env = "PATAVOID_JOBS")]
    pub jobs: Option<NonZeroUsize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count compositions of n avoiding a pattern.
    Compositions(CompositionsArgs),
    /// Count permutations of a multiset avoiding a pattern.
    Multiset(MultisetArgs),
    /// Avoider counts c(1, k), ..., c(n_max, k) from the generating function.
    Series(SeriesArgs),
    /// The counts of `series` as "n a(n)" lines.
    Bfile(BfileArgs),
    /// Map a multiset permutation to a permutation of a rearranged multiset.
    Bijection(BijectionArgs),
    /// Run one of the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CompositionsArgs {
    #[arg(long)]
    pub n: u32,

    /// `positive` or `nonnegative`.
    #[arg(long, default_value_t = PartsFlavor::Positive)]
    pub flavor: PartsFlavor,

    /// Number of parts; required for nonnegative parts.
    #[arg(long)]
    pub k: Option<usize>,

    #[arg(long)]
    pub max_part: Option<u32>,

    /// Pattern as a digit string, e.g. 132.
    #[arg(
        long,
        required_unless_present = "all_patterns",
        conflicts_with = "all_patterns"
    )]
    pub pattern: Option<Pattern>,

    /// Count all six patterns of length three.
    #[arg(long)]
    pub all_patterns: bool,

    /// Also print the avoiding compositions.
    #[arg(long, conflicts_with_all = ["all_patterns", "csv"])]
    pub list: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Enumerate every permutation.
    Brute,
    /// Read the coefficient off the generating function; 132 only.
    Gf,
}

#[derive(Debug, Args)]
pub struct MultisetArgs {
    /// Multiplicities a_1 a_2 ... a_k.
    #[arg(required = true, num_args = 1..)]
    pub mult: Vec<u32>,

    #[arg(long)]
    pub pattern: Pattern,

    #[arg(long, value_enum, default_value_t = Engine::Brute)]
    pub engine: Engine,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,

    /// Largest allowed part; unbounded when omitted.
    #[arg(long)]
    pub max_part: Option<u32>,
}

#[derive(Debug, Args)]
pub struct BfileArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// Letters of the source word.
    #[arg(required = true, num_args = 1..)]
    pub word: Vec<u32>,

    /// Target multiplicities.
    #[arg(long, required = true, num_args = 1..)]
    pub target: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thm1, thm2, thm3, symmetry, bijection or gf-cross.
    pub suite: Suite,
}
