use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pitelescope::FamilyId;

#[derive(Parser, Debug)]
#[command(name = "pitelescope", version, about = "Telescoping series for powers of π: catalog, evaluation, verification")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Richardson,
    Direct,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog entries with their identities.
    List {
        #[arg(long)]
        family: Option<FamilyId>,
    },
    /// Show one entry in detail.
    Show { id: String },
    /// Verify catalog entries numerically against their printed values.
    Verify {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=2000))]
        digits: u32,
        /// Absolute tolerance 10^-T; defaults to the digit count.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        tolerance_exp: Option<u32>,
    },
    /// Evaluate a series given by its parameters.
    Eval {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        m: Option<usize>,
        /// Repeat once per variable, or give once to use for all.
        #[arg(long, required = true)]
        x: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        q: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        r: Vec<i64>,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=2000))]
        digits: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Richardson)]
        method: MethodArg,
        /// Terms for the direct method.
        #[arg(long, default_value_t = 100_000)]
        terms: u64,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long, default_value_t = 16)]
        base: u64,
    },
    /// Compute π through one catalog identity.
    Pi {
        #[arg(long)]
        via: String,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..=2000))]
        digits: u32,
    },
    /// Write entries as LaTeX or JSON.
    Emit {
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
