use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "homlts", version, about = "Verify Hom-Lie structures and build their graded Lie imbeddings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of an algebra file and classify its twist.
    Verify(VerifyArgs),
    /// Build an induced structure from a Lie or Hom-Lie algebra.
    Induce(InduceArgs),
    /// Build the standard or universal imbedding of a regular Hom-LTS.
    Embed(EmbedArgs),
    /// Factor an imbedding through the universal imbedding.
    Factor(FactorArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write the constructed object here as JSON.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    LieToHomlie,
    HomlieToLie,
    LieToHomlts,
}

#[derive(Debug, Args)]
pub struct InduceArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub which: Direction,
    /// Matrix file with the Lie endomorphism; needed when starting from a Lie algebra.
    #[arg(long)]
    pub sigma: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Imbedding {
    Standard,
    Universal,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub which: Imbedding,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// The regular Hom-LTS.
    #[arg(long)]
    pub input: PathBuf,
    /// A Lie algebra file whose `alpha` is the automorphism.
    #[arg(long)]
    pub target: PathBuf,
    /// Matrix file with the imbedding.
    #[arg(long)]
    pub epsilon: PathBuf,
    #[command(flatten)]
    pub common: Common,
}
