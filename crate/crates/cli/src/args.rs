//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sdptool", version, about = "Build and check r-fold semidirect products of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Caps {
    /// Largest |G| for checks over three unrestricted operands.
    #[arg(long, default_value_t = 512)]
    pub triple_cap: usize,
    /// Largest domain for the remaining exhaustive loops.
    #[arg(long, default_value_t = 4096)]
    pub pair_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a group file.
    ValidateGroup {
        #[arg(long)]
        group: PathBuf,
    },
    /// Load a system file and report the unit conditions.
    CheckSystem {
        #[arg(long)]
        system: PathBuf,
    },
    /// Write the multiplication table of the product.
    BuildSdp {
        #[arg(long)]
        system: PathBuf,
        /// Output file; the table goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Print the multiplication table of the product.
    Table {
        #[arg(long)]
        system: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Multiply tuples, folding from the left.
    Mul {
        #[arg(long)]
        system: PathBuf,
        /// A tuple as a JSON index list, e.g. `[1,0,2]`. Repeatable.
        #[arg(long = "tuple", required = true)]
        tuples: Vec<String>,
    },
    /// Check associativity conditions.
    CheckAssoc {
        #[arg(long)]
        system: PathBuf,
        /// Only A[k,j,i].
        #[arg(long, value_name = "K,J,I", conflicts_with = "component")]
        condition: Option<String>,
        /// Only the level-l component A[k,j,i;l].
        #[arg(long, value_name = "K,J,I,L")]
        component: Option<String>,
        /// Also check all |G|^3 triples.
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        caps: Caps,
        /// Report wall-clock time.
        #[arg(long)]
        timing: bool,
    },
    /// Generate the componentwise associativity conditions.
    GenAxioms {
        #[arg(long)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Every A[k,j,i;l] with its class, not only the representatives.
        #[arg(long)]
        all: bool,
        /// Compare the representatives against the bundled reference table.
        #[arg(long, conflicts_with = "all")]
        verify_reference: bool,
        /// Systems sampled when adjudicating a mismatching row.
        #[arg(long, default_value_t = 30)]
        systems: u64,
        /// Keep lower-level actions literal instead of reducing them.
        #[arg(long, conflicts_with = "verify_reference")]
        literal: bool,
    },
    /// Decompose a group as an internal product of the given subgroups.
    Decompose {
        #[arg(long)]
        group: PathBuf,
        /// Generators per factor: element indices separated by commas,
        /// factors separated by semicolons, e.g. "1,2;3".
        #[arg(long)]
        factors: String,
        /// Write the extracted system here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Check whether per-factor maps assemble into a homomorphism.
    CheckHom {
        #[arg(long)]
        system: PathBuf,
        /// Target monoid, in the group file layout.
        #[arg(long)]
        target: PathBuf,
        /// `{"maps": [[...], ...]}`, one value table per factor.
        #[arg(long)]
        maps: PathBuf,
        /// Also check all |G|^2 pairs.
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Compare the elementary conditions with exhaustive checks on samples.
    Experiment {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: u64,
        /// Factor orders for the assoc mode, e.g. "2,3,2".
        #[arg(long, default_value = "2,2,2")]
        shape: String,
        #[arg(long, value_enum, default_value_t = ExperimentMode::Assoc)]
        mode: ExperimentMode,
        #[arg(long, value_enum, default_value_t = SamplerKind::Mixed)]
        sampler: SamplerKind,
        /// Probability of an automorphic action or trivial bracket (mixed sampler).
        #[arg(long, default_value_t = 0.7)]
        p: f64,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentMode {
    Assoc,
    Hom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerKind {
    Mixed,
    Uniform,
}
