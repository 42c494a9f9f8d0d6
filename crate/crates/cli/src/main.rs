//! `moncat`: load categories, functors and backend data from JSON, run the
//! law checks and constructions, and print reports.
//!
//! Exit status is 0 when every report passes, 1 when a check fails or a
//! construction is refused, and 2 when the input cannot be read.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "moncat", version, about = "Exact checks for monoidal categories")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub caps: Caps,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct Caps {
    /// Largest table or scope a verb may build.
    #[arg(long, env = "MONCAT_SCOPE_CAP", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub scope_cap: Option<u64>,

    /// Dimensions 1..=max-dim form the finvect and loop scopes.
    #[arg(long, default_value_t = 2, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: u64,

    /// Circle counts 0..=max-circles form the cobordism scope.
    #[arg(long, default_value_t = 2, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_circles: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a category, functor or base file.
    #[command(subcommand)]
    Validate(Validate),
    /// Run law checks.
    #[command(subcommand)]
    Check(Check),
    /// Build an induced tensor and write it out as a monoidal file.
    #[command(subcommand)]
    Induce(Induce),
    /// Trace of an endomorphism through the canonical duality.
    #[command(subcommand)]
    Trace(Trace),
    /// Operations on cobordism classes.
    #[command(subcommand)]
    Cob(Cob),
    /// Transport duality data along a lax monoidal functor.
    TransferDual(TransferDual),
}

#[derive(Debug, Subcommand)]
pub enum Validate {
    Category { file: PathBuf },
    Functor { file: PathBuf },
    Base { file: PathBuf },
}

/// A backend with a built-in structure, or a monoidal file.
#[derive(Clone, Debug, Args)]
pub struct Carrier {
    /// Monoidal file.
    #[arg(required_unless_present = "backend")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with = "file")]
    pub backend: Option<Backend>,
    /// Fourier mode cap for the loop backend.
    #[arg(long, default_value_t = 1)]
    pub modes: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Backend {
    Finvect,
    Loop,
    Cob,
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Bifunctoriality, pentagon and triangle.
    Coherence(Carrier),
    /// Hexagons and, when symmetric, `C∘C = Id`.
    Hexagon(Carrier),
    /// Lax monoidal functor laws for a lax file.
    Lax {
        file: PathBuf,
        /// Also require invertible comparison maps.
        #[arg(long)]
        strong: bool,
    },
    /// Zig-zag identities for a duality file or a backend's canonical dual.
    Zigzag {
        #[arg(required_unless_present = "backend")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, conflicts_with = "file")]
        backend: Option<Backend>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1)]
        modes: usize,
    },
    /// The conditions under which a functor induces a tensor on its image.
    Thm31 { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Induce {
    /// Tensor on the image of a functor out of a monoidal category.
    Image { file: PathBuf },
    /// Tensor on the target of a base.
    Base { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Trace {
    Finvect {
        #[arg(long)]
        dim: Option<usize>,
        /// `identity` or a linear map file.
        #[arg(long, default_value = "identity")]
        map: String,
    },
    Loop {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 1)]
        modes: usize,
        /// `identity` or a linear map file.
        #[arg(long, default_value = "identity")]
        map: String,
        /// A scalar loop to apply the trace to.
        #[arg(long)]
        probe: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Cob {
    /// `first` then `second`.
    Glue { first: PathBuf, second: PathBuf },
    /// Disjoint union.
    Tensor { first: PathBuf, second: PathBuf },
}

#[derive(Debug, Args)]
pub struct TransferDual {
    /// Lax functor file.
    #[arg(required_unless_present = "backend", requires = "duality")]
    pub lax: Option<PathBuf>,
    /// Duality file in the lax functor's source.
    pub duality: Option<PathBuf>,
    /// `loop`: transport the standard dual of R^dim along the constant lift.
    #[arg(long, value_enum, conflicts_with = "lax")]
    pub backend: Option<Backend>,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 1)]
    pub modes: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            let text = outcome.render(cli.format);
            if let Err(e) = output::emit(&text, cli.output.as_deref()) {
                eprintln!("moncat: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("moncat: {e}");
            ExitCode::from(2)
        }
    }
}
