//! The `selfcomm` command line: `analyze`, `gallery`, `fuzz` and `convex`.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 failed check (a theorem
//! bound in `analyze`, a closed form in `gallery` or `convex`), 3 theorem
//! violation during `fuzz`.

mod commands;
pub mod input;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::Ensemble;

pub use commands::{ConvexReport, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_THEOREM_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "selfcomm", version, about = "Self-commutator norm estimates and numerical ranges")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound on ‖C(A)‖ for a matrix file.
    Analyze(AnalyzeArgs),
    /// Run the worked examples against their closed forms.
    Gallery(GalleryArgs),
    /// Fuzz the conjectured inequalities on random matrices.
    Fuzz(FuzzArgs),
    /// Width functionals of a planar convex body.
    Convex(ConvexArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Matrix file (JSON or plain text).
    pub file: PathBuf,
    /// Boundary samples used for the numerical-range area.
    #[arg(long, default_value_t = crate::numrange::DEFAULT_AREA_ANGLES, value_parser = clap::value_parser!(usize))]
    pub angles: usize,
    /// Include the (downsampled) boundary of W(A).
    #[arg(long)]
    pub boundary: bool,
    /// Include the width profile b_x, b_y.
    #[arg(long)]
    pub widths: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, hide = true, default_value_t = crate::bounds::THEOREM_TOL, allow_negative_numbers = true)]
    pub theorem_tol: f64,
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    /// Glob on entry names, e.g. `toeplitz*`.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// complex-gaussian, real-gaussian, upper-triangular or
    /// unitary-similarity-of-jordan.
    #[arg(long, value_parser = str::parse::<Ensemble>)]
    pub ensemble: Ensemble,
    /// Matrix dimension.
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    /// Write one CSV row per trial here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the JSON summary here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Boundary samples used for the numerical-range area.
    #[arg(long, default_value_t = crate::numrange::DEFAULT_AREA_ANGLES)]
    pub angles: usize,
    #[arg(long, hide = true, default_value_t = crate::bounds::THEOREM_TOL, allow_negative_numbers = true)]
    pub theorem_tol: f64,
    #[arg(long, hide = true, default_value_t = crate::bounds::THEOREM_TOL, allow_negative_numbers = true)]
    pub conjecture_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Triangle,
    Ellipse,
    Reuleaux,
    Polygon,
}

#[derive(Debug, Args)]
pub struct ConvexArgs {
    #[arg(long, value_enum)]
    pub shape: Shape,
    /// Ellipse semi-major axis, or triangle circumradius.
    #[arg(long)]
    pub a: Option<f64>,
    /// Ellipse semi-minor axis.
    #[arg(long)]
    pub b: Option<f64>,
    /// Reuleaux triangle width.
    #[arg(long)]
    pub width: Option<f64>,
    /// Polygon file, one `x y` pair per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Points per arc of the Reuleaux approximation.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Scan grid for the width product.
    #[arg(long, default_value_t = crate::convexgeom::DEFAULT_ANGLES)]
    pub angles: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Analyze(a) => commands::analyze(&a),
        Command::Gallery(g) => commands::gallery(&g),
        Command::Fuzz(f) => commands::fuzz(&f),
        Command::Convex(c) => commands::convex(&c),
    }
}
