//! Command-line frontend and file formats for graph Helmholtzian analysis.
//!
//! The mathematics lives in `hspec-core`; this crate adds IO: edge-list,
//! graph6, and signed-graph text formats, table and JSON rendering, and the
//! `hspec` binary with its `matrix`, `spectrum`, `check`, `survey`, and
//! `families` subcommands. All output is deterministic — identical
//! arguments, files, and environment yield byte-identical bytes on stdout.

pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod table;

use hspec_core::TriangleSet;

use config::{Cli, Command};
use error::CliError;

/// Executes a parsed command line; returns the stdout payload and whether
/// every check passed (commands without checks always report `true`).
pub fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Matrix { input, orient, out } => {
            let (og, _) = config::load_oriented(&input, &orient)?;
            let t = TriangleSet::enumerate(og.graph());
            Ok((commands::matrix::run(&og, &t, &out)?, true))
        }
        Command::Spectrum { input, orient, out } => {
            let (og, _) = config::load_oriented(&input, &orient)?;
            let t = TriangleSet::enumerate(og.graph());
            commands::spectrum::run(&og, &t, &out)
        }
        Command::Check { input, orient, out } => {
            let (og, seed) = config::load_oriented(&input, &orient)?;
            let t = TriangleSet::enumerate(og.graph());
            commands::check::run(&og, &t, seed, &out)
        }
        Command::Survey { nmax, input, jobs, seed, out } => {
            let seed = config::resolve_seed(seed)?;
            commands::survey::run(nmax, input.as_deref(), jobs as usize, seed, &out)
        }
        Command::Families { family, n, out } => {
            Ok((commands::families::run(family.to_family(), n, &out)?, true))
        }
    }
}
