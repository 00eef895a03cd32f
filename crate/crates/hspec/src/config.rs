//! Command-line surface: argument structs, input loading, and orientation
//! resolution. Everything here is deterministic — the same arguments, files,
//! and environment produce byte-identical downstream behavior.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hspec_core::{Family, Graph, OrientedGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::formats::{parse_edge_list, parse_graph6};

/// Environment variable that overrides every `--seed` flag when set.
pub const SEED_ENV: &str = "HSPEC_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "hspec",
    version,
    about = "Spectra and structure of the graph Helmholtzian H = BB^T + C^T C"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print B, C, L, H, A(Lambda_R), A(G_tri), and H' with exact integer
    /// entries and labeled rows.
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        orient: OrientArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Grouped spectra of H, L, and 3I + A(G_tri), plus the block-spectrum
    /// verdict relating them.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        orient: OrientArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the full verification suite on one graph; exits nonzero if any
    /// check fails.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        orient: OrientArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep every graph with up to --nmax vertices (or each graph6 line of
    /// --input) through the λ₁ = μ₁ comparison and the check suite.
    Survey {
        /// Largest vertex count to enumerate exhaustively.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..=7))]
        nmax: Option<u64>,
        /// graph6 file (one graph per line) surveyed instead of enumerating.
        #[arg(long, value_name = "PATH", conflicts_with = "nmax")]
        input: Option<PathBuf>,
        /// Worker threads; results are identical for every value.
        #[arg(long, value_name = "N", default_value_t = 1,
              value_parser = clap::value_parser!(u64).range(1..=64))]
        jobs: u64,
        /// Seed for the per-graph reorientation tests (HSPEC_SEED overrides).
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form H-spectrum of a named family member.
    Families {
        /// complete | path | cycle | friendship
        #[arg(value_enum)]
        family: FamilyArg,
        /// Family parameter: vertex count, or blade count for friendship.
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Exactly one graph source must be given.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Path to an edge-list file (`u v` or `u>v` per line) or a graph6 file.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long, value_name = "STR")]
    pub graph6: Option<String>,
    /// Inline edge list; `;`, `,`, or newlines separate edges.
    #[arg(long, value_name = "STR")]
    pub edges: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct OrientArgs {
    /// `default` keeps input arcs (plain edges run low-to-high), `random`
    /// draws a seeded orientation, a path reads explicit arcs from a file.
    #[arg(long, value_name = "default|random|FILE", default_value = "default")]
    pub orient: String,
    /// PRNG seed for random orientations and reorientation checks
    /// (HSPEC_SEED overrides).
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Table)]
    pub format: OutFormat,
    /// Tolerance for grouping near-equal eigenvalues.
    #[arg(long = "tol-group", value_name = "X", default_value_t = hspec_core::DEFAULT_TOL_GROUP)]
    pub tol_group: f64,
    /// Magnitude below which an eigenvalue counts as zero.
    #[arg(long = "tol-zero", value_name = "X", default_value_t = hspec_core::DEFAULT_TOL_ZERO)]
    pub tol_zero: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Table,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FamilyArg {
    Complete,
    Path,
    Cycle,
    Friendship,
}

impl FamilyArg {
    pub fn to_family(self) -> Family {
        match self {
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Friendship => Family::Friendship,
        }
    }
}

/// The effective seed: `HSPEC_SEED` when set (and parseable), else the flag.
pub fn resolve_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            CliError::Config(format!("{SEED_ENV} must be an unsigned integer, found {s:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(flag),
        Err(e) => Err(CliError::Config(format!("{SEED_ENV}: {e}"))),
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), source: e })
}

fn first_significant_line(text: &str) -> Option<&str> {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty())
}

/// A line is graph6 iff every byte sits in the printable band 63..=126;
/// edge-list lines always contain digits or whitespace, which sit below it.
pub fn looks_like_graph6(line: &str) -> bool {
    !line.is_empty() && line.bytes().all(|b| (63..=126).contains(&b))
}

/// Loads the single input graph from whichever source was given. graph6
/// sources carry no orientation and get the default one.
pub fn load_graph(input: &InputArgs) -> Result<OrientedGraph, CliError> {
    if let Some(path) = &input.input {
        let text = read_file(path)?;
        let src = path.display().to_string();
        return match first_significant_line(&text) {
            Some(line) if looks_like_graph6(line) => {
                let lines: Vec<&str> = text
                    .lines()
                    .map(|l| l.split('#').next().unwrap_or("").trim())
                    .filter(|l| !l.is_empty())
                    .collect();
                if lines.len() > 1 {
                    return Err(CliError::Config(format!(
                        "{src} holds {} graphs; this command analyzes one \
                         (use `survey --input` for batches)",
                        lines.len()
                    )));
                }
                Ok(OrientedGraph::default_orientation(parse_graph6(lines[0])?))
            }
            _ => parse_edge_list(&text, &src),
        };
    }
    if let Some(s) = &input.graph6 {
        return Ok(OrientedGraph::default_orientation(parse_graph6(s)?));
    }
    let s = input.edges.as_ref().expect("clap enforces exactly one input source");
    let normalized = s.replace([';', ','], "\n");
    parse_edge_list(&normalized, "<edges>")
}

/// Applies the `--orient` choice to a freshly loaded graph.
pub fn apply_orientation(
    base: OrientedGraph,
    orient: &str,
    seed: u64,
) -> Result<OrientedGraph, CliError> {
    match orient {
        "default" => Ok(base),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let flips: Vec<bool> = (0..base.edge_count()).map(|_| rng.gen()).collect();
            Ok(OrientedGraph::default_orientation(base.graph().clone()).flip_edges(&flips))
        }
        path => orient_from_file(&base, Path::new(path)),
    }
}

fn orient_from_file(base: &OrientedGraph, path: &Path) -> Result<OrientedGraph, CliError> {
    let text = read_file(path)?;
    let src = path.display().to_string();
    let file_og = parse_edge_list(&text, &src)?;
    let (fg, bg) = (file_og.graph(), base.graph());
    // Edge sets must agree; the file may list them in any order, so arcs are
    // matched up pairwise rather than positionally.
    if fg.edge_count() != bg.edge_count()
        || fg.edges().iter().any(|&(u, v)| !bg.has_edge(u, v))
    {
        return Err(CliError::Config(format!(
            "{src}: orientation file must list exactly the input graph's edges"
        )));
    }
    let arcs: Vec<(usize, usize)> = bg
        .edges()
        .iter()
        .map(|&(u, v)| file_og.arc(fg.edge_index(u, v).expect("edge sets agree")))
        .collect();
    OrientedGraph::with_arcs(bg.clone(), arcs)
        .map_err(|e| CliError::Config(format!("{src}: {e}")))
}

/// Convenience wrapper: load, then orient.
pub fn load_oriented(
    input: &InputArgs,
    orient: &OrientArgs,
) -> Result<(OrientedGraph, u64), CliError> {
    let seed = resolve_seed(orient.seed)?;
    let og = apply_orientation(load_graph(input)?, &orient.orient, seed)?;
    Ok((og, seed))
}

/// Parses one graph per line of a graph6 file, with line-numbered errors.
pub fn load_graph6_batch(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = read_file(path)?;
    let src = path.display().to_string();
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let g = parse_graph6(body)
            .map_err(|e| CliError::parse(&src, idx + 1, e.to_string()))?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inline_edges(s: &str) -> InputArgs {
        InputArgs { input: None, graph6: None, edges: Some(s.to_string()) }
    }

    #[test]
    fn inline_edges_accept_separators() {
        let og = load_graph(&inline_edges("0 1; 1 2, 2>0")).unwrap();
        assert_eq!(og.graph().edge_count(), 3);
        let e = og.graph().edge_index(0, 2).unwrap();
        assert_eq!(og.arc(e), (2, 0));
    }

    #[test]
    fn inline_graph6_is_decoded() {
        let input = InputArgs { input: None, graph6: Some("D~{".into()), edges: None };
        let og = load_graph(&input).unwrap();
        assert_eq!(og.graph().edge_count(), 10);
    }

    #[test]
    fn random_orientation_is_seed_deterministic() {
        let a = apply_orientation(load_graph(&inline_edges("0 1;1 2;2 3;3 0")).unwrap(), "random", 7)
            .unwrap();
        let b = apply_orientation(load_graph(&inline_edges("0 1;1 2;2 3;3 0")).unwrap(), "random", 7)
            .unwrap();
        assert_eq!(a.arcs(), b.arcs());
    }

    #[test]
    fn graph6_sniffing() {
        assert!(looks_like_graph6("D~{"));
        assert!(!looks_like_graph6("0 1"));
        assert!(!looks_like_graph6("0>1"));
        assert!(!looks_like_graph6(""));
    }
}
