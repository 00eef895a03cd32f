//! `hspec survey`: sweep a graph family — every labeled graph with up to
//! `--nmax` vertices, or each line of a graph6 file — through the λ₁ = μ₁
//! comparison and the whole check suite.
//!
//! Work is split across `--jobs` threads by partitioning the edge-mask
//! range, but every graph draws its own PRNG seed from (seed, n, mask), so
//! the output is byte-identical for every thread count.

use std::path::Path;

use hspec_core::{
    enumerate_all_graphs, graph_from_mask, helmholtzian_direct, laplacian, sym_eigenvalues,
    Graph, OrientedGraph, TriangleSet, TOL_MATCH,
};
use serde_json::json;

use crate::commands::check;
use crate::config::{load_graph6_batch, OutFormat, OutputArgs};
use crate::error::CliError;
use crate::formats::encode_graph6;
use crate::table::fmt_value;

/// Reorientation rounds per surveyed graph; lighter than `hspec check`
/// because the sweep multiplies everything by tens of thousands of graphs.
pub const SURVEY_ROUNDS: usize = 3;

/// Largest vertex count accepted from an external graph6 file.
const BATCH_MAX_N: usize = 32;

struct GraphOutcome {
    graph6: String,
    /// `Some((lambda1, mu1))` when the two disagree beyond tolerance.
    violation: Option<(f64, f64)>,
    failed: Vec<&'static str>,
}

#[derive(Default)]
struct Tally {
    graphs: u64,
    edgeless: u64,
    outcomes: Vec<GraphOutcome>,
}

pub fn run(
    nmax: Option<u64>,
    input: Option<&Path>,
    jobs: usize,
    seed: u64,
    out: &OutputArgs,
) -> Result<(String, bool), CliError> {
    match (nmax, input) {
        (Some(nmax), None) => run_enumeration(nmax as usize, jobs, seed, out),
        (None, Some(path)) => run_batch(path, seed, out),
        (None, None) => Err(CliError::Config(
            "survey needs either --nmax or --input".to_string(),
        )),
        (Some(_), Some(_)) => unreachable!("clap marks --nmax and --input as conflicting"),
    }
}

fn run_enumeration(
    nmax: usize,
    jobs: usize,
    seed: u64,
    out: &OutputArgs,
) -> Result<(String, bool), CliError> {
    let mut per_size: Vec<(usize, Tally)> = Vec::new();
    for n in 1..=nmax {
        per_size.push((n, sweep_size(n, jobs, seed, out.tol_zero)?));
    }
    render(&per_size, None, out)
}

fn run_batch(path: &Path, seed: u64, out: &OutputArgs) -> Result<(String, bool), CliError> {
    let graphs = load_graph6_batch(path)?;
    if let Some(g) = graphs.iter().find(|g| g.vertex_count() > BATCH_MAX_N) {
        return Err(CliError::Config(format!(
            "{}: survey input is limited to {BATCH_MAX_N} vertices per graph, found {}",
            path.display(),
            g.vertex_count()
        )));
    }
    let mut tally = Tally::default();
    for (i, g) in graphs.iter().enumerate() {
        tally.graphs += 1;
        if g.edge_count() == 0 {
            tally.edgeless += 1;
            continue;
        }
        let (violation, failed) = survey_graph(g, mix_seed(seed, u64::MAX, i as u64), out.tol_zero)?;
        if violation.is_some() || !failed.is_empty() {
            tally.outcomes.push(GraphOutcome { graph6: encode_graph6(g)?, violation, failed });
        }
    }
    render(&[], Some((path, tally)), out)
}

/// Surveys every labeled graph on `n` vertices, splitting the mask range
/// across `jobs` threads.
fn sweep_size(n: usize, jobs: usize, seed: u64, tol_zero: f64) -> Result<Tally, CliError> {
    let range = enumerate_all_graphs(n)?.mask_range();
    let total = range.end;
    let jobs = jobs.max(1) as u64;
    let chunk = total.div_ceil(jobs);

    let chunks: Vec<Result<Tally, CliError>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for j in 0..jobs {
            let lo = j * chunk;
            let hi = (lo + chunk).min(total);
            if lo >= hi {
                continue;
            }
            handles.push(scope.spawn(move || -> Result<Tally, CliError> {
                let mut tally = Tally::default();
                for mask in lo..hi {
                    let g = graph_from_mask(n, mask);
                    tally.graphs += 1;
                    if g.edge_count() == 0 {
                        tally.edgeless += 1;
                        continue;
                    }
                    let (violation, failed) =
                        survey_graph(&g, mix_seed(seed, n as u64, mask), tol_zero)?;
                    if violation.is_some() || !failed.is_empty() {
                        tally.outcomes.push(GraphOutcome {
                            graph6: encode_graph6(&g)?,
                            violation,
                            failed,
                        });
                    }
                }
                Ok(tally)
            }));
        }
        handles.into_iter().map(|h| h.join().expect("survey worker panicked")).collect()
    });

    let mut merged = Tally::default();
    for c in chunks {
        let c = c?;
        merged.graphs += c.graphs;
        merged.edgeless += c.edgeless;
        merged.outcomes.extend(c.outcomes);
    }
    Ok(merged)
}

/// One graph through the conjecture comparison and the check suite.
fn survey_graph(
    g: &Graph,
    seed: u64,
    tol_zero: f64,
) -> Result<(Option<(f64, f64)>, Vec<&'static str>), CliError> {
    let t = TriangleSet::enumerate(g);
    let og = OrientedGraph::default_orientation(g.clone());
    let lambda1 =
        sym_eigenvalues(&helmholtzian_direct(&og, &t))?.first().copied().unwrap_or(0.0);
    let mu1 = sym_eigenvalues(&laplacian(&og))?.first().copied().unwrap_or(0.0);
    let violation = ((lambda1 - mu1).abs() > TOL_MATCH).then_some((lambda1, mu1));
    let failed: Vec<&'static str> = check::run_checks(&og, &t, seed, SURVEY_ROUNDS, tol_zero)?
        .into_iter()
        .filter(|l| !l.pass)
        .map(|l| l.name)
        .collect();
    Ok((violation, failed))
}

/// Deterministic per-graph seed; splitmix64-style finalizer over the user
/// seed and the graph's coordinates.
fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed
        .wrapping_add(a.wrapping_mul(0x9e3779b97f4a7c15))
        .wrapping_add(b.wrapping_mul(0xd1b54a32d192ed03));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn render(
    per_size: &[(usize, Tally)],
    batch: Option<(&Path, Tally)>,
    out: &OutputArgs,
) -> Result<(String, bool), CliError> {
    let all: Vec<&Tally> = per_size
        .iter()
        .map(|(_, t)| t)
        .chain(batch.as_ref().map(|(_, t)| t))
        .collect();
    let graphs: u64 = all.iter().map(|t| t.graphs).sum();
    let edgeless: u64 = all.iter().map(|t| t.edgeless).sum();
    let counterexamples: usize =
        all.iter().flat_map(|t| &t.outcomes).filter(|o| o.violation.is_some()).count();
    let failures: usize =
        all.iter().flat_map(|t| &t.outcomes).filter(|o| !o.failed.is_empty()).count();
    let ok = counterexamples == 0 && failures == 0;

    match out.format {
        OutFormat::Json => {
            let sizes: Vec<serde_json::Value> = per_size
                .iter()
                .map(|(n, t)| json!({"n": n, "graphs": t.graphs, "edgeless": t.edgeless}))
                .collect();
            let mut v = json!({
                "per_size": sizes,
                "counterexamples": outcome_json(&all, true),
                "check_failures": outcome_json(&all, false),
                "graphs": graphs,
                "edgeless": edgeless,
                "pass": ok,
            });
            if let Some((path, t)) = &batch {
                v["input"] = json!({
                    "path": path.display().to_string(),
                    "graphs": t.graphs,
                    "edgeless": t.edgeless,
                });
            }
            Ok((format!("{v}\n"), ok))
        }
        OutFormat::Table => {
            let mut s = String::new();
            for (n, t) in per_size {
                s.push_str(&format!("n = {n}: {} graphs ({} edgeless)\n", t.graphs, t.edgeless));
                push_outcome_lines(&mut s, t);
            }
            if let Some((path, t)) = &batch {
                s.push_str(&format!(
                    "input {}: {} graphs ({} edgeless)\n",
                    path.display(),
                    t.graphs,
                    t.edgeless
                ));
                push_outcome_lines(&mut s, t);
            }
            s.push_str(&format!(
                "\ngraphs scanned: {graphs} ({edgeless} edgeless)\n\
                 lambda1 = mu1 counterexamples: {counterexamples}\n\
                 check failures: {failures}\n\
                 result: {}\n",
                if ok { "PASS" } else { "FAIL" }
            ));
            Ok((s, ok))
        }
    }
}

fn push_outcome_lines(s: &mut String, t: &Tally) {
    for o in &t.outcomes {
        if let Some((lambda1, mu1)) = o.violation {
            s.push_str(&format!(
                "counterexample: {} lambda1={} mu1={}\n",
                o.graph6,
                fmt_value(lambda1),
                fmt_value(mu1)
            ));
        }
        if !o.failed.is_empty() {
            s.push_str(&format!("failure: {} failed: {}\n", o.graph6, o.failed.join(", ")));
        }
    }
}

fn outcome_json(tallies: &[&Tally], violations: bool) -> Vec<serde_json::Value> {
    let mut items = Vec::new();
    for t in tallies {
        for o in &t.outcomes {
            if violations {
                if let Some((lambda1, mu1)) = o.violation {
                    items.push(json!({"graph6": o.graph6, "lambda1": lambda1, "mu1": mu1}));
                }
            } else if !o.failed.is_empty() {
                items.push(json!({"graph6": o.graph6, "failed": o.failed}));
            }
        }
    }
    items
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults(format: OutFormat) -> OutputArgs {
        OutputArgs {
            format,
            tol_group: hspec_core::DEFAULT_TOL_GROUP,
            tol_zero: hspec_core::DEFAULT_TOL_ZERO,
        }
    }

    #[test]
    fn small_sweep_is_clean_and_jobs_invariant() {
        let (one, ok1) = run(Some(4), None, 1, 0, &defaults(OutFormat::Table)).unwrap();
        let (four, ok4) = run(Some(4), None, 4, 0, &defaults(OutFormat::Table)).unwrap();
        assert!(ok1 && ok4);
        assert_eq!(one, four, "thread count changed the report");
        assert!(one.contains("n = 4: 64 graphs (1 edgeless)"));
        assert!(one.contains("lambda1 = mu1 counterexamples: 0"));
        assert!(one.contains("result: PASS"));
    }

    #[test]
    fn json_shape() {
        let (text, ok) = run(Some(3), None, 2, 1, &defaults(OutFormat::Json)).unwrap();
        assert!(ok);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["per_size"].as_array().unwrap().len(), 3);
        assert_eq!(v["graphs"], 11);
        assert_eq!(v["pass"], true);
        assert!(v["counterexamples"].as_array().unwrap().is_empty());
    }

    #[test]
    fn seed_mixing_separates_coordinates() {
        assert_ne!(mix_seed(0, 1, 2), mix_seed(0, 2, 1));
        assert_ne!(mix_seed(0, 1, 2), mix_seed(1, 1, 2));
    }
}
