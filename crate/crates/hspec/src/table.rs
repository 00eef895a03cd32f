//! Deterministic plain-text rendering: fixed-width integer grids and a
//! stable float format (integers print bare, everything else with up to ten
//! decimals, trailing zeros trimmed). Identical inputs always produce
//! byte-identical text.

use hspec_core::Label;

/// Formats an eigenvalue-scale float. Values within 5e-11 of an integer
/// print as that integer; this absorbs solver noise without hiding genuine
/// irrational values, which keep ten decimals.
pub fn fmt_value(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() < 5e-11 {
        format!("{}", r as i64)
    } else {
        format!("{x:.10}").trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

/// `value:multiplicity` pairs separated by commas, e.g. `5:1, 2:4`.
pub fn fmt_groups(groups: &[(f64, usize)]) -> String {
    if groups.is_empty() {
        return "(empty)".to_string();
    }
    let parts: Vec<String> =
        groups.iter().map(|&(v, m)| format!("{}:{m}", fmt_value(v))).collect();
    parts.join(", ")
}

pub fn label_strings(labels: &[Label]) -> Vec<String> {
    labels.iter().map(Label::to_string_label).collect()
}

/// Renders an integer matrix with row and column labels, every column
/// right-aligned to its widest entry.
pub fn int_grid(row_labels: &[String], col_labels: &[String], rows: &[Vec<i64>]) -> String {
    if row_labels.is_empty() || col_labels.is_empty() {
        return "  (empty)\n".to_string();
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
    let col_w: Vec<usize> = col_labels
        .iter()
        .enumerate()
        .map(|(j, cl)| cells.iter().map(|r| r[j].len()).max().unwrap_or(0).max(cl.len()))
        .collect();

    let mut out = String::new();
    out.push_str(&" ".repeat(label_w + 2));
    for (j, cl) in col_labels.iter().enumerate() {
        if j > 0 {
            out.push_str("  ");
        }
        out.push_str(&format!("{cl:>w$}", w = col_w[j]));
    }
    out.push('\n');
    for (i, rl) in row_labels.iter().enumerate() {
        out.push_str(&format!("  {rl:>label_w$}"));
        for (j, cell) in cells[i].iter().enumerate() {
            out.push_str("  ");
            out.push_str(&format!("{cell:>w$}", w = col_w[j]));
        }
        out.push('\n');
    }
    out
}
