//! JSON shapes for matrices and spectra.
//!
//! Symmetric matrices serialize as `{"labels": [...], "rows": [[...]]}`,
//! rectangular ones add a `"cols"` list, and a spectrum is
//! `{"eigenvalues": [...], "groups": [{"value": x, "multiplicity": k}],
//! "tolerance": t}` with eigenvalues descending.

use hspec_core::{Label, RectMatrix, Spectrum, SymMatrix};
use serde_json::{json, Value};

fn label_strings(labels: &[Label]) -> Vec<String> {
    labels.iter().map(Label::to_string_label).collect()
}

pub fn sym_matrix_json(m: &SymMatrix) -> Value {
    json!({
        "labels": label_strings(m.labels()),
        "rows": m.row_vectors(),
    })
}

pub fn rect_matrix_json(m: &RectMatrix) -> Value {
    json!({
        "labels": label_strings(m.row_labels()),
        "cols": label_strings(m.col_labels()),
        "rows": m.row_vectors(),
    })
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    let groups: Vec<Value> = s
        .groups()
        .iter()
        .map(|&(value, multiplicity)| json!({"value": value, "multiplicity": multiplicity}))
        .collect();
    json!({
        "eigenvalues": s.values(),
        "groups": groups,
        "tolerance": s.tol_group(),
    })
}
