//! `hspec matrix`: every companion matrix of one oriented graph, printed
//! with exact integer entries and semantic row/column labels.

use hspec_core::{
    edge_vertex_incidence, helmholtzian_direct, hprime, lambda_signed, laplacian,
    triangle_edge_incidence, triangular_signed, OrientedGraph, RectMatrix, SymMatrix, TriangleSet,
};
use serde_json::json;

use crate::config::{OutFormat, OutputArgs};
use crate::error::CliError;
use crate::formats::{rect_matrix_json, sym_matrix_json};
use crate::table::{int_grid, label_strings};

pub fn run(og: &OrientedGraph, t: &TriangleSet, out: &OutputArgs) -> Result<String, CliError> {
    let g = og.graph();
    let (n, m, tc) = (g.vertex_count(), g.edge_count(), t.len());

    let b = edge_vertex_incidence(og);
    let c = triangle_edge_incidence(og, t);
    let l = laplacian(og);
    let h = helmholtzian_direct(og, t);
    let a_lr = lambda_signed(og, t).adjacency_matrix();
    let a_tri = triangular_signed(og, t).adjacency_matrix();
    let hp = hprime(og, t)?;

    match out.format {
        OutFormat::Json => {
            let mut v = json!({
                "n": n,
                "m": m,
                "triangles": tc,
                "B": rect_matrix_json(&b),
                "C": rect_matrix_json(&c),
                "L": sym_matrix_json(&l),
                "H": sym_matrix_json(&h),
                "A_lambda_R": sym_matrix_json(&a_lr),
                "A_triangle": sym_matrix_json(&a_tri),
                "H_prime": sym_matrix_json(&hp),
            });
            if m == 0 {
                v["notice"] = json!("0x0 matrix");
            }
            Ok(format!("{v}\n"))
        }
        OutFormat::Table => {
            let mut s = String::new();
            if m == 0 {
                s.push_str(&format!(
                    "graph: {n} vertices, 0 edges — H is the 0x0 matrix\n\n"
                ));
            } else {
                s.push_str(&format!(
                    "graph: {n} vertices, {m} edges, {tc} triangles\n\n"
                ));
            }
            rect_section(&mut s, "B — edge-vertex incidence", &b);
            rect_section(&mut s, "C — triangle-edge incidence", &c);
            sym_section(&mut s, "L = B^T B — Laplacian", &l);
            sym_section(&mut s, "H = B B^T + C^T C — Helmholtzian", &h);
            sym_section(&mut s, "A(Lambda_R) — signed meeting adjacency", &a_lr);
            sym_section(&mut s, "A(G_tri) — triangle adjacency", &a_tri);
            sym_section(&mut s, "H' = L (+) 3I + A(G_tri)", &hp);
            Ok(s)
        }
    }
}

fn rect_section(s: &mut String, title: &str, m: &RectMatrix) {
    s.push_str(&format!("{title} ({} x {})\n", m.rows(), m.cols()));
    s.push_str(&int_grid(
        &label_strings(m.row_labels()),
        &label_strings(m.col_labels()),
        &m.row_vectors(),
    ));
    s.push('\n');
}

fn sym_section(s: &mut String, title: &str, m: &SymMatrix) {
    s.push_str(&format!("{title} ({0} x {0})\n", m.order()));
    let labels = label_strings(m.labels());
    s.push_str(&int_grid(&labels, &labels, &m.row_vectors()));
    s.push('\n');
}
