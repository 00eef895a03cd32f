//! `hspec spectrum`: grouped eigenvalues of H, L, and 3I + A(G_tri) side by
//! side, with the verdict that the nonzero parts of the last two tile the
//! first. The verdict failing flips the exit code, so piping this command in
//! scripts doubles as a cheap integrity check.

use hspec_core::{
    group_spectrum, helmholtzian_direct, laplacian, sym_eigenvalues, triangle_block,
    verify_block_spectrum_with_tol, OrientedGraph, TriangleSet,
};
use serde_json::json;

use crate::config::{OutFormat, OutputArgs};
use crate::error::CliError;
use crate::formats::spectrum_json;
use crate::table::{fmt_groups, fmt_value};

pub fn run(
    og: &OrientedGraph,
    t: &TriangleSet,
    out: &OutputArgs,
) -> Result<(String, bool), CliError> {
    let g = og.graph();
    let (n, m, tc) = (g.vertex_count(), g.edge_count(), t.len());

    let h_spec = group_spectrum(&sym_eigenvalues(&helmholtzian_direct(og, t))?, out.tol_group);
    let l_spec = group_spectrum(&sym_eigenvalues(&laplacian(og))?, out.tol_group);
    let t_spec = group_spectrum(&sym_eigenvalues(&triangle_block(og, t))?, out.tol_group);
    let report = verify_block_spectrum_with_tol(og, t, out.tol_zero)?;

    match out.format {
        OutFormat::Json => {
            let v = json!({
                "H": spectrum_json(&h_spec),
                "L": spectrum_json(&l_spec),
                "triangle_block": spectrum_json(&t_spec),
                "block_decomposition": {
                    "pass": report.pass,
                    "unmatched_h": report.unmatched_h,
                    "unmatched_block": report.unmatched_block,
                },
            });
            Ok((format!("{v}\n"), report.pass))
        }
        OutFormat::Table => {
            let mut s = String::new();
            if m == 0 {
                s.push_str(&format!("H ({m} x {m}, the 0x0 matrix): (empty)\n"));
            } else {
                s.push_str(&format!("H ({m} x {m}): {}\n", fmt_groups(h_spec.groups())));
            }
            s.push_str(&format!("L ({n} x {n}): {}\n", fmt_groups(l_spec.groups())));
            s.push_str(&format!(
                "3I + A(G_tri) ({tc} x {tc}): {}\n\n",
                fmt_groups(t_spec.groups())
            ));
            if report.pass {
                s.push_str(
                    "block decomposition: PASS — nonzero Sp(H) = nonzero Sp(L) + nonzero \
                     Sp(3I + A(G_tri))\n",
                );
            } else {
                let only_h: Vec<String> =
                    report.unmatched_h.iter().map(|&v| fmt_value(v)).collect();
                let only_b: Vec<String> =
                    report.unmatched_block.iter().map(|&v| fmt_value(v)).collect();
                s.push_str(&format!(
                    "block decomposition: FAIL — only in Sp(H): [{}]; only in blocks: [{}]\n",
                    only_h.join(", "),
                    only_b.join(", ")
                ));
            }
            Ok((s, report.pass))
        }
    }
}
