//! Text serialization for signed graphs with loop weights.
//!
//! ```text
//! n m
//! u v s        one line per signed edge, s in {+, -}
//! loop v k     one line per vertex with loop weight k > 0
//! ```
//!
//! Edges appear in insertion order, loop lines in ascending vertex order.
//! `#` comments and blank lines are permitted when reading. Vertex labels
//! are positional indices; decorative labels are not round-tripped.

use hspec_core::SignedGraph;

use crate::error::CliError;

pub fn emit_signed(sg: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", sg.vertex_count(), sg.edge_count());
    for &(u, v, s) in sg.edges() {
        let mark = if s >= 0 { '+' } else { '-' };
        out.push_str(&format!("{u} {v} {mark}\n"));
    }
    for (v, &w) in sg.loop_weights().iter().enumerate() {
        if w > 0 {
            out.push_str(&format!("loop {v} {w}\n"));
        }
    }
    out
}

pub fn parse_signed(text: &str, src: &str) -> Result<SignedGraph, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, body)| !body.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| CliError::parse(src, 1, "missing `n m` header"))?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (
            parse_count(a, src, header_line, "vertex count")?,
            parse_count(b, src, header_line, "edge count")?,
        ),
        _ => return Err(CliError::parse(src, header_line, "header must be `n m`")),
    };

    let mut sg = SignedGraph::with_order(n);
    let mut edges_read = 0usize;
    let mut in_loops = false;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.first() == Some(&"loop") {
            in_loops = true;
            if toks.len() != 3 {
                return Err(CliError::parse(src, line, "loop line must be `loop v k`"));
            }
            let v = parse_count(toks[1], src, line, "vertex")?;
            let k = parse_count(toks[2], src, line, "loop weight")?;
            if v >= n {
                return Err(CliError::parse(src, line, format!("vertex {v} out of range (n = {n})")));
            }
            sg.set_loop_weight(v, k);
            continue;
        }
        if in_loops {
            return Err(CliError::parse(src, line, "edge line after loop lines"));
        }
        if toks.len() != 3 {
            return Err(CliError::parse(src, line, "edge line must be `u v s` with s in {+, -}"));
        }
        let u = parse_count(toks[0], src, line, "vertex")?;
        let v = parse_count(toks[1], src, line, "vertex")?;
        let sign = match toks[2] {
            "+" => 1,
            "-" => -1,
            other => {
                return Err(CliError::parse(src, line, format!("sign must be + or -, found {other:?}")))
            }
        };
        sg.add_edge(u, v, sign).map_err(|e| CliError::parse(src, line, e.to_string()))?;
        edges_read += 1;
    }

    if edges_read != m {
        return Err(CliError::parse(
            src,
            header_line,
            format!("header promises {m} edges but {edges_read} were given"),
        ));
    }
    Ok(sg)
}

fn parse_count(tok: &str, src: &str, line: usize, what: &str) -> Result<usize, CliError> {
    tok.parse::<usize>()
        .map_err(|_| CliError::parse(src, line, format!("invalid {what} {tok:?}")))
}
