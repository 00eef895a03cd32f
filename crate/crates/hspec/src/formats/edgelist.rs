//! Plain-text edge lists.
//!
//! One edge per line. `u v` takes the default orientation (low vertex is
//! the tail), `u>v` fixes the arc as written. `#` starts a comment, blank
//! lines are skipped, and the vertex count is one more than the largest
//! label mentioned. Duplicate edges, self-loops, and anything unparseable
//! are rejected with the offending line number.

use hspec_core::{Graph, OrientedGraph};

use crate::error::CliError;

/// Parses an edge list into an oriented graph; `src` names the input in
/// error messages (a path, or `<edges>` for inline text).
pub fn parse_edge_list(text: &str, src: &str) -> Result<OrientedGraph, CliError> {
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen: Vec<(usize, usize, usize)> = Vec::new(); // (lo, hi, line)
    let mut max_label = None::<usize>;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (tail, head) = parse_arc(body, src, line)?;
        if tail == head {
            return Err(CliError::parse(src, line, format!("self-loop at vertex {tail}")));
        }
        let key = (tail.min(head), tail.max(head));
        if let Some(&(_, _, first)) = seen.iter().find(|&&(a, b, _)| (a, b) == key) {
            return Err(CliError::parse(
                src,
                line,
                format!("duplicate edge {{{}, {}}} (first given on line {first})", key.0, key.1),
            ));
        }
        seen.push((key.0, key.1, line));
        arcs.push((tail, head));
        max_label = Some(max_label.unwrap_or(0).max(head).max(tail));
    }

    let n = max_label.map_or(0, |m| m + 1);
    // Edges keep their input order inside Graph, so the arcs line up as is.
    let graph = Graph::new(n, arcs.iter().copied())
        .map_err(|e| CliError::parse(src, 0, e.to_string()))?;
    OrientedGraph::with_arcs(graph, arcs).map_err(|e| CliError::parse(src, 0, e.to_string()))
}

fn parse_arc(body: &str, src: &str, line: usize) -> Result<(usize, usize), CliError> {
    if let Some((t, h)) = body.split_once('>') {
        let tail = parse_vertex(t.trim(), src, line)?;
        let head = parse_vertex(h.trim(), src, line)?;
        return Ok((tail, head));
    }
    let mut it = body.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => {
            let u = parse_vertex(a, src, line)?;
            let v = parse_vertex(b, src, line)?;
            Ok((u.min(v), u.max(v)))
        }
        _ => Err(CliError::parse(
            src,
            line,
            format!("expected `u v` or `u>v`, found {body:?}"),
        )),
    }
}

fn parse_vertex(tok: &str, src: &str, line: usize) -> Result<usize, CliError> {
    tok.parse::<usize>()
        .map_err(|_| CliError::parse(src, line, format!("invalid vertex label {tok:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_arced_and_plain_lines() {
        let og = parse_edge_list("0>1\n2>1\n1>4\n3>4\n3>2\n3>1\n", "<edges>").unwrap();
        assert_eq!(og.graph().vertex_count(), 5);
        assert_eq!(og.graph().edge_count(), 6);
        // Arcs keep their written direction, indexed in canonical edge order.
        let e = og.graph().edge_index(1, 2).unwrap();
        assert_eq!(og.arc(e), (2, 1));
        let e = og.graph().edge_index(1, 3).unwrap();
        assert_eq!(og.arc(e), (3, 1));
    }

    #[test]
    fn plain_pairs_default_to_low_tail() {
        let og = parse_edge_list("4 0\n1 2", "<edges>").unwrap();
        let e = og.graph().edge_index(0, 4).unwrap();
        assert_eq!(og.arc(e), (0, 4));
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# triangle\n0 1\n\n1 2  # closing\n0>2\n";
        let og = parse_edge_list(text, "<edges>").unwrap();
        assert_eq!(og.graph().edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("0 1\n1 1\n", "input.edges").unwrap_err();
        assert_eq!(err.to_string(), "input.edges:2: self-loop at vertex 1");

        let err = parse_edge_list("0 1\n# fine\n1>0\n", "input.edges").unwrap_err();
        assert!(err.to_string().starts_with("input.edges:3: duplicate edge {0, 1}"));

        let err = parse_edge_list("0 1 2\n", "x").unwrap_err();
        assert!(err.to_string().contains("x:1:"));

        let err = parse_edge_list("a b\n", "x").unwrap_err();
        assert!(err.to_string().contains("invalid vertex label \"a\""));
    }

    #[test]
    fn empty_input_is_the_empty_graph() {
        let og = parse_edge_list("# nothing here\n\n", "<edges>").unwrap();
        assert_eq!(og.graph().vertex_count(), 0);
        assert_eq!(og.graph().edge_count(), 0);
    }
}
