//! graph6 encoding of undirected simple graphs (short form, n <= 62).
//!
//! Layout: one header byte holding n + 63, then ceil(n(n-1)/2 / 6) body
//! bytes. Each body byte stores six bits of the upper triangle of the
//! adjacency matrix (MSB first) after subtracting 63; bit i corresponds to
//! the i-th vertex pair in column-major order (0,1), (0,2), (1,2), (0,3),
//! ... — the same order [`hspec_core::pair_order`] produces. Unused padding
//! bits in the last byte must be zero.

use hspec_core::{pair_order, Graph};

use crate::error::CliError;

const OFFSET: u8 = 63;
const MAX_SHORT_N: usize = 62;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Graph6(msg.into())
}

/// Decodes a single short-form graph6 string. Leading/trailing whitespace is
/// tolerated; the optional `>>graph6<<` stream header is not.
pub fn parse_graph6(s: &str) -> Result<Graph, CliError> {
    let s = s.trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(bad(format!(
            "invalid byte 0x{b:02x} (every character must be in the range 63..=126)"
        )));
    }
    if bytes[0] == 126 {
        return Err(bad("long-form length header (leading '~') is not supported; n must be <= 62"));
    }
    let n = (bytes[0] - OFFSET) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() - 1 != body_len {
        return Err(bad(format!(
            "wrong length for n = {n}: expected {body_len} body bytes, found {}",
            bytes.len() - 1
        )));
    }

    let order = pair_order(n);
    let mut edges = Vec::new();
    for (i, &(u, v)) in order.iter().enumerate() {
        if bit(&bytes[1..], i) {
            edges.push((u, v));
        }
    }
    // Padding bits beyond the last pair must be zero in a well-formed string.
    for i in pairs..body_len * 6 {
        if bit(&bytes[1..], i) {
            return Err(bad("nonzero padding bits in final byte"));
        }
    }
    Graph::new(n, edges).map_err(|e| bad(format!("decoded edge list rejected: {e}")))
}

fn bit(body: &[u8], i: usize) -> bool {
    let byte = body[i / 6] - OFFSET;
    byte & (1 << (5 - i % 6)) != 0
}

/// Encodes a graph in short form; fails for n > 62.
pub fn encode_graph6(g: &Graph) -> Result<String, CliError> {
    let n = g.vertex_count();
    if n > MAX_SHORT_N {
        return Err(bad(format!("cannot encode n = {n} in short form (maximum 62)")));
    }
    let pairs = pair_order(n);
    let mut out = vec![OFFSET + n as u8];
    out.resize(1 + pairs.len().div_ceil(6), OFFSET);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            out[1 + i / 6] += 1 << (5 - i % 6);
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let single_edge = parse_graph6("A_").unwrap();
        assert_eq!(single_edge.vertex_count(), 2);
        assert_eq!(single_edge.edges(), &[(0, 1)]);

        let empty_pair = parse_graph6("A?").unwrap();
        assert_eq!(empty_pair.vertex_count(), 2);
        assert_eq!(empty_pair.edge_count(), 0);

        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!(k5.vertex_count(), 5);
        assert_eq!(k5.edge_count(), 10);
    }

    #[test]
    fn encode_matches_known_strings() {
        assert_eq!(encode_graph6(&Graph::new(2, [(0, 1)]).unwrap()).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::new(2, []).unwrap()).unwrap(), "A?");
        assert_eq!(encode_graph6(&Graph::complete(5)).unwrap(), "D~{");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err()); // missing body byte
        assert!(parse_graph6("A_extra").is_err()); // too long
        assert!(parse_graph6("A\u{20}").is_err()); // byte below 63
        assert!(parse_graph6("~??").is_err()); // long form
        // n = 2 has one pair, so the five padding bits must be clear:
        // 'o' - 63 = 0b110000 sets a padding bit.
        assert!(parse_graph6("Ao").is_err());
    }

    #[test]
    fn round_trips_exhaustively_through_n_five() {
        for n in 0..=5usize {
            let pair_count = n * n.saturating_sub(1) / 2;
            for mask in 0u64..1 << pair_count {
                let g = hspec_core::graph_from_mask(n, mask);
                let s = encode_graph6(&g).unwrap();
                let back = parse_graph6(&s).unwrap();
                assert_eq!(back.vertex_count(), n);
                assert_eq!(back.edges(), g.edges());
            }
        }
    }
}
