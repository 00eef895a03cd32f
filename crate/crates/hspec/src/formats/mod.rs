//! Input and output formats: edge lists, graph6, signed-graph text, and the
//! JSON shapes shared by every subcommand.

pub mod edgelist;
pub mod graph6;
pub mod json;
pub mod signed_text;

pub use edgelist::parse_edge_list;
pub use graph6::{encode_graph6, parse_graph6};
pub use json::{rect_matrix_json, spectrum_json, sym_matrix_json};
pub use signed_text::{emit_signed, parse_signed};
