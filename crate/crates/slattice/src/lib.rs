//! File formats and exports around `slattice-core`: the JSON tree and
//! inversion-list encodings, Hasse diagram JSON and DOT, and class
//! reports. All output is byte-deterministic for fixed inputs.

pub mod format;

pub use format::{
    class_report_json, diagram_dot, diagram_json, inversion_string, inversions_json,
    nu_tree_json, parse_signature, parse_tree_input, tree_from_json, tree_json,
};
