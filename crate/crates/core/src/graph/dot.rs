use std::fmt::Write;

use super::Graph;
use crate::labeling::{Labeling, LabelingError};

/// Renders `g` as an undirected DOT document. Nodes are named by index and
/// display their label when a labeling is given.
pub fn export_dot(g: &Graph, labels: Option<&Labeling>) -> Result<String, LabelingError> {
    if let Some(f) = labels {
        f.check_order(g)?;
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let text = labels.map_or(v, |f| f.label(v));
        writeln!(out, "  {v} [label=\"{text}\"];").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
