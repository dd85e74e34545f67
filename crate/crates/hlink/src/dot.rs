//! DOT export for eyeballing constructions.

use crate::graph::Graph;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Render as an undirected DOT graph, vertices in ascending order.
/// Vertices present in `labels` get a label attribute verbatim.
pub fn export_dot(g: &Graph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        match labels.and_then(|m| m.get(&v)) {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn triangle() {
        let s = export_dot(&complete_graph(3), None);
        for line in ["0 -- 1;", "0 -- 2;", "1 -- 2;"] {
            assert!(s.contains(line), "missing {line} in {s}");
        }
    }

    #[test]
    fn labels_verbatim() {
        let mut labels = BTreeMap::new();
        for (i, name) in ["p1", "a3", "b1", "p4"].iter().enumerate() {
            labels.insert(i, name.to_string());
        }
        let g = complete_graph(4);
        let s = export_dot(&g, Some(&labels));
        for name in ["p1", "a3", "b1", "p4"] {
            assert!(s.contains(&format!("label=\"{name}\"")));
        }
    }

    #[test]
    fn empty_graph_header_footer_only() {
        assert_eq!(export_dot(&complete_graph(0), None), "graph {\n}\n");
    }
}
