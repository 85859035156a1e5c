//! Graphviz export of corona products.

use std::fmt::Write;

use crate::graph::CoronaGraph;
use crate::labeling::{weights, EdgeLabeling};

/// Renders `corona` as an undirected DOT graph. Spine vertices are named
/// `s{i}`, leaves `l{i}_{j}`. With a labeling of matching length, edges carry
/// their labels and vertices their weights.
pub fn to_dot(corona: &CoronaGraph, labeling: Option<&EdgeLabeling>) -> String {
    let graph = corona.graph();
    let labeling = labeling.filter(|l| l.len() == graph.edge_count());
    let vertex_weights = labeling.and_then(|l| weights(graph, l).ok());

    let mut out = String::new();
    let spec = corona.spec();
    let _ = writeln!(out, "graph \"{}_{}_{}\" {{", spec.family, spec.n, spec.m);
    for v in 0..graph.vertex_count() {
        let name = corona.vertex_name(v);
        let shape = if corona.is_leaf(v) { "circle" } else { "doublecircle" };
        match &vertex_weights {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "  {name} [shape={shape}, label=\"{name}\\nw={}\"];",
                    w.get(v)
                );
            }
            None => {
                let _ = writeln!(out, "  {name} [shape={shape}];");
            }
        }
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let (a, b) = (corona.vertex_name(u), corona.vertex_name(v));
        match labeling {
            Some(l) => {
                let _ = writeln!(out, "  {a} -- {b} [label=\"{}\"];", l.label(e));
            }
            None => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona, CoronaSpec, Family};

    #[test]
    fn names_and_labels() {
        let g = corona(CoronaSpec::new(Family::Path, 2, 1).unwrap()).unwrap();
        let plain = to_dot(&g, None);
        assert!(plain.contains("s0 -- s1;"));
        assert!(plain.contains("s1 -- l1_0;"));

        let labeling = EdgeLabeling::new(vec![2, 1, 3]);
        let dot = to_dot(&g, Some(&labeling));
        assert!(dot.contains("s0 -- s1 [label=\"2\"]"));
        assert!(dot.contains("s1 [shape=doublecircle, label=\"s1\\nw=5\"]"));
        assert!(dot.starts_with("graph \"path_2_1\" {"));
    }
}
