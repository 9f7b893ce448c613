use std::fmt::Write;

use serde_json::json;

use crate::ExchangeGraphSlice;

/// Graphviz rendering: nodes labeled by hash prefix, edges by 1-based mutation index.
pub fn to_dot(g: &ExchangeGraphSlice) -> String {
    let mut out = String::from("graph exchange {\n");
    for (i, c) in g.nodes.iter().enumerate() {
        let shape = if g.is_frontier(i) { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  n{i} [label=\"{}\"{shape}];", &c.hash[..8]);
    }
    for e in &g.edges {
        let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.a, e.b, e.label + 1);
    }
    out.push_str("}\n");
    out
}

/// JSON dump of the node set with summary fields.
pub fn to_json(g: &ExchangeGraphSlice) -> serde_json::Value {
    let nodes: Vec<_> = g
        .nodes
        .iter()
        .zip(&g.depths)
        .map(|(c, d)| {
            json!({
                "hash": c.hash,
                "depth": d,
                "cluster": c.seed.cluster().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "matrix": c.seed.matrix.to_rows(),
            })
        })
        .collect();
    let edges: Vec<_> = g.edges.iter().map(|e| json!([e.a, e.b, e.label + 1])).collect();
    json!({
        "node_count": g.node_count(),
        "edge_count": g.edge_count(),
        "complete": g.complete,
        "frontier": g.frontier,
        "nodes": nodes,
        "edges": edges,
    })
}
