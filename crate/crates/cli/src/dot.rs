use std::fmt::Write;

use exchange_core::ExchangeMatrix;
use exchange_graph::ExchangeGraphSlice;

pub enum DotObject<'a> {
    Quiver(&'a ExchangeMatrix),
    Slice(&'a ExchangeGraphSlice),
}

/// Graphviz digraph with 1-based node names in index order.
///
/// Quiver arcs point from i to j when b[i][j] > 0 and carry |b[i][j]| as a
/// label when it exceeds one; a valued pair (|b[i][j]| != |b[j][i]|) is
/// labeled "b_ij,b_ji". Frozen vertices are boxes. Exchange-graph edges are
/// undirected arcs labeled by the 1-based mutation index.
pub fn export_dot(obj: DotObject) -> String {
    match obj {
        DotObject::Quiver(b) => quiver_dot(b),
        DotObject::Slice(g) => slice_dot(g),
    }
}

fn quiver_dot(b: &ExchangeMatrix) -> String {
    let (m, n) = (b.m(), b.n());
    let mut out = String::from("digraph quiver {\n");
    for i in 0..m {
        if i < n {
            let _ = writeln!(out, "  {};", i + 1);
        } else {
            let _ = writeln!(out, "  {} [shape=box];", i + 1);
        }
    }
    let entry = |i: usize, j: usize| -> i64 {
        match (i < n, j < n) {
            (_, true) => b.get(i, j),
            (true, false) => -b.get(j, i),
            (false, false) => 0,
        }
    };
    for i in 0..m {
        for j in 0..m {
            let (x, y) = (entry(i, j), entry(j, i));
            if x <= 0 {
                continue;
            }
            let label = if x != -y {
                format!(" [label=\"{},{}\"]", x, y.abs())
            } else if x > 1 {
                format!(" [label=\"{x}\"]")
            } else {
                String::new()
            };
            let _ = writeln!(out, "  {} -> {}{label};", i + 1, j + 1);
        }
    }
    out.push_str("}\n");
    out
}

fn slice_dot(g: &ExchangeGraphSlice) -> String {
    let mut out = String::from("digraph exchange {\n");
    for (i, c) in g.nodes.iter().enumerate() {
        let style = if g.is_frontier(i) { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  {} [label=\"{}\"{style}];", i + 1, &c.hash[..8]);
    }
    let mut edges = g.edges.clone();
    edges.sort_by_key(|e| (e.a.min(e.b), e.a.max(e.b), e.label));
    for e in edges {
        let _ = writeln!(out, "  {} -> {} [dir=none, label=\"{}\"];", e.a + 1, e.b + 1, e.label + 1);
    }
    out.push_str("}\n");
    out
}
