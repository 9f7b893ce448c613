use std::collections::{HashMap, HashSet};

use cluster_pattern::{mutate_seed, LaurentPoly, PatternError, Seed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{canonical_form, GraphError, SeedClass};

pub const DEFAULT_NODE_CAP: usize = 100_000;

/// An undirected edge; `label` is the mutation index in the canonical
/// representative of `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// Explored part of an exchange graph. Node 0 is the start seed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExchangeGraphSlice {
    pub nodes: Vec<SeedClass>,
    pub depths: Vec<usize>,
    pub edges: Vec<Edge>,
    pub frontier: Vec<usize>,
    pub complete: bool,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl ExchangeGraphSlice {
    fn from_parts(nodes: Vec<SeedClass>, depths: Vec<usize>, edges: Vec<Edge>, frontier: Vec<usize>, complete: bool) -> Self {
        let index = nodes.iter().enumerate().map(|(i, c)| (c.hash.clone(), i)).collect();
        ExchangeGraphSlice { nodes, depths, edges, frontier, complete, index }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of_hash(&self, hash: &str) -> Option<usize> {
        if self.index.is_empty() && !self.nodes.is_empty() {
            return self.nodes.iter().position(|c| c.hash == hash);
        }
        self.index.get(hash).copied()
    }

    /// Node id of the class of `s`, if explored.
    pub fn lookup(&self, s: &Seed) -> Option<usize> {
        self.index_of_hash(&canonical_form(s).hash)
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| if e.a == u { Some(e.b) } else if e.b == u { Some(e.a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|e| e.a == u || e.b == u).count()
    }

    pub fn is_frontier(&self, u: usize) -> bool {
        self.frontier.contains(&u)
    }

    /// Nodes whose unfrozen cluster contains `v`; a frozen `v` keeps everything.
    pub fn induced_subgraph_fixing(&self, v: &LaurentPoly) -> Result<ExchangeGraphSlice, GraphError> {
        let keep: Vec<usize> = (0..self.nodes.len())
            .filter(|&u| {
                let s = &self.nodes[u].seed;
                s.variables.contains(v)
            })
            .collect();
        if keep.is_empty() {
            return Err(GraphError::VariableAbsent);
        }
        let mut remap = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let nodes = keep.iter().map(|&u| self.nodes[u].clone()).collect();
        let depths = keep.iter().map(|&u| self.depths[u]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| remap[e.a] != usize::MAX && remap[e.b] != usize::MAX)
            .map(|e| Edge { a: remap[e.a], b: remap[e.b], label: e.label })
            .collect();
        let frontier: Vec<usize> = self.frontier.iter().filter(|&&u| remap[u] != usize::MAX).map(|&u| remap[u]).collect();
        let complete = self.complete;
        Ok(ExchangeGraphSlice::from_parts(nodes, depths, edges, frontier, complete))
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

pub fn explore(s0: &Seed, depth: usize, node_cap: usize) -> Result<ExchangeGraphSlice, GraphError> {
    explore_with_jobs(s0, depth, node_cap, None)
}

/// Breadth-first exploration. Each level is mutated in parallel and merged in
/// a fixed order, so the result does not depend on scheduling.
pub fn explore_with_jobs(s0: &Seed, depth: usize, node_cap: usize, jobs: Option<usize>) -> Result<ExchangeGraphSlice, GraphError> {
    if node_cap == 0 {
        return Err(GraphError::InvalidArgument("node cap must be at least 1".into()));
    }
    match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| GraphError::InvalidArgument(e.to_string()))?;
            pool.install(|| bfs(s0, depth, node_cap))
        }
        None => bfs(s0, depth, node_cap),
    }
}

fn bfs(s0: &Seed, depth: usize, cap: usize) -> Result<ExchangeGraphSlice, GraphError> {
    let n = s0.n();
    let mut nodes = vec![canonical_form(s0)];
    let mut depths = vec![0];
    let mut index: HashMap<String, usize> = HashMap::from([(nodes[0].hash.clone(), 0)]);
    let mut edges = Vec::new();
    let mut edge_keys = HashSet::new();
    let mut frontier = Vec::new();
    let mut level = vec![0usize];
    let mut d = 0;
    while !level.is_empty() {
        let kids: Vec<Vec<SeedClass>> = level
            .par_iter()
            .map(|&u| (0..n).map(|k| Ok(canonical_form(&mutate_seed(&nodes[u].seed, k)?))).collect::<Result<_, PatternError>>())
            .collect::<Result<_, _>>()?;
        let mut next = Vec::new();
        for (&u, kids) in level.iter().zip(kids) {
            let mut open = false;
            for (k, c) in kids.into_iter().enumerate() {
                let v = match index.get(&c.hash) {
                    Some(&v) => v,
                    None if d < depth && nodes.len() < cap => {
                        let v = nodes.len();
                        index.insert(c.hash.clone(), v);
                        nodes.push(c);
                        depths.push(d + 1);
                        next.push(v);
                        v
                    }
                    None => {
                        open = true;
                        continue;
                    }
                };
                if edge_keys.insert((u.min(v), u.max(v))) {
                    edges.push(Edge { a: u, b: v, label: k });
                }
            }
            if open {
                frontier.push(u);
            }
        }
        level = next;
        d += 1;
    }
    let complete = frontier.is_empty();
    Ok(ExchangeGraphSlice { nodes, depths, edges, frontier, complete, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exchange_core::ExchangeMatrix;

    #[test]
    fn a2_pentagon() {
        let s0 = Seed::initial(ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap());
        let g = explore(&s0, 10, DEFAULT_NODE_CAP).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (5, 5));
        assert!(g.complete);
        assert!((0..5).all(|u| g.degree(u) == 2));
    }

    #[test]
    fn cap_marks_incomplete() {
        let s0 = Seed::initial(ExchangeMatrix::from_arrows(3, &[(0, 1), (2, 1)]));
        let g = explore(&s0, 20, 4).unwrap();
        assert_eq!(g.node_count(), 4);
        assert!(!g.complete);
        assert!(!g.frontier.is_empty());
        for u in 0..4 {
            if !g.is_frontier(u) {
                assert_eq!(g.degree(u), 3);
            }
        }
    }

    #[test]
    fn depth_zero_is_a_single_frontier_node() {
        let s0 = Seed::initial(ExchangeMatrix::from_arrows(2, &[(0, 1)]));
        let g = explore(&s0, 0, 10).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.frontier, vec![0]);
    }

    #[test]
    fn induced_a2_fixing_x1() {
        let s0 = Seed::initial(ExchangeMatrix::square(vec![vec![0, 1], vec![-1, 0]]).unwrap());
        let g = explore(&s0, 10, 100).unwrap();
        let h = g.induced_subgraph_fixing(&LaurentPoly::var(2, 0)).unwrap();
        assert_eq!((h.node_count(), h.edge_count()), (2, 1));
        let missing = cluster_pattern::parse_laurent("x1*x2", 2).unwrap();
        assert_eq!(g.induced_subgraph_fixing(&missing).unwrap_err(), GraphError::VariableAbsent);
    }
}
