use std::collections::{BTreeMap, HashMap, HashSet};

use exchange_core::ExchangeMatrix;
use serde::{Deserialize, Serialize};

use crate::graph::{End, Half, Id, NGraph, VertexKind};
use crate::NGraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleKind {
    /// A single edge between two trivalent vertices.
    I,
    /// A chain through hexagonal points, entering and leaving by opposite ports.
    LongI,
    YUpper,
    YLower,
    /// Trivalent leaves joined through hexagonal points, each one either
    /// passed straight or branched in a Y.
    Tree,
}

impl CycleKind {
    pub fn is_y(self) -> bool {
        matches!(self, CycleKind::YUpper | CycleKind::YLower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub kind: CycleKind,
    pub edges: Vec<Id>,
}

impl Cycle {
    pub fn new(kind: CycleKind, edges: Vec<Id>) -> Self {
        Cycle { kind, edges }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSet {
    pub cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Recomputes every kind from the graph, keeping the upper/lower tag of Y's.
    pub(crate) fn reclassify(&mut self, g: &NGraph) -> Result<(), NGraphError> {
        for (i, c) in self.cycles.iter_mut().enumerate() {
            let k = classify_cycle(g, &c.edges).ok_or(NGraphError::InvalidCycle(i))?;
            c.kind = match k {
                CycleKind::YUpper if c.kind.is_y() => c.kind,
                other => other,
            };
        }
        Ok(())
    }
}

/// The shape of an edge set as a cycle, or `None` if it is not one. Y's
/// come back as `YUpper`.
pub fn classify_cycle(g: &NGraph, edges: &[Id]) -> Option<CycleKind> {
    if edges.is_empty() || edges.iter().collect::<HashSet<_>>().len() != edges.len() {
        return None;
    }
    let mut used: BTreeMap<Id, Vec<usize>> = BTreeMap::new();
    for &e in edges {
        let edge = g.edges.get(&e)?;
        for s in 0..2 {
            let End::Vertex(_) = edge.ends[s] else { return None };
            let (v, slot) = g.slot(Half(e, s as u8))?;
            used.entry(v).or_default().push(slot);
        }
    }
    let (mut passes, mut branches) = (0, 0);
    for (&v, slots) in &used {
        match (g.vertices[&v], slots.len()) {
            (VertexKind::Trivalent(_), 1) => {}
            (VertexKind::Hexagonal(_), 2) if slots[0].abs_diff(slots[1]) == 3 => passes += 1,
            (VertexKind::Hexagonal(_), 3) if slots.iter().all(|s| s % 2 == slots[0] % 2) => branches += 1,
            (VertexKind::Crossing(..), 2) if slots[0].abs_diff(slots[1]) == 2 => passes += 1,
            _ => return None,
        }
    }
    if used.len() != edges.len() + 1 {
        return None;
    }
    // connected, hence a tree
    let mut adj: HashMap<Id, Vec<Id>> = HashMap::new();
    for &e in edges {
        let [End::Vertex(a), End::Vertex(b)] = g.edges[&e].ends else { unreachable!() };
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let first = *used.keys().next()?;
    let mut seen = HashSet::from([first]);
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != used.len() {
        return None;
    }
    Some(match (edges.len(), passes, branches) {
        (1, _, _) => CycleKind::I,
        (_, _, 0) => CycleKind::LongI,
        (3, 0, 1) => CycleKind::YUpper,
        _ => CycleKind::Tree,
    })
}

/// b[i][j] sums, over trivalent vertices shared by cycles i and j, +1 when
/// the port of j immediately follows the port of i counterclockwise and -1
/// when it immediately precedes it.
///
/// Two cycles passing straight through the same hexagonal point also meet:
/// each pass has one port of the lower color, and b[i][j] gains +1 when the
/// lower port of j sits two slots counterclockwise of that of i, -1 when two
/// slots clockwise. Crossings contribute nothing.
pub fn intersection_quiver(g: &NGraph, set: &CycleSet) -> Result<ExchangeMatrix, NGraphError> {
    let n = set.len();
    let mut owner: HashMap<Id, usize> = HashMap::new();
    let mut at: BTreeMap<Id, Vec<(usize, usize)>> = BTreeMap::new();
    let mut through: BTreeMap<Id, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, c) in set.cycles.iter().enumerate() {
        classify_cycle(g, &c.edges).ok_or(NGraphError::InvalidCycle(i))?;
        let mut hex_ports: BTreeMap<Id, Vec<usize>> = BTreeMap::new();
        for &e in &c.edges {
            if let Some(&j) = owner.get(&e) {
                return Err(NGraphError::CyclesShareEdge(j, i));
            }
            owner.insert(e, i);
            for s in 0..2 {
                let h = Half(e, s);
                let (v, slot) = g.slot(h).expect("classified cycles end at vertices");
                match g.vertices[&v] {
                    VertexKind::Trivalent(_) => at.entry(v).or_default().push((i, slot)),
                    VertexKind::Hexagonal(low) if g.color(h) == low => hex_ports.entry(v).or_default().push(slot),
                    _ => {}
                }
            }
        }
        for (v, ports) in hex_ports {
            // one lower-colored port per straight pass; a Y uses three
            if let [p] = ports[..] {
                let passes = c.edges.iter().filter(|&&e| g.edges[&e].ends.contains(&End::Vertex(v))).count();
                if passes == 2 {
                    through.entry(v).or_default().push((i, p));
                }
            }
        }
    }
    let mut rows = vec![vec![0i64; n]; n];
    for uses in at.values() {
        for &(i, p) in uses {
            for &(j, q) in uses {
                if i == j {
                    continue;
                }
                if q == (p + 1) % 3 {
                    rows[i][j] += 1;
                } else if p == (q + 1) % 3 {
                    rows[i][j] -= 1;
                }
            }
        }
    }
    for uses in through.values() {
        for &(i, p) in uses {
            for &(j, q) in uses {
                if q == (p + 2) % 6 {
                    rows[i][j] += 1;
                } else if p == (q + 2) % 6 {
                    rows[i][j] -= 1;
                }
            }
        }
    }
    Ok(ExchangeMatrix::square(rows).expect("antisymmetric by construction"))
}
