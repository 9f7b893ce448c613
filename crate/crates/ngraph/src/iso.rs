//! Isomorphism of combinatorial maps preserving colors, kinds, rotations and
//! boundary components. Anchored on the outer boundary and propagated along
//! ports; whatever is not reached from the boundary is matched by search.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::graph::{End, Half, Id, NGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: BTreeMap<Id, Id>,
    /// Edge of the first graph to edge of the second and whether its two
    /// ends are exchanged.
    pub edges: BTreeMap<Id, (Id, bool)>,
}

#[derive(Clone, Default)]
struct State {
    halves: HashMap<Half, Half>,
    vertices: HashMap<Id, (Id, usize)>,
    used: HashMap<Id, Id>,
    mark_shift: HashMap<usize, usize>,
}

fn extend(g: &NGraph, h: &NGraph, st: &mut State, seeds: Vec<(Half, Half)>) -> bool {
    let mut queue: VecDeque<(Half, Half)> = seeds.into();
    while let Some((a, b)) = queue.pop_front() {
        if let Some(&x) = st.halves.get(&a) {
            if x != b {
                return false;
            }
            continue;
        }
        if g.color(a) != h.color(b) {
            return false;
        }
        st.halves.insert(a, b);
        queue.push_back((a.twin(), b.twin()));
        match (g.end(a), h.end(b)) {
            (End::Vertex(v), End::Vertex(w)) => {
                if g.vertices[&v] != h.vertices[&w] {
                    return false;
                }
                let (_, sa) = g.slot(a).expect("listed");
                let (_, sb) = h.slot(b).expect("listed");
                let d = g.vertices[&v].degree();
                let shift = (sb + d - sa) % d;
                match st.vertices.get(&v) {
                    Some(&(w0, s0)) => {
                        if (w0, s0) != (w, shift) {
                            return false;
                        }
                    }
                    None => {
                        if st.used.contains_key(&w) {
                            return false;
                        }
                        st.vertices.insert(v, (w, shift));
                        st.used.insert(w, v);
                        for i in 0..d {
                            queue.push_back((g.port(v, i), h.port(w, i + shift)));
                        }
                    }
                }
            }
            (End::Boundary(c), End::Boundary(c2)) => {
                if c != c2 {
                    return false;
                }
                let (_, i) = g.mark(a).expect("listed");
                let (_, j) = h.mark(b).expect("listed");
                let m = g.boundary[c].len();
                let shift = (j + m - i) % m;
                if *st.mark_shift.entry(c).or_insert(shift) != shift {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

fn complete(g: &NGraph, h: &NGraph, st: State) -> Option<State> {
    let Some(&v) = g.vertices.keys().find(|v| !st.vertices.contains_key(v)) else {
        return Some(st);
    };
    let d = g.vertices[&v].degree();
    for &w in h.vertices.keys() {
        if st.used.contains_key(&w) || h.vertices[&w] != g.vertices[&v] {
            continue;
        }
        for shift in 0..d {
            let mut next = st.clone();
            if extend(g, h, &mut next, vec![(g.port(v, 0), h.port(w, shift))]) {
                if let Some(done) = complete(g, h, next) {
                    return Some(done);
                }
            }
        }
    }
    None
}

pub fn isomorphism(g: &NGraph, h: &NGraph) -> Option<Isomorphism> {
    if g.n != h.n
        || g.surface != h.surface
        || g.vertices.len() != h.vertices.len()
        || g.edges.len() != h.edges.len()
        || g.boundary.iter().map(Vec::len).ne(h.boundary.iter().map(Vec::len))
    {
        return None;
    }
    let m = g.boundary[0].len();
    let shifts: Vec<usize> = if m == 0 { vec![0] } else { (0..m).collect() };
    for r in shifts {
        let seeds = (0..m).map(|j| (g.boundary[0][j], h.boundary[0][(j + r) % m])).collect();
        let mut st = State::default();
        if !extend(g, h, &mut st, seeds) {
            continue;
        }
        // marks of other components not reached yet are matched by search
        if let Some(done) = complete(g, h, st) {
            if done.halves.len() != 2 * g.edges.len() {
                continue;
            }
            let vertices = done.vertices.iter().map(|(&v, &(w, _))| (v, w)).collect();
            let edges = g
                .edges
                .keys()
                .map(|&e| {
                    let b = done.halves[&Half(e, 0)];
                    (e, (b.0, b.1 == 1))
                })
                .collect();
            return Some(Isomorphism { vertices, edges });
        }
    }
    None
}
