//! Greedy reduction by Move I (a pair of hexagonal points joined by three
//! consecutive parallel edges, or a pair of crossings joined by two, is
//! removed) and Move II read in the shrinking direction (two hexagonal
//! points and a trivalent vertex become one of each).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::{End, Half, Id, NGraph, VertexKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    MoveI,
    MoveII,
}

/// Applies the first matching site, by vertex id, until none is left or
/// `max_steps` moves were made.
pub fn move_reduce(g: &NGraph, moves: &[Move], max_steps: usize) -> NGraph {
    let mut cur = g.clone();
    for _ in 0..max_steps {
        let done = (moves.contains(&Move::MoveI) && move_i(&mut cur)) || (moves.contains(&Move::MoveII) && move_ii(&mut cur));
        if !done {
            break;
        }
    }
    cur
}

fn far_vertex(g: &NGraph, h: Half) -> Option<(Id, usize)> {
    g.slot(h.twin())
}

fn move_i(g: &mut NGraph) -> bool {
    let ids: Vec<Id> = g.vertices.keys().copied().collect();
    for u in ids {
        let kind = g.vertices[&u];
        if matches!(kind, VertexKind::Trivalent(_)) {
            continue;
        }
        let d = kind.degree();
        let k = d / 2;
        for p in 0..d {
            let Some((w, q0)) = far_vertex(g, g.port(u, p)) else { continue };
            if w == u || g.vertices[&w] != kind {
                continue;
            }
            // u's ports p.. meet w's ports in reverse, ending at q0
            let q = (q0 + d - (k - 1)) % d;
            let parallel = (0..k).all(|j| g.port(u, p + j).twin() == g.port(w, q + k - 1 - j));
            if !parallel {
                continue;
            }
            let a: Vec<Half> = (0..k).map(|j| g.port(u, p + d - 1 - j)).collect();
            let b: Vec<Half> = (0..k).map(|j| g.port(w, q + k + j)).collect();
            let outer: HashSet<Id> = a.iter().chain(&b).map(|h| h.0).collect();
            if outer.len() != 2 * k || (0..k).any(|j| g.color(a[j]) != g.color(b[j])) {
                continue;
            }
            let shared: Vec<Id> = (0..k).map(|j| g.port(u, p + j).0).collect();
            for j in 0..k {
                g.relocate(b[j].twin(), a[j]);
                g.edges.remove(&b[j].0);
            }
            for e in shared {
                g.edges.remove(&e);
            }
            for v in [u, w] {
                g.vertices.remove(&v);
                g.rotation.remove(&v);
            }
            return true;
        }
    }
    false
}

fn move_ii(g: &mut NGraph) -> bool {
    let ids: Vec<Id> = g.vertices.keys().copied().collect();
    for h1 in ids {
        let VertexKind::Hexagonal(low) = g.vertices[&h1] else { continue };
        for s in 0..6 {
            for dir in [1usize, 5] {
                if try_move_ii(g, h1, low, s, dir) {
                    return true;
                }
            }
        }
    }
    false
}

/// `dir` is 1 for the pictured orientation and 5 (that is, -1) for its mirror.
fn try_move_ii(g: &mut NGraph, h1: Id, low: u8, s: usize, dir: usize) -> bool {
    let at = |g: &NGraph, v: Id, i: usize, k: usize| g.port(v, i + k * dir);
    let eb = g.port(h1, s);
    let Some((h2, s2)) = far_vertex(g, eb) else { return false };
    if h2 == h1 || g.vertices[&h2] != VertexKind::Hexagonal(low) {
        return false;
    }
    let er = at(g, h1, s, 5);
    if at(g, h2, s2, 1) != er.twin() {
        return false;
    }
    let (r1, r2) = (at(g, h1, s, 1), at(g, h2, s2, 5));
    let (Some((r, k1)), Some((r_, k2))) = (far_vertex(g, r1), far_vertex(g, r2)) else { return false };
    let y = g.color(eb);
    let x = g.color(er);
    if r != r_ || g.vertices[&r] != VertexKind::Trivalent(x) || k2 != (k1 + dir) % 3 {
        return false;
    }
    let rbd = g.port(r, k1 + 2 * dir);
    let h1_right = at(g, h1, s, 2);
    let h1_rbd = at(g, h1, s, 3);
    let h1_left = at(g, h1, s, 4);
    let h2_left = at(g, h2, s2, 2);
    let h2_rbd = at(g, h2, s2, 3);
    let h2_right = at(g, h2, s2, 4);
    let outer = [rbd, h1_right, h1_rbd, h1_left, h2_left, h2_rbd, h2_right];
    let inner: HashSet<Id> = [eb.0, er.0, r1.0, r2.0].into();
    let mut seen = HashSet::new();
    for o in outer {
        if inner.contains(&o.0) || !seen.insert(o.0) {
            return false;
        }
        if let End::Vertex(v) = g.end(o.twin()) {
            if v == h1 || v == h2 || v == r {
                return false;
            }
        }
    }
    // H reuses h1, the trivalent T reuses h2, eb joins them
    let (hh, t) = (h1, h2);
    let mut hports = vec![rbd, h1_right, h1_rbd, eb, h2_rbd, h2_right];
    let mut tports = vec![eb.twin(), h1_left, h2_left];
    if dir != 1 {
        hports.reverse();
        tports.reverse();
    }
    for o in [rbd, h2_rbd, h2_right] {
        g.set_end(o, End::Vertex(hh));
    }
    g.set_end(h1_left, End::Vertex(t));
    g.vertices.insert(t, VertexKind::Trivalent(y));
    g.rotation.insert(hh, hports);
    g.rotation.insert(t, tports);
    for e in [er.0, r1.0, r2.0] {
        g.edges.remove(&e);
    }
    g.vertices.remove(&r);
    g.rotation.remove(&r);
    true
}
