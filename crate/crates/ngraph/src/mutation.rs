//! Legendrian mutation at I- and Y-cycles as local rewrites of the map.

use std::collections::HashMap;

use crate::cycles::{classify_cycle, CycleKind, CycleSet};
use crate::graph::{End, Half, Id, NGraph, VertexKind};
use crate::NGraphError;

pub fn mutate_cycle(g: &NGraph, set: &CycleSet, i: usize) -> Result<(NGraph, CycleSet), NGraphError> {
    let cycle = set.cycles.get(i).ok_or(NGraphError::IndexOutOfRange(i))?;
    let shape = classify_cycle(g, &cycle.edges).ok_or(NGraphError::InvalidCycle(i))?;
    let (g2, mut set2) = match shape {
        CycleKind::I => flip_i(g, set, i)?,
        CycleKind::YUpper => flip_y(g, set, i)?,
        _ => return Err(NGraphError::NotMutableKind(i)),
    };
    set2.reclassify(&g2)?;
    if shape == CycleKind::YUpper {
        set2.cycles[i].kind = match set.cycles[i].kind {
            CycleKind::YLower => CycleKind::YUpper,
            _ => CycleKind::YLower,
        };
    }
    Ok((g2, set2))
}

/// The edge e = v1 v2 turns a quarter: with ports (e, a, b) at v1 and
/// (e, c, d) at v2, the new vertices carry (e, b, c) and (e, d, a).
fn flip_i(g: &NGraph, set: &CycleSet, i: usize) -> Result<(NGraph, CycleSet), NGraphError> {
    let e = set.cycles[i].edges[0];
    let (v1, k1) = g.slot(Half(e, 0)).expect("I-cycle ends at vertices");
    let (v2, k2) = g.slot(Half(e, 1)).expect("I-cycle ends at vertices");
    if v1 == v2 {
        return Err(NGraphError::NotMutableKind(i));
    }
    let (a, b) = (g.port(v1, k1 + 1), g.port(v1, k1 + 2));
    let (c, d) = (g.port(v2, k2 + 1), g.port(v2, k2 + 2));
    if [a, b, c, d].iter().any(|h| h.0 == e) {
        return Err(NGraphError::NotMutableKind(i));
    }
    let mut out = g.clone();
    out.rotation.insert(v1, vec![Half(e, 0), b, c]);
    out.rotation.insert(v2, vec![Half(e, 1), d, a]);
    out.set_end(c, End::Vertex(v1));
    out.set_end(a, End::Vertex(v2));
    Ok((out, set.clone()))
}

/// A hexagonal point h with Y-edges y_k to trivalent t_k (k counterclockwise
/// at h) becomes a hexagonal point H with x-edges to trivalent T_k and
/// y-edges to new hexagonal points P_k sitting between t_k and t_(k+1).
///
/// At t_k the ports read (y_k, R_k, L_k); X_k is the x-edge following y_k at
/// h. P_k reads (T_k, L_k, X_k, R_(k+1), T_(k+1), H), T_k reads
/// (H, P_(k-1), P_k) and H reads (T_0, P_0, T_1, P_1, T_2, P_2). A cycle
/// that ended at t_k through R_k now runs straight across P_(k-1) to
/// T_(k-1); through L_k, across P_k to T_(k+1).
fn flip_y(g: &NGraph, set: &CycleSet, i: usize) -> Result<(NGraph, CycleSet), NGraphError> {
    let bad = || NGraphError::NotMutableKind(i);
    let ys = &set.cycles[i].edges;
    // the hexagonal end is the vertex shared by all three edges
    let ends = |e: Id| g.edges[&e].ends.map(|x| match x {
        End::Vertex(v) => v,
        End::Boundary(_) => unreachable!(),
    });
    let h = ends(ys[0])
        .into_iter()
        .find(|v| ys.iter().all(|&e| ends(e).contains(v)))
        .ok_or_else(bad)?;
    let VertexKind::Hexagonal(low) = g.vertices[&h] else { return Err(bad()) };
    let rot_h = &g.rotation[&h];
    let y_color = g.edges[&ys[0]].color;
    let x_color = if y_color == low { low + 1 } else { low };

    // Y-halves at h in counterclockwise order
    let mut at_h: Vec<(usize, Half)> = rot_h
        .iter()
        .enumerate()
        .filter(|(_, hh)| ys.contains(&hh.0))
        .map(|(k, &hh)| (k, hh))
        .collect();
    at_h.sort();
    if at_h.len() != 3 {
        return Err(bad());
    }
    let yh: Vec<Half> = at_h.iter().map(|x| x.1).collect();
    let xh: Vec<Half> = at_h.iter().map(|&(k, _)| rot_h[(k + 1) % 6]).collect();
    let mut t = Vec::new();
    let (mut r, mut l) = (Vec::new(), Vec::new());
    for &hh in &yh {
        let (tv, k) = g.slot(hh.twin()).ok_or_else(bad)?;
        if g.vertices[&tv] != VertexKind::Trivalent(y_color) || t.contains(&tv) {
            return Err(bad());
        }
        t.push(tv);
        r.push(g.port(tv, k + 1));
        l.push(g.port(tv, k + 2));
    }
    let outer: Vec<Half> = r.iter().chain(&l).chain(&xh).copied().collect();
    if outer.iter().any(|hh| ys.contains(&hh.0)) {
        return Err(bad());
    }
    for (j, c) in set.cycles.iter().enumerate() {
        if j != i && c.edges.iter().any(|e| xh.iter().any(|x| x.0 == *e)) {
            return Err(NGraphError::NotMutableKind(i));
        }
    }

    let mut out = g.clone();
    // T_k reuses t_k, H reuses h, the edge y_k becomes H T_k
    for &e in ys {
        out.edges.get_mut(&e).unwrap().color = x_color;
    }
    for &tv in &t {
        out.vertices.insert(tv, VertexKind::Trivalent(x_color));
    }
    let p: Vec<Id> = (0..3).map(|_| out.add_vertex(VertexKind::Hexagonal(low))).collect();
    let hp: Vec<Id> = (0..3).map(|k| out.add_edge(y_color, [End::Vertex(h), End::Vertex(p[k])])).collect();
    let tp: Vec<Id> = (0..3).map(|k| out.add_edge(x_color, [End::Vertex(t[k]), End::Vertex(p[k])])).collect();
    let pt: Vec<Id> = (0..3).map(|k| out.add_edge(x_color, [End::Vertex(p[k]), End::Vertex(t[(k + 1) % 3])])).collect();
    let ring = |k: usize| (k + 2) % 3;
    out.rotation.insert(h, (0..3).flat_map(|k| [yh[k], Half(hp[k], 0)]).collect());
    for k in 0..3 {
        out.rotation.insert(t[k], vec![yh[k].twin(), Half(pt[ring(k)], 1), Half(tp[k], 0)]);
        let next = (k + 1) % 3;
        out.rotation
            .insert(p[k], vec![Half(tp[k], 1), l[k], xh[k], r[next], Half(pt[k], 0), Half(hp[k], 1)]);
        for hh in [l[k], xh[k], r[next]] {
            out.set_end(hh, End::Vertex(p[k]));
        }
    }

    let mut extra: HashMap<Half, Id> = HashMap::new();
    for k in 0..3 {
        extra.insert(r[k], tp[ring(k)]);
        extra.insert(l[k], pt[k]);
    }
    let mut set2 = set.clone();
    for (j, c) in set2.cycles.iter_mut().enumerate() {
        if j == i {
            continue;
        }
        let mut added = Vec::new();
        for &e in &c.edges {
            for s in 0..2 {
                if let Some(&f) = extra.get(&Half(e, s)) {
                    added.push(f);
                }
            }
        }
        c.edges.extend(added);
    }
    Ok((out, set2))
}
