//! Annular N-graphs swept out by braid movies, the Coxeter paddings built
//! from them, gluing a padding onto a graph, and Legendrian Coxeter mutation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use braid::fixtures::{affine_d_chain_moves, ngraph_word_affine_d, ngraph_word_tripod};
use braid::{apply_relation, replay, BraidWord, Rule};
use serde::{Deserialize, Serialize};

use crate::cycles::{intersection_quiver, CycleSet};
use crate::graph::{End, Half, NGraph, Surface, VertexKind};
use crate::NGraphError;

/// The annulus traced by a braid movie: the inner boundary reads `start`,
/// each braid relation leaves a hexagonal point, each commutation a
/// crossing, and the outer boundary reads the final word.
pub fn padding_from_movie(start: &BraidWord, rules: &[Rule]) -> Result<NGraph, NGraphError> {
    let mut g = NGraph::new(start.strands, Surface::Annulus);
    let mut pending = Vec::with_capacity(start.len());
    for &c in &start.letters {
        let e = g.add_edge(c as u8, [End::Boundary(1), End::Boundary(0)]);
        g.boundary[1].push(Half(e, 0));
        pending.push(Half(e, 1));
    }
    let mut word = start.clone();
    for &rule in rules {
        let next = apply_relation(&word, rule)?;
        // the annulus is the strip (angle, radius), which reverses
        // orientation: ports run lower right to left, then upper left to right
        let mut cross = |g: &mut NGraph, kind: VertexKind, pos: usize, k: usize| {
            let v = g.add_vertex(kind);
            let lower: Vec<Half> = pending[pos..pos + k].to_vec();
            let upper: Vec<Half> = (0..k)
                .map(|j| Half(g.add_edge(next.letters[pos + j] as u8, [End::Vertex(v), End::Boundary(0)]), 0))
                .collect();
            for &h in &lower {
                g.set_end(h, End::Vertex(v));
            }
            g.rotation.insert(v, lower.iter().rev().chain(&upper).copied().collect());
            for j in 0..k {
                pending[pos + j] = upper[j].twin();
            }
        };
        match rule {
            Rule::BraidRel { i, pos } => cross(&mut g, VertexKind::Hexagonal(i as u8), pos, 3),
            Rule::Comm { i, j, pos } => {
                cross(&mut g, VertexKind::Crossing(i.min(j) as u8, i.max(j) as u8), pos, 2)
            }
            Rule::CyclicRotate(k) => {
                if !pending.is_empty() {
                    let len = pending.len();
                    pending.rotate_left(k % len);
                }
            }
        }
        word = next;
    }
    g.boundary[0] = pending;
    Ok(g)
}

fn reversed_movie(start: &BraidWord, rules: &[Rule]) -> Result<(BraidWord, Vec<Rule>), NGraphError> {
    let end = replay(start, rules)?;
    let inv = rules.iter().rev().map(|r| r.inverse(start.len())).collect();
    Ok((end, inv))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PaddingLabel {
    C(usize, usize, usize),
    CBar(usize, usize, usize),
    CInv(usize, usize, usize),
    CBarInv(usize, usize, usize),
    CAffineD(usize),
    CAffineDInv(usize),
}

impl fmt::Display for PaddingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PaddingLabel::C(a, b, c) => write!(f, "C({a},{b},{c})"),
            PaddingLabel::CBar(a, b, c) => write!(f, "Cbar({a},{b},{c})"),
            PaddingLabel::CInv(a, b, c) => write!(f, "Cinv({a},{b},{c})"),
            PaddingLabel::CBarInv(a, b, c) => write!(f, "Cbarinv({a},{b},{c})"),
            PaddingLabel::CAffineD(n) => write!(f, "C(D{n})"),
            PaddingLabel::CAffineDInv(n) => write!(f, "Cinv(D{n})"),
        }
    }
}

impl FromStr for PaddingLabel {
    type Err = NGraphError;

    /// `C(3,3,3)`, `Cbar(..)`, `Cinv(..)`, `Cbarinv(..)`, `C(D4)`, `Cinv(D4)`.
    fn from_str(s: &str) -> Result<Self, NGraphError> {
        let unknown = || NGraphError::UnknownLabel(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = t.split_once('(').ok_or_else(unknown)?;
        let arg = rest.strip_suffix(')').ok_or_else(unknown)?;
        if let Some(n) = arg.strip_prefix('D').or_else(|| arg.strip_prefix("D~")) {
            let n: usize = n.trim_start_matches('~').parse().map_err(|_| unknown())?;
            if n < 4 {
                return Err(unknown());
            }
            return match head {
                "C" => Ok(PaddingLabel::CAffineD(n)),
                "Cinv" => Ok(PaddingLabel::CAffineDInv(n)),
                _ => Err(unknown()),
            };
        }
        let v: Vec<usize> = arg.split(',').map(|x| x.parse().map_err(|_| unknown())).collect::<Result<_, _>>()?;
        let [a, b, c] = v[..] else { return Err(unknown()) };
        if a == 0 || b == 0 || c == 0 {
            return Err(unknown());
        }
        match head {
            "C" => Ok(PaddingLabel::C(a, b, c)),
            "Cbar" => Ok(PaddingLabel::CBar(a, b, c)),
            "Cinv" => Ok(PaddingLabel::CInv(a, b, c)),
            "Cbarinv" => Ok(PaddingLabel::CBarInv(a, b, c)),
            _ => Err(unknown()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularPadding {
    pub label: PaddingLabel,
    pub graph: NGraph,
}

/// Inner word of the color-swapped tripod, then one staircase of braid
/// relations per arm sliding the lone letter through the arm block.
fn tripod_movie(a: usize, b: usize, c: usize) -> (BraidWord, Vec<Rule>) {
    let g = ngraph_word_tripod(a, b, c);
    let swapped = BraidWord::new(3, g.letters.iter().map(|&x| 3 - x).collect()).expect("swap stays in range");
    let mut rules = vec![Rule::CyclicRotate(2)];
    let mut offset = 0;
    for x in [a, b, c] {
        rules.extend((0..x).map(|t| Rule::BraidRel { i: 1, pos: offset + x - 1 - t }));
        offset += x + 2;
    }
    rules.push(Rule::CyclicRotate(1));
    (swapped, rules)
}

pub fn coxeter_padding(label: PaddingLabel) -> Result<AnnularPadding, NGraphError> {
    let unknown = || NGraphError::UnknownLabel(label.to_string());
    let graph = match label {
        PaddingLabel::C(a, b, c)
        | PaddingLabel::CBar(a, b, c)
        | PaddingLabel::CInv(a, b, c)
        | PaddingLabel::CBarInv(a, b, c) => {
            if a == 0 || b == 0 || c == 0 {
                return Err(unknown());
            }
            let (start, rules) = tripod_movie(a, b, c);
            let forward = matches!(label, PaddingLabel::C(..) | PaddingLabel::CBar(..));
            let g = if forward {
                padding_from_movie(&start, &rules)?
            } else {
                let (end, inv) = reversed_movie(&start, &rules)?;
                padding_from_movie(&end, &inv)?
            };
            if matches!(label, PaddingLabel::CBar(..) | PaddingLabel::CBarInv(..)) {
                g.swap_colors()
            } else {
                g
            }
        }
        PaddingLabel::CAffineD(n) | PaddingLabel::CAffineDInv(n) => {
            if n < 4 {
                return Err(unknown());
            }
            let start = ngraph_word_affine_d(n);
            let rules: Vec<Rule> = affine_d_chain_moves(n).concat();
            if matches!(label, PaddingLabel::CAffineDInv(_)) {
                padding_from_movie(&start, &rules)?
            } else {
                let (end, inv) = reversed_movie(&start, &rules)?;
                padding_from_movie(&end, &inv)?
            }
        }
    };
    Ok(AnnularPadding { label, graph })
}

/// Glues the inner boundary of the annulus `p` onto the outer boundary of
/// `g`, inner mark j meeting mark j + offset of `g`. Edges of `g` keep their
/// ids, so cycles of `g` carry over. `g` may be a disk or an annulus.
pub fn concatenate(p: &NGraph, g: &NGraph, offset: usize) -> Result<NGraph, NGraphError> {
    let mismatch = |m: String| NGraphError::BoundaryMismatch(m);
    if p.surface != Surface::Annulus {
        return Err(mismatch("the padding is not an annulus".into()));
    }
    if p.n != g.n {
        return Err(mismatch(format!("{} against {} sheets", p.n, g.n)));
    }
    let (inner, outer) = (&p.boundary[1], &g.boundary[0]);
    let m = inner.len();
    if m != outer.len() {
        return Err(mismatch(format!("{m} inner marks against {}", outer.len())));
    }
    for j in 0..m {
        let (a, b) = (p.color(inner[j]), g.color(outer[(j + offset) % m]));
        if a != b {
            return Err(mismatch(format!("inner mark {j} has color {a}, mark {} has {b}", (j + offset) % m)));
        }
    }

    const GLUE: usize = usize::MAX;
    let mut out = g.clone();
    let (vo, eo) = (out.next_vertex_id(), out.next_edge_id());
    let shift = |h: Half| Half(h.0 + eo, h.1);
    for (&v, &k) in &p.vertices {
        out.vertices.insert(v + vo, k);
        out.rotation.insert(v + vo, p.rotation[&v].iter().map(|&h| shift(h)).collect());
    }
    for (&e, edge) in &p.edges {
        let ends = edge.ends.map(|x| match x {
            End::Vertex(v) => End::Vertex(v + vo),
            End::Boundary(0) => End::Boundary(0),
            End::Boundary(_) => End::Boundary(GLUE),
        });
        out.edges.insert(e + eo, crate::graph::Edge { color: edge.color, ends });
    }
    for &h in outer {
        out.set_end(h, End::Boundary(GLUE));
    }
    out.boundary[0] = p.boundary[0].iter().map(|&h| shift(h)).collect();

    let mut redirect: HashMap<Half, Half> = HashMap::new();
    let resolve = |r: &HashMap<Half, Half>, mut h: Half| {
        while let Some(&x) = r.get(&h) {
            h = x;
        }
        h
    };
    for j in 0..m {
        let keep = resolve(&redirect, outer[(j + offset) % m]);
        let drop = resolve(&redirect, shift(inner[j]));
        if keep.0 == drop.0 {
            return Err(mismatch("gluing closes a loop".into()));
        }
        let far = drop.twin();
        if out.end(far) == End::Boundary(GLUE) {
            redirect.insert(far, keep);
        } else {
            out.relocate(far, keep);
        }
        out.edges.remove(&drop.0);
    }
    if out.edges.values().any(|e| e.ends.contains(&End::Boundary(GLUE))) {
        return Err(mismatch("gluing closes a loop".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Arm lengths and whether the colors are swapped.
    Tripod(usize, usize, usize, bool),
    AffineD(usize),
}

fn shape_of(g: &NGraph) -> Option<Shape> {
    if g.surface != Surface::Disk {
        return None;
    }
    let w = g.boundary_word(0).ok()?;
    if g.n == 3 {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &x in &w.letters {
            match runs.last_mut() {
                Some((y, k)) if *y == x => *k += 1,
                _ => runs.push((x, 1)),
            }
        }
        if runs.len() != 6 {
            return None;
        }
        let single = runs[0].0;
        let ok = (0..6).all(|i| if i % 2 == 0 { runs[i] == (single, 1) } else { runs[i].0 != single && runs[i].1 >= 2 });
        if !ok {
            return None;
        }
        return Some(Shape::Tripod(runs[1].1 - 1, runs[3].1 - 1, runs[5].1 - 1, single == 1));
    }
    if g.n == 4 && w.len() >= 20 {
        let n = w.len() - 16;
        if w == ngraph_word_affine_d(n) {
            return Some(Shape::AffineD(n));
        }
    }
    None
}

/// Realises the Coxeter mutation (direction 1) or its inverse (-1) by
/// gluing a Coxeter padding: tripods are color-swapped first, affine D
/// graphs are padded as they are. Cycles carry over unchanged.
pub fn legendrian_coxeter_mutation(
    g: &NGraph,
    set: &CycleSet,
    direction: i32,
) -> Result<(NGraph, CycleSet), NGraphError> {
    if direction != 1 && direction != -1 {
        return Err(NGraphError::Unsupported(format!("direction {direction}")));
    }
    let q = intersection_quiver(g, set)?;
    q.bipartite_signs().ok_or(NGraphError::NotBipartite)?;
    let shape = shape_of(g).ok_or_else(|| NGraphError::NotCatalogShape("boundary word is not a catalog word".into()))?;
    let (label, base) = match shape {
        Shape::Tripod(a, b, c, swapped) => {
            let label = match (direction, swapped) {
                (1, false) => PaddingLabel::C(a, b, c),
                (1, true) => PaddingLabel::CBar(a, b, c),
                (_, false) => PaddingLabel::CBarInv(a, b, c),
                (_, true) => PaddingLabel::CInv(a, b, c),
            };
            (label, g.swap_colors())
        }
        Shape::AffineD(n) => {
            let label = if direction == 1 { PaddingLabel::CAffineD(n) } else { PaddingLabel::CAffineDInv(n) };
            (label, g.clone())
        }
    };
    let pad = coxeter_padding(label)?;
    Ok((concatenate(&pad.graph, &base, 0)?, set.clone()))
}
