//! The initial N-graphs of the affine D and tripod families with their
//! numbered cycles.

use std::f64::consts::{PI, TAU};

use exchange_core::{DynkinType, Family};
use serde::{Deserialize, Serialize};

use crate::cycles::{Cycle, CycleKind, CycleSet};
use crate::embed::{Node, Sketch, P};
use crate::graph::{NGraph, Surface, VertexKind};
use crate::NGraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CatalogType {
    /// D~n, n >= 4: a 4-graph with n + 1 cycles.
    AffineD(usize),
    /// Tripod (a, b, c): a 3-graph with a + b + c - 2 cycles.
    Tripod(usize, usize, usize),
}

impl CatalogType {
    pub fn from_dynkin(t: DynkinType) -> Result<Self, NGraphError> {
        match (t.family, t.rank) {
            (Family::AffD, n) if n >= 4 => Ok(CatalogType::AffineD(n)),
            (Family::AffE, 6) => Ok(CatalogType::Tripod(3, 3, 3)),
            (Family::AffE, 7) => Ok(CatalogType::Tripod(2, 4, 4)),
            (Family::AffE, 8) => Ok(CatalogType::Tripod(2, 3, 6)),
            _ => Err(NGraphError::Unsupported(format!("no catalog N-graph for {t:?}"))),
        }
    }
}

pub fn build_initial(t: CatalogType) -> Result<(NGraph, CycleSet), NGraphError> {
    match t {
        CatalogType::AffineD(n) if n >= 4 => Ok(affine_d(n)),
        CatalogType::Tripod(a, b, c) if a >= 1 && b >= 1 && c >= 1 => Ok(tripod([a, b, c])),
        _ => Err(NGraphError::Unsupported(format!("{t:?}"))),
    }
}

fn polar(r: f64, deg: f64) -> P {
    let t = deg * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

/// Central hexagonal point; arms of blue trivalent vertices at 60, 180 and
/// 300 degrees with legs alternating left and right; red legs in between.
fn tripod(arms: [usize; 3]) -> (NGraph, CycleSet) {
    const BLUE: u8 = 1;
    const RED: u8 = 2;
    let big = *arms.iter().max().unwrap() as f64 + 1.0;
    let mut s = Sketch::new(3, Surface::Disk, (0.0, 0.0));
    let hex = s.vertex(VertexKind::Hexagonal(1), (0.0, 0.0));
    for k in 0..3 {
        s.leg(RED, hex, polar(big, 120.0 * k as f64));
    }
    let mut y = Vec::new();
    let mut singles = Vec::new();
    for (k, &x) in arms.iter().enumerate() {
        let th = 60.0 + 120.0 * k as f64;
        let vs: Vec<Node> = (1..=x).map(|j| s.vertex(VertexKind::Trivalent(BLUE), polar(j as f64, th))).collect();
        y.push(s.edge(BLUE, hex, vs[0]));
        for w in vs.windows(2) {
            singles.push(s.edge(BLUE, w[0], w[1]));
        }
        s.leg(BLUE, vs[x - 1], polar(big, th));
        for (j, &v) in vs.iter().enumerate() {
            let phi = 55.0 - 40.0 * j as f64 / x as f64;
            let side = if j % 2 == 0 { 1.0 } else { -1.0 };
            s.leg(BLUE, v, polar(big, th + side * phi));
        }
    }
    let g = s.finish(&[TAU - 0.01]);
    let mut cycles = vec![Cycle::new(CycleKind::YUpper, y)];
    cycles.extend(singles.into_iter().map(|e| Cycle::new(CycleKind::I, vec![e])));
    (g, CycleSet { cycles })
}

/// Green/red hexagonal point h1 on the left and its blue/red mirror h2 on the
/// right, each with two red arms of two trivalent vertices, joined by a red
/// spine of n - 4 trivalent vertices; a blue cap near h1.
fn affine_d(n: usize) -> (NGraph, CycleSet) {
    const BLUE: u8 = 1;
    const RED: u8 = 2;
    const GREEN: u8 = 3;
    let m = n - 4;
    let (x1, x2) = (0.0, (m + 1) as f64);
    let mut s = Sketch::new(4, Surface::Disk, ((x1 + x2) / 2.0, 0.0));
    let h1 = s.vertex(VertexKind::Hexagonal(2), (x1, 0.0));
    let h2 = s.vertex(VertexKind::Hexagonal(1), (x2, 0.0));

    // one side in local coordinates with its hexagonal point at the origin
    let side = |s: &mut Sketch, h: Node, f: &dyn Fn(f64, f64) -> P, legs: u8| {
        for (x, y) in [(0.0, 3.0), (0.0, -3.0), (-3.0, 0.0)] {
            s.leg(legs, h, f(x, y));
        }
        let t1 = s.vertex(VertexKind::Trivalent(RED), f(-1.0, 1.0));
        let t1p = s.vertex(VertexKind::Trivalent(RED), f(-2.0, 1.0));
        let t2 = s.vertex(VertexKind::Trivalent(RED), f(-1.0, -1.0));
        let t2p = s.vertex(VertexKind::Trivalent(RED), f(-1.0, -2.0));
        let to = [s.edge(RED, h, t1), s.edge(RED, h, t2)];
        s.leg(RED, t1, f(-1.0, 3.0));
        let i1 = s.edge(RED, t1, t1p);
        s.leg(RED, t1p, f(-3.0, 1.0));
        s.leg(RED, t1p, f(-2.0, 3.0));
        s.leg(RED, t2, f(-3.0, -1.0));
        let i2 = s.edge(RED, t2, t2p);
        s.leg(RED, t2p, f(-1.0, -3.0));
        s.leg(RED, t2p, f(-3.0, -2.0));
        (to, [i1, i2])
    };
    let (to1, arms1) = side(&mut s, h1, &|x, y| (x1 + x, y), GREEN);
    let cap = [s.mark(0, (x1 - 1.75, 3.0)), s.mark(0, (x1 - 1.25, 3.0))];
    s.edge(BLUE, cap[0], cap[1]);
    let (to2, arms2) = if m % 2 == 0 {
        side(&mut s, h2, &|x, y| (x2 - x, -y), BLUE)
    } else {
        side(&mut s, h2, &|x, y| (x2 - x, y), BLUE)
    };

    let mut prev = h1;
    let mut spine = Vec::new();
    for j in 1..=m {
        let c = s.vertex(VertexKind::Trivalent(RED), (x1 + j as f64, 0.0));
        spine.push(s.edge(RED, prev, c));
        let y = if j % 2 == 1 { -3.0 } else { 3.0 };
        s.leg(RED, c, (x1 + j as f64, y));
        prev = c;
    }
    spine.push(s.edge(RED, prev, h2));

    let centre = ((x1 + x2) / 2.0, 0.0);
    let start = (-3.0f64 - centre.1).atan2(x1 + 0.5 - centre.0).rem_euclid(TAU);
    let g = s.finish(&[start]);

    let single = |e| Cycle::new(CycleKind::I, vec![e]);
    let mut cycles = Vec::new();
    if m == 0 {
        cycles.push(Cycle::new(CycleKind::Tree, vec![to1[0], to1[1], spine[0], to2[0], to2[1]]));
        cycles.extend(arms1.into_iter().chain(arms2).map(single));
    } else {
        cycles.push(Cycle::new(CycleKind::YUpper, vec![to1[0], to1[1], spine[0]]));
        cycles.extend(arms1.into_iter().map(single));
        cycles.extend(spine[1..m].iter().map(|&e| single(e)));
        cycles.push(Cycle::new(CycleKind::YUpper, vec![spine[m], to2[0], to2[1]]));
        cycles.extend(arms2.into_iter().map(single));
    }
    (g, CycleSet { cycles })
}
