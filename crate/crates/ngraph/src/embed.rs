//! Builds rotation systems from a straight-line sketch: ports are ordered by
//! the angle at which their edge leaves the vertex, marks by their angle
//! around the centre.

use std::f64::consts::TAU;

use crate::graph::{End, Half, NGraph, Surface, VertexKind};

pub(crate) type P = (f64, f64);

#[derive(Clone, Copy, Debug)]
pub(crate) enum Node {
    V(usize),
    M(usize),
}

pub(crate) struct Sketch {
    n: usize,
    surface: Surface,
    centre: P,
    verts: Vec<(VertexKind, P)>,
    marks: Vec<(usize, P)>,
    edges: Vec<(u8, Node, Node)>,
}

fn angle(from: P, to: P) -> f64 {
    (to.1 - from.1).atan2(to.0 - from.0).rem_euclid(TAU)
}

impl Sketch {
    pub fn new(n: usize, surface: Surface, centre: P) -> Self {
        Sketch { n, surface, centre, verts: Vec::new(), marks: Vec::new(), edges: Vec::new() }
    }

    pub fn vertex(&mut self, kind: VertexKind, p: P) -> Node {
        self.verts.push((kind, p));
        Node::V(self.verts.len() - 1)
    }

    pub fn mark(&mut self, component: usize, p: P) -> Node {
        self.marks.push((component, p));
        Node::M(self.marks.len() - 1)
    }

    pub fn edge(&mut self, color: u8, a: Node, b: Node) -> usize {
        self.edges.push((color, a, b));
        self.edges.len() - 1
    }

    /// `edge` to a fresh mark.
    pub fn leg(&mut self, color: u8, a: Node, to: P) -> usize {
        let m = self.mark(0, to);
        self.edge(color, a, m)
    }

    fn pos(&self, x: Node) -> P {
        match x {
            Node::V(i) => self.verts[i].1,
            Node::M(i) => self.marks[i].1,
        }
    }

    /// Reading of each boundary component starts at the first mark whose
    /// angle is at least `start[c]`.
    pub fn finish(self, start: &[f64]) -> NGraph {
        let mut g = NGraph::new(self.n, self.surface);
        for (i, &(kind, _)) in self.verts.iter().enumerate() {
            g.vertices.insert(i, kind);
        }
        let mut ports: Vec<Vec<(f64, Half)>> = vec![Vec::new(); self.verts.len()];
        let mut marks: Vec<Vec<(f64, Half)>> = vec![Vec::new(); self.surface.components()];
        for (e, &(color, a, b)) in self.edges.iter().enumerate() {
            let mut ends = [End::Boundary(0); 2];
            for (s, (x, y)) in [(a, b), (b, a)].into_iter().enumerate() {
                let h = Half(e, s as u8);
                match x {
                    Node::V(i) => {
                        ends[s] = End::Vertex(i);
                        ports[i].push((angle(self.pos(x), self.pos(y)), h));
                    }
                    Node::M(i) => {
                        let c = self.marks[i].0;
                        ends[s] = End::Boundary(c);
                        let t = (angle(self.centre, self.pos(x)) - start[c]).rem_euclid(TAU);
                        marks[c].push((t, h));
                    }
                }
            }
            g.edges.insert(e, crate::graph::Edge { color, ends });
        }
        let sorted = |mut v: Vec<(f64, Half)>| {
            v.sort_by(|a, b| a.0.total_cmp(&b.0));
            v.into_iter().map(|x| x.1).collect::<Vec<_>>()
        };
        for (i, p) in ports.into_iter().enumerate() {
            g.rotation.insert(i, sorted(p));
        }
        g.boundary = marks.into_iter().map(sorted).collect();
        g
    }
}
