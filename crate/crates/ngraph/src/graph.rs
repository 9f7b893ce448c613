use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use braid::BraidWord;
use serde::{Deserialize, Serialize};

use crate::NGraphError;

pub type Id = usize;

/// One end of an edge: `Half(e, s)` is the end `edges[e].ends[s]`, read as
/// the dart leaving that end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Half(pub Id, pub u8);

impl Half {
    pub fn edge(self) -> Id {
        self.0
    }

    pub fn side(self) -> usize {
        self.1 as usize
    }

    pub fn twin(self) -> Half {
        Half(self.0, 1 - self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum End {
    Vertex(Id),
    Boundary(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    Trivalent(u8),
    /// Colors c and c + 1.
    Hexagonal(u8),
    /// Colors at distance at least two, smaller first.
    Crossing(u8, u8),
}

impl VertexKind {
    pub fn degree(self) -> usize {
        match self {
            VertexKind::Trivalent(_) => 3,
            VertexKind::Hexagonal(_) => 6,
            VertexKind::Crossing(..) => 4,
        }
    }

    pub(crate) fn swapped(self, n: usize) -> Self {
        let f = |c: u8| n as u8 - c;
        match self {
            VertexKind::Trivalent(c) => VertexKind::Trivalent(f(c)),
            VertexKind::Hexagonal(c) => VertexKind::Hexagonal(f(c) - 1),
            VertexKind::Crossing(a, b) => VertexKind::Crossing(f(b), f(a)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub color: u8,
    pub ends: [End; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Surface {
    Disk,
    Annulus,
}

impl Surface {
    pub fn components(self) -> usize {
        match self {
            Surface::Disk => 1,
            Surface::Annulus => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    ColorOutOfRange { edge: Id },
    DanglingEnd { edge: Id, side: usize },
    PortCount { vertex: Id, expected: usize, found: usize },
    ForeignPort { vertex: Id, slot: usize },
    MonochromaticityViolated { vertex: Id },
    HexagonalColors { vertex: Id },
    CrossingColors { vertex: Id },
    BoundaryComponents { expected: usize, found: usize },
    ForeignMark { component: usize, index: usize },
    NotPlanar { euler: i64, expected: i64 },
}

/// An N-graph as a combinatorial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NGraph {
    pub n: usize,
    pub surface: Surface,
    pub vertices: BTreeMap<Id, VertexKind>,
    /// Counterclockwise ports at each vertex.
    pub rotation: BTreeMap<Id, Vec<Half>>,
    pub edges: BTreeMap<Id, Edge>,
    /// Marks per boundary component, read counterclockwise around the
    /// centre. Component 0 is the outer circle, component 1 the inner one.
    pub boundary: Vec<Vec<Half>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Dart {
    E(Half),
    Arc(usize, usize, bool),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    V(Id),
    M(usize, usize),
}

/// Counts of the map closed up by arcs along each boundary component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Topology {
    pub nodes: usize,
    pub links: usize,
    pub faces: usize,
    pub components: usize,
    pub hole_faces: usize,
    pub marked_components: usize,
}

impl NGraph {
    pub fn new(n: usize, surface: Surface) -> Self {
        NGraph {
            n,
            surface,
            vertices: BTreeMap::new(),
            rotation: BTreeMap::new(),
            edges: BTreeMap::new(),
            boundary: vec![Vec::new(); surface.components()],
        }
    }

    pub fn end(&self, h: Half) -> End {
        self.edges[&h.0].ends[h.side()]
    }

    pub fn color(&self, h: Half) -> u8 {
        self.edges[&h.0].color
    }

    /// Vertex and counterclockwise slot of a half-edge ending at a vertex.
    pub fn slot(&self, h: Half) -> Option<(Id, usize)> {
        match self.end(h) {
            End::Vertex(v) => self.rotation[&v].iter().position(|&x| x == h).map(|i| (v, i)),
            End::Boundary(_) => None,
        }
    }

    /// Component and index of a half-edge ending on the boundary.
    pub fn mark(&self, h: Half) -> Option<(usize, usize)> {
        match self.end(h) {
            End::Boundary(c) => self.boundary[c].iter().position(|&x| x == h).map(|i| (c, i)),
            End::Vertex(_) => None,
        }
    }

    /// Port `i` at `v`, taken cyclically.
    pub fn port(&self, v: Id, i: usize) -> Half {
        let r = &self.rotation[&v];
        r[i % r.len()]
    }

    pub fn next_vertex_id(&self) -> Id {
        self.vertices.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn next_edge_id(&self) -> Id {
        self.edges.keys().next_back().map_or(0, |k| k + 1)
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> Id {
        let v = self.next_vertex_id();
        self.vertices.insert(v, kind);
        self.rotation.insert(v, Vec::new());
        v
    }

    pub fn add_edge(&mut self, color: u8, ends: [End; 2]) -> Id {
        let e = self.next_edge_id();
        self.edges.insert(e, Edge { color, ends });
        e
    }

    pub(crate) fn set_end(&mut self, h: Half, end: End) {
        self.edges.get_mut(&h.0).expect("edge exists").ends[h.side()] = end;
    }

    /// Puts `new` where `old` sits, in a rotation or on the boundary.
    pub(crate) fn relocate(&mut self, old: Half, new: Half) {
        let end = self.end(old);
        let list = match end {
            End::Vertex(v) => self.rotation.get_mut(&v).expect("vertex exists"),
            End::Boundary(c) => &mut self.boundary[c],
        };
        let i = list.iter().position(|&x| x == old).expect("half-edge is listed at its end");
        list[i] = new;
        self.set_end(new, end);
    }

    pub fn boundary_colors(&self, component: usize) -> Vec<u8> {
        self.boundary[component].iter().map(|&h| self.color(h)).collect()
    }

    pub fn boundary_word(&self, component: usize) -> Result<BraidWord, NGraphError> {
        let letters = self.boundary_colors(component).into_iter().map(usize::from).collect();
        Ok(BraidWord::new(self.n, letters)?)
    }

    /// Exchanges color c with N - c everywhere.
    pub fn swap_colors(&self) -> NGraph {
        let mut g = self.clone();
        for k in g.vertices.values_mut() {
            *k = k.swapped(self.n);
        }
        for e in g.edges.values_mut() {
            e.color = self.n as u8 - e.color;
        }
        g
    }

    pub fn count_vertices(&self, pred: impl Fn(VertexKind) -> bool) -> usize {
        self.vertices.values().filter(|&&k| pred(k)).count()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let comps = self.surface.components();
        if self.boundary.len() != comps {
            out.push(Violation::BoundaryComponents { expected: comps, found: self.boundary.len() });
            return out;
        }
        for (&e, edge) in &self.edges {
            if edge.color == 0 || edge.color as usize >= self.n {
                out.push(Violation::ColorOutOfRange { edge: e });
            }
            for s in 0..2 {
                let h = Half(e, s as u8);
                let listed = match edge.ends[s] {
                    End::Vertex(v) => self.rotation.get(&v).map(|r| r.iter().filter(|&&x| x == h).count()),
                    End::Boundary(c) => self.boundary.get(c).map(|b| b.iter().filter(|&&x| x == h).count()),
                };
                if listed != Some(1) {
                    out.push(Violation::DanglingEnd { edge: e, side: s });
                }
            }
        }
        if self.rotation.keys().ne(self.vertices.keys()) {
            for &v in self.rotation.keys().chain(self.vertices.keys()) {
                if !self.rotation.contains_key(&v) || !self.vertices.contains_key(&v) {
                    out.push(Violation::PortCount { vertex: v, expected: 0, found: 0 });
                }
            }
            return out;
        }
        for (&v, &kind) in &self.vertices {
            let ports = &self.rotation[&v];
            if ports.len() != kind.degree() {
                out.push(Violation::PortCount { vertex: v, expected: kind.degree(), found: ports.len() });
                continue;
            }
            let mut colors = Vec::with_capacity(ports.len());
            let mut foreign = false;
            for (i, h) in ports.iter().enumerate() {
                match self.edges.get(&h.0) {
                    Some(e) if h.1 < 2 && e.ends[h.side()] == End::Vertex(v) => colors.push(e.color),
                    _ => {
                        out.push(Violation::ForeignPort { vertex: v, slot: i });
                        foreign = true;
                    }
                }
            }
            if foreign {
                continue;
            }
            match kind {
                VertexKind::Trivalent(c) => {
                    if colors.iter().any(|&x| x != c) {
                        out.push(Violation::MonochromaticityViolated { vertex: v });
                    }
                }
                VertexKind::Hexagonal(c) => {
                    let ok = (c as usize) + 1 < self.n
                        && (0..6).all(|i| {
                            let (a, b) = (colors[i], colors[(i + 1) % 6]);
                            (a == c && b == c + 1) || (a == c + 1 && b == c)
                        });
                    if !ok {
                        out.push(Violation::HexagonalColors { vertex: v });
                    }
                }
                VertexKind::Crossing(a, b) => {
                    let ok = a + 1 < b
                        && colors[0] == colors[2]
                        && colors[1] == colors[3]
                        && ((colors[0], colors[1]) == (a, b) || (colors[0], colors[1]) == (b, a));
                    if !ok {
                        out.push(Violation::CrossingColors { vertex: v });
                    }
                }
            }
        }
        for (c, marks) in self.boundary.iter().enumerate() {
            for (i, h) in marks.iter().enumerate() {
                match self.edges.get(&h.0) {
                    Some(e) if h.1 < 2 && e.ends[h.side()] == End::Boundary(c) => {}
                    _ => out.push(Violation::ForeignMark { component: c, index: i }),
                }
            }
        }
        if out.is_empty() {
            let t = self.topology();
            let euler = t.nodes as i64 - t.links as i64 + t.faces as i64 - t.hole_faces as i64;
            let expected = 2 * t.components as i64 - t.marked_components as i64;
            if euler != expected || t.hole_faces != t.marked_components {
                out.push(Violation::NotPlanar { euler, expected });
            }
        }
        out
    }

    /// Euler characteristic V - E + F of the graph on its surface, faces
    /// found by tracing the rotation system.
    pub fn euler_characteristic(&self) -> i64 {
        let t = self.topology();
        t.nodes as i64 - t.links as i64 + t.faces as i64 - t.hole_faces as i64
    }

    /// Number of faces of the graph on its surface.
    pub fn face_count(&self) -> usize {
        let t = self.topology();
        t.faces - t.hole_faces
    }

    pub(crate) fn topology(&self) -> Topology {
        let mut mark_at: HashMap<Half, (usize, usize)> = HashMap::new();
        for (c, marks) in self.boundary.iter().enumerate() {
            for (j, &h) in marks.iter().enumerate() {
                mark_at.insert(h, (c, j));
            }
        }
        let m = |c: usize| self.boundary[c].len();
        let start = |d: Dart| -> Node {
            match d {
                Dart::E(h) => match self.end(h) {
                    End::Vertex(v) => Node::V(v),
                    End::Boundary(_) => {
                        let (c, j) = mark_at[&h];
                        Node::M(c, j)
                    }
                },
                Dart::Arc(c, j, true) => Node::M(c, j),
                Dart::Arc(c, j, false) => Node::M(c, (j + 1) % m(c)),
            }
        };
        let reverse = |d: Dart| match d {
            Dart::E(h) => Dart::E(h.twin()),
            Dart::Arc(c, j, f) => Dart::Arc(c, j, !f),
        };
        let rot = |node: Node| -> Vec<Dart> {
            match node {
                Node::V(v) => self.rotation[&v].iter().map(|&h| Dart::E(h)).collect(),
                Node::M(c, j) => {
                    let e = Dart::E(self.boundary[c][j]);
                    let prev = Dart::Arc(c, (j + m(c) - 1) % m(c), false);
                    let next = Dart::Arc(c, j, true);
                    if c == 0 {
                        vec![e, prev, next]
                    } else {
                        vec![e, next, prev]
                    }
                }
            }
        };
        let succ = |d: Dart| -> Dart {
            let back = reverse(d);
            let r = rot(start(back));
            let i = r.iter().position(|&x| x == back).expect("dart listed at its start");
            r[(i + 1) % r.len()]
        };

        let mut darts: Vec<Dart> = Vec::new();
        for &e in self.edges.keys() {
            darts.push(Dart::E(Half(e, 0)));
            darts.push(Dart::E(Half(e, 1)));
        }
        let mut nodes: Vec<Node> = self.vertices.keys().map(|&v| Node::V(v)).collect();
        let mut marked_components = 0;
        for c in 0..self.boundary.len() {
            if m(c) > 0 {
                marked_components += 1;
            }
            for j in 0..m(c) {
                darts.push(Dart::Arc(c, j, true));
                darts.push(Dart::Arc(c, j, false));
                nodes.push(Node::M(c, j));
            }
        }

        let mut seen: HashSet<Dart> = HashSet::new();
        let (mut faces, mut hole_faces) = (0, 0);
        for &d0 in &darts {
            if seen.contains(&d0) {
                continue;
            }
            faces += 1;
            let mut only_arcs = true;
            let mut d = d0;
            loop {
                seen.insert(d);
                only_arcs &= matches!(d, Dart::Arc(..));
                d = succ(d);
                if d == d0 {
                    break;
                }
            }
            if only_arcs {
                hole_faces += 1;
            }
        }

        let index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &d in darts.iter().step_by(2) {
            let (a, b) = (index[&start(d)], index[&start(reverse(d))]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let components = (0..nodes.len()).filter(|&i| find(&mut parent, i) == i).count();
        Topology {
            nodes: nodes.len(),
            links: darts.len() / 2,
            faces,
            components,
            hole_faces,
            marked_components,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Wire::from(self)).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<NGraph, NGraphError> {
        let w: Wire = serde_json::from_str(s).map_err(|e| NGraphError::Json(e.to_string()))?;
        w.try_into()
    }

    /// Debug export of the map; boundary marks become point nodes.
    pub fn to_dot(&self) -> String {
        let palette = |c: u8| match c {
            1 => "blue",
            2 => "red",
            3 => "darkgreen",
            4 => "orange",
            _ => "black",
        };
        let name = |end: End, h: Half| match end {
            End::Vertex(v) => format!("v{v}"),
            End::Boundary(c) => {
                let j = self.boundary[c].iter().position(|&x| x == h).unwrap_or(usize::MAX);
                format!("b{c}_{j}")
            }
        };
        let mut s = String::from("graph ngraph {\n");
        for (&v, &k) in &self.vertices {
            let label = match k {
                VertexKind::Trivalent(c) => format!("T{c}"),
                VertexKind::Hexagonal(c) => format!("H{}{}", c, c + 1),
                VertexKind::Crossing(a, b) => format!("X{a}{b}"),
            };
            let _ = writeln!(s, "  v{v} [label=\"{label}\"];");
        }
        for (c, marks) in self.boundary.iter().enumerate() {
            for j in 0..marks.len() {
                let _ = writeln!(s, "  b{c}_{j} [shape=point];");
            }
        }
        for (&e, edge) in &self.edges {
            let a = name(edge.ends[0], Half(e, 0));
            let b = name(edge.ends[1], Half(e, 1));
            let _ = writeln!(s, "  {a} -- {b} [label=\"e{e}\", color=\"{}\"];", palette(edge.color));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
struct WireVertex {
    id: Id,
    kind: VertexKind,
}

#[derive(Serialize, Deserialize)]
struct WireEdge {
    id: Id,
    color: u8,
    ends: [End; 2],
}

#[derive(Serialize, Deserialize)]
struct WireMark {
    mark: usize,
    color: u8,
    edge: Half,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(rename = "N")]
    n: usize,
    surface: Surface,
    vertices: Vec<WireVertex>,
    edges: Vec<WireEdge>,
    rotation: BTreeMap<Id, Vec<Half>>,
    boundary: Vec<Vec<WireMark>>,
}

impl From<&NGraph> for Wire {
    fn from(g: &NGraph) -> Self {
        Wire {
            n: g.n,
            surface: g.surface,
            vertices: g.vertices.iter().map(|(&id, &kind)| WireVertex { id, kind }).collect(),
            edges: g.edges.iter().map(|(&id, e)| WireEdge { id, color: e.color, ends: e.ends }).collect(),
            rotation: g.rotation.clone(),
            boundary: g
                .boundary
                .iter()
                .map(|marks| {
                    marks
                        .iter()
                        .enumerate()
                        .map(|(mark, &edge)| WireMark { mark, color: g.edges.get(&edge.0).map_or(0, |e| e.color), edge })
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<Wire> for NGraph {
    type Error = NGraphError;

    fn try_from(w: Wire) -> Result<Self, NGraphError> {
        let bad = |m: &str| NGraphError::Json(m.to_string());
        let mut g = NGraph::new(w.n, w.surface);
        g.vertices = w.vertices.iter().map(|v| (v.id, v.kind)).collect();
        g.edges = w.edges.iter().map(|e| (e.id, Edge { color: e.color, ends: e.ends })).collect();
        if g.vertices.len() != w.vertices.len() || g.edges.len() != w.edges.len() {
            return Err(bad("duplicate ids"));
        }
        g.rotation = w.rotation;
        g.boundary = Vec::with_capacity(w.boundary.len());
        for marks in w.boundary {
            let mut list = Vec::with_capacity(marks.len());
            for (i, m) in marks.into_iter().enumerate() {
                if m.mark != i {
                    return Err(bad("boundary marks out of order"));
                }
                if g.edges.get(&m.edge.0).map(|e| e.color) != Some(m.color) {
                    return Err(bad("mark color disagrees with its edge"));
                }
                list.push(m.edge);
            }
            g.boundary.push(list);
        }
        Ok(g)
    }
}
