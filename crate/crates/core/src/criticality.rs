//! Critical vertices, the indecomposability graph `I(G)` and the shape of its
//! non-trivial component.

use std::fmt;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{precondition, Result};
use crate::modular::{is_indecomposable, is_indecomposable_within, is_interval_within};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CriticalityReport {
    pub critical: VertexSet,
    pub noncritical: VertexSet,
    pub defect: usize,
}

/// Criticality of `G(within)`, assumed indecomposable.
pub fn criticality_within(g: &Digraph, within: VertexSet) -> CriticalityReport {
    let noncritical: VertexSet = within
        .iter()
        .filter(|&x| is_indecomposable_within(g, within.without(x)))
        .collect();
    CriticalityReport {
        critical: within.difference(noncritical),
        noncritical,
        defect: noncritical.len(),
    }
}

/// A vertex is critical when deleting it leaves a decomposable graph.
///
/// Small orders follow the convention that graphs of order ≤ 2 are
/// indecomposable, so every vertex of an indecomposable graph of order ≤ 3
/// is non-critical.
pub fn critical_vertices(g: &Digraph) -> Result<CriticalityReport> {
    if !is_indecomposable(g) {
        return precondition("criticality is only defined for indecomposable graphs");
    }
    Ok(criticality_within(g, g.vertices()))
}

/// Loop-free symmetric graph stored as neighbour bitsets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "SymGraphEdges")]
pub struct SymGraph {
    n: usize,
    adj: [u32; 32],
}

impl SymGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 32);
        SymGraph { n, adj: [0; 32] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut h = SymGraph::empty(n);
        for (x, y) in edges {
            h.add_edge(x, y);
        }
        h
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x != y && x < self.n && y < self.n, "bad edge ({x}, {y})");
        self.adj[x] |= 1 << y;
        self.adj[y] |= 1 << x;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.n && self.adj[x] & (1 << y) != 0
    }

    pub fn neighbors(&self, x: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[x])
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.neighbors(x).iter().filter(|&y| y > x) {
                out.push((x, y));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|x| self.degree(x)).sum::<usize>() / 2
    }

    /// Edges with both ends in `within`.
    pub fn edge_count_within(&self, within: VertexSet) -> usize {
        within
            .iter()
            .map(|x| self.neighbors(x).intersection(within).len())
            .sum::<usize>()
            / 2
    }

    pub fn component_of(&self, x: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(x);
        let mut frontier = seen;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = self.neighbors(v).intersection(within).difference(seen);
            seen = seen.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen
    }

    /// Connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(x) = left.first() {
            let c = self.component_of(x, self.vertices());
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// DOT rendering; vertices in `highlight` are drawn filled.
    pub fn to_dot(&self, name: &str, highlight: VertexSet) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            if highlight.contains(v) {
                s += &format!("  {v} [style=filled, fillcolor=lightgrey];\n");
            } else {
                s += &format!("  {v};\n");
            }
        }
        for (x, y) in self.edges() {
            s += &format!("  {x} -- {y};\n");
        }
        s += "}\n";
        s
    }
}

impl fmt::Debug for SymGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymGraph({}, {:?})", self.n, self.edges())
    }
}

pub(crate) fn indecomposability_graph_within(g: &Digraph, within: VertexSet) -> SymGraph {
    let mut h = SymGraph::empty(g.order());
    for x in within {
        for y in within.iter().filter(|&y| y > x) {
            if is_indecomposable_within(g, within.without(x).without(y)) {
                h.add_edge(x, y);
            }
        }
    }
    h
}

/// `{x, y}` is an edge iff `G − {x, y}` is indecomposable.
pub fn indecomposability_graph(g: &Digraph) -> Result<SymGraph> {
    if g.order() < 4 {
        return precondition(format!("order {} is below 4", g.order()));
    }
    if !is_indecomposable(g) {
        return precondition("graph is decomposable");
    }
    Ok(indecomposability_graph_within(g, g.vertices()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Support {
    /// The component of size ≥ 2 when there is exactly one.
    pub component: Option<VertexSet>,
    pub isolated: VertexSet,
    /// Number of components of size ≥ 2.
    pub multiplicity: usize,
}

pub fn support(h: &SymGraph) -> Support {
    let mut big = Vec::new();
    let mut isolated = VertexSet::EMPTY;
    for c in h.components() {
        if c.len() >= 2 {
            big.push(c);
        } else {
            isolated = isolated.union(c);
        }
    }
    Support {
        component: if big.len() == 1 { Some(big[0]) } else { None },
        isolated,
        multiplicity: big.len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShapeKind {
    Path {
        edges: usize,
    },
    /// Counted by vertices.
    Cycle {
        vertices: usize,
    },
    StarTree {
        source: usize,
        branches: Vec<usize>,
    },
    Edgeless,
    Other,
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKind::Path { edges } => write!(f, "path({edges} edges)"),
            ShapeKind::Cycle { vertices } => write!(f, "cycle({vertices} vertices)"),
            ShapeKind::StarTree { source, branches } => {
                write!(f, "starred tree(source {source}, branches {branches:?})")
            }
            ShapeKind::Edgeless => write!(f, "edgeless"),
            ShapeKind::Other => write!(f, "other"),
        }
    }
}

/// A recognised shape and a vertex sequence realising it.
///
/// * path: from the smaller end to the other end;
/// * cycle: from the least vertex, first towards its smaller neighbour;
/// * starred tree: the source, then each branch from the source outwards,
///   branches in the order of `branches` (ties by first vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub kind: ShapeKind,
    pub vertices: Vec<usize>,
}

fn walk(h: &SymGraph, within: VertexSet, from: usize, first: usize) -> Vec<usize> {
    let mut out = vec![first];
    let (mut prev, mut cur) = (from, first);
    loop {
        let next = h.neighbors(cur).intersection(within).without(prev);
        match next.first() {
            Some(v) if next.len() == 1 && v != from => {
                out.push(v);
                prev = cur;
                cur = v;
            }
            _ => return out,
        }
    }
}

/// Structural shape of `h` restricted to `restricted_to` (all vertices by default).
pub fn recognize_shape(h: &SymGraph, restricted_to: Option<VertexSet>) -> Shape {
    let w = restricted_to.unwrap_or_else(|| h.vertices());
    let other = Shape {
        kind: ShapeKind::Other,
        vertices: w.to_vec(),
    };
    let e = h.edge_count_within(w);
    if e == 0 {
        return Shape {
            kind: ShapeKind::Edgeless,
            vertices: w.to_vec(),
        };
    }
    let start = w.first().unwrap();
    if h.component_of(start, w) != w {
        return other;
    }
    let v = w.len();
    let deg = |x: usize| h.neighbors(x).intersection(w).len();
    let max_deg = w.iter().map(deg).max().unwrap();

    if e + 1 == v {
        if max_deg <= 2 {
            let end = w.iter().find(|&x| deg(x) == 1).unwrap();
            let first = h.neighbors(end).intersection(w).first().unwrap();
            let mut path = vec![end];
            path.extend(walk(h, w, end, first));
            return Shape {
                kind: ShapeKind::Path { edges: e },
                vertices: path,
            };
        }
        let hubs: Vec<usize> = w.iter().filter(|&x| deg(x) >= 3).collect();
        if hubs.len() != 1 {
            return other;
        }
        let source = hubs[0];
        let mut branches: Vec<Vec<usize>> = h
            .neighbors(source)
            .intersection(w)
            .iter()
            .map(|first| walk(h, w, source, first))
            .collect();
        branches.sort_by_key(|b| (b.len(), b[0]));
        let lengths = branches.iter().map(Vec::len).collect();
        let mut vertices = vec![source];
        vertices.extend(branches.into_iter().flatten());
        return Shape {
            kind: ShapeKind::StarTree {
                source,
                branches: lengths,
            },
            vertices,
        };
    }
    if e == v && v >= 3 && w.iter().all(|x| deg(x) == 2) {
        let first = h.neighbors(start).intersection(w).first().unwrap();
        let mut cyc = vec![start];
        cyc.extend(walk(h, w, start, first));
        if cyc.len() == v {
            return Shape {
                kind: ShapeKind::Cycle { vertices: v },
                vertices: cyc,
            };
        }
    }
    other
}

/// Serializable edge list of an indecomposability graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymGraphEdges {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<SymGraph> for SymGraphEdges {
    fn from(h: SymGraph) -> Self {
        SymGraphEdges {
            order: h.order(),
            edges: h.edges(),
        }
    }
}

/// Shape of `I′(G)`, or of `I(G)` itself when no unique support component exists.
pub fn support_shape(h: &SymGraph) -> (Support, Shape) {
    let sup = support(h);
    let shape = recognize_shape(h, sup.component);
    (sup, shape)
}

/// Why `I′` is none of: an odd cycle on every vertex, a path of ≥ 2 edges, or a
/// starred tree sourced at the non-critical vertex with branches ≥ 2 and at most
/// one odd branch (of length ≥ 3).
pub fn trichotomy_violation(h: &SymGraph, noncritical: usize) -> Option<String> {
    let (sup, shape) = support_shape(h);
    if sup.multiplicity != 1 {
        return Some(format!("{} components of size ≥ 2", sup.multiplicity));
    }
    let comp = sup.component.unwrap();
    match &shape.kind {
        ShapeKind::Cycle { vertices } if *vertices % 2 == 1 && *vertices == h.order() => None,
        ShapeKind::Path { edges } if *edges >= 2 => None,
        ShapeKind::StarTree { source, branches } => {
            let odd: Vec<usize> = branches.iter().copied().filter(|b| b % 2 == 1).collect();
            if *source != noncritical {
                Some(format!(
                    "star source {source} is not the non-critical vertex {noncritical}"
                ))
            } else if branches.iter().any(|&b| b < 2) {
                Some(format!("branch shorter than 2 in {branches:?}"))
            } else if odd.len() > 1 || odd.iter().any(|&b| b < 3) {
                Some(format!("bad odd branches in {branches:?}"))
            } else {
                None
            }
        }
        k => Some(format!("support {comp} has shape {k}")),
    }
}

/// Per-vertex outcome of the degree bound and interval conclusions for
/// critical vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDegreeEntry {
    pub vertex: usize,
    pub degree: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDegreeReport {
    pub entries: Vec<CriticalDegreeEntry>,
}

impl CriticalDegreeReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }
}

/// For a critical `x`: `d_I(x) ≤ 2`; a single neighbour `y` makes `S − {x, y}`
/// an interval of `G − x`; two neighbours `y, z` make `{y, z}` one.
pub(crate) fn critical_degree_within(
    g: &Digraph,
    within: VertexSet,
    report: &CriticalityReport,
    h: &SymGraph,
) -> CriticalDegreeReport {
    let entries = report
        .critical
        .iter()
        .map(|x| {
            let nb = h.neighbors(x).intersection(within);
            let rest = within.without(x);
            let ok = match nb.len() {
                0 => true,
                1 => is_interval_within(g, rest, rest.difference(nb)),
                2 => is_interval_within(g, rest, nb),
                _ => false,
            };
            CriticalDegreeEntry {
                vertex: x,
                degree: nb.len(),
                ok,
            }
        })
        .collect();
    CriticalDegreeReport { entries }
}

pub fn check_critical_degree(g: &Digraph) -> Result<CriticalDegreeReport> {
    if g.order() < 5 {
        return precondition(format!("order {} is below 5", g.order()));
    }
    if !is_indecomposable(g) {
        return precondition("graph is decomposable");
    }
    let s = g.vertices();
    let report = criticality_within(g, s);
    let h = indecomposability_graph_within(g, s);
    Ok(critical_degree_within(g, s, &report, &h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SymGraph {
        SymGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn path_shape() {
        let s = recognize_shape(&path(6), None);
        assert_eq!(s.kind, ShapeKind::Path { edges: 5 });
        assert_eq!(s.vertices, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn cycle_shape() {
        let mut h = path(7);
        h.add_edge(6, 0);
        let s = recognize_shape(&h, None);
        assert_eq!(s.kind, ShapeKind::Cycle { vertices: 7 });
        assert_eq!(s.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn star_shape() {
        // source 0; branches 1-2-3, 4-5, 6-7
        let h = SymGraph::from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7)]);
        let s = recognize_shape(&h, None);
        assert_eq!(
            s.kind,
            ShapeKind::StarTree {
                source: 0,
                branches: vec![2, 2, 3]
            }
        );
        assert_eq!(s.vertices, vec![0, 4, 5, 6, 7, 1, 2, 3]);
    }

    #[test]
    fn edgeless_and_other() {
        assert_eq!(recognize_shape(&SymGraph::empty(5), None).kind, ShapeKind::Edgeless);
        let two = SymGraph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(recognize_shape(&two, None).kind, ShapeKind::Other);
        assert_eq!(support(&two).multiplicity, 2);
        assert_eq!(support(&two).component, None);
        // two hubs
        let h = SymGraph::from_edges(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        assert_eq!(recognize_shape(&h, None).kind, ShapeKind::Other);
    }

    #[test]
    fn support_with_isolated() {
        let h = SymGraph::from_edges(5, [(0, 1), (1, 2)]);
        let s = support(&h);
        assert_eq!(s.component, Some([0, 1, 2].into_iter().collect()));
        assert_eq!(s.isolated, [3, 4].into_iter().collect());
        assert_eq!(recognize_shape(&h, s.component).kind, ShapeKind::Path { edges: 2 });
    }

    #[test]
    fn decomposable_rejected() {
        let c = Digraph::chain(5).unwrap();
        assert!(critical_vertices(&c).is_err());
        assert!(indecomposability_graph(&c).is_err());
        assert!(check_critical_degree(&c).is_err());
    }

    #[test]
    fn small_order_conventions() {
        let h3 = Digraph::new(3, [(0, 1), (2, 0)]).unwrap();
        assert_eq!(critical_vertices(&h3).unwrap().defect, 3);
        assert_eq!(critical_vertices(&Digraph::empty(0).unwrap()).unwrap().defect, 0);
        assert_eq!(critical_vertices(&Digraph::empty(1).unwrap()).unwrap().defect, 1);
    }
}
