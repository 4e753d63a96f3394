//! Value-semantic directed graphs on `0..n` with the four-valued pair-type algebra.
//!
//! A graph stores two bit matrices: `out[x]` holds the heads of arcs leaving `x`
//! and `inc[x]` the tails of arcs entering `x`. Both are kept in sync so that a
//! pair type is two bit tests and homogeneity of a vertex towards a set is two
//! word operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_ORDER};

/// Relation between the two vertices of an ordered pair `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairType {
    /// `x -- y`: no arc either way.
    Absent,
    /// `x → y` only.
    Forward,
    /// `y → x` only.
    Backward,
    /// `x ↔ y`.
    Mutual,
}

impl PairType {
    pub const ALL: [PairType; 4] = [
        PairType::Absent,
        PairType::Forward,
        PairType::Backward,
        PairType::Mutual,
    ];

    /// Pair types that denote a non-empty two-vertex subgraph.
    pub const NON_EMPTY: [PairType; 3] = [PairType::Forward, PairType::Backward, PairType::Mutual];

    #[inline]
    pub const fn from_bits(forward: bool, backward: bool) -> Self {
        match (forward, backward) {
            (false, false) => PairType::Absent,
            (true, false) => PairType::Forward,
            (false, true) => PairType::Backward,
            (true, true) => PairType::Mutual,
        }
    }

    /// `(arc x→y, arc y→x)`.
    #[inline]
    pub const fn bits(self) -> (bool, bool) {
        match self {
            PairType::Absent => (false, false),
            PairType::Forward => (true, false),
            PairType::Backward => (false, true),
            PairType::Mutual => (true, true),
        }
    }

    /// Type of the reversed pair `(y, x)`.
    #[inline]
    pub const fn reverse(self) -> Self {
        match self {
            PairType::Forward => PairType::Backward,
            PairType::Backward => PairType::Forward,
            t => t,
        }
    }

    /// Type of the same pair in the complement graph.
    #[inline]
    pub const fn complement(self) -> Self {
        match self {
            PairType::Absent => PairType::Mutual,
            PairType::Mutual => PairType::Absent,
            PairType::Forward => PairType::Backward,
            PairType::Backward => PairType::Forward,
        }
    }

    /// `Mutual` and `Absent` read the same in both directions.
    #[inline]
    pub const fn is_self_symmetric(self) -> bool {
        matches!(self, PairType::Absent | PairType::Mutual)
    }

    #[inline]
    pub const fn code(self) -> u8 {
        match self {
            PairType::Absent => 0,
            PairType::Forward => 1,
            PairType::Backward => 2,
            PairType::Mutual => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PairType::Absent => "--",
            PairType::Forward => "->",
            PairType::Backward => "<-",
            PairType::Mutual => "<->",
        }
    }
}

/// A bijection of `0..n`, stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

/// Directed loop-free graph on vertices `0..order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ArcList", into = "ArcList")]
pub struct Digraph {
    n: usize,
    out: [u32; MAX_ORDER],
    inc: [u32; MAX_ORDER],
}

/// Serialized form of a [`Digraph`].
#[derive(Serialize, Deserialize)]
struct ArcList {
    order: usize,
    arcs: Vec<(usize, usize)>,
}

impl From<Digraph> for ArcList {
    fn from(g: Digraph) -> Self {
        ArcList {
            order: g.n,
            arcs: g.arcs().collect(),
        }
    }
}

impl TryFrom<ArcList> for Digraph {
    type Error = Error;

    fn try_from(a: ArcList) -> Result<Self> {
        Digraph::new(a.order, a.arcs)
    }
}

impl Digraph {
    /// Arcless graph of the given order.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderBound {
                order: n,
                bound: MAX_ORDER,
            });
        }
        Ok(Digraph {
            n,
            out: [0; MAX_ORDER],
            inc: [0; MAX_ORDER],
        })
    }

    /// Builds a graph with exactly the listed arcs. Duplicate arcs are harmless.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::empty(n)?;
        for (x, y) in arcs {
            g.check_vertex(x)?;
            g.check_vertex(y)?;
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            g.add_arc_unchecked(x, y);
        }
        Ok(g)
    }

    /// Builds a graph from a pair-type oracle evaluated on every `x < y`.
    pub fn from_pair_types(n: usize, mut ty: impl FnMut(usize, usize) -> PairType) -> Result<Self> {
        let mut g = Digraph::empty(n)?;
        for x in 0..n {
            for y in x + 1..n {
                g.set_pair_type_unchecked(x, y, ty(x, y));
            }
        }
        Ok(g)
    }

    /// Complete symmetric graph.
    pub fn complete(n: usize) -> Result<Self> {
        Ok(Digraph::empty(n)?.complement())
    }

    /// The total order `0 < 1 < .. < n-1` as a transitive tournament.
    pub fn chain(n: usize) -> Result<Self> {
        Digraph::from_pair_types(n, |_, _| PairType::Forward)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: s.last().unwrap_or(0),
                order: self.n,
            })
        }
    }

    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.n && self.out[x] & (1 << y) != 0
    }

    /// Heads of arcs leaving `x`.
    #[inline]
    pub fn out_set(&self, x: usize) -> VertexSet {
        VertexSet::from_bits(self.out[x])
    }

    /// Tails of arcs entering `x`.
    #[inline]
    pub fn in_set(&self, x: usize) -> VertexSet {
        VertexSet::from_bits(self.inc[x])
    }

    #[inline]
    fn add_arc_unchecked(&mut self, x: usize, y: usize) {
        self.out[x] |= 1 << y;
        self.inc[y] |= 1 << x;
    }

    #[inline]
    fn remove_arc_unchecked(&mut self, x: usize, y: usize) {
        self.out[x] &= !(1 << y);
        self.inc[y] &= !(1 << x);
    }

    pub fn add_arc(&mut self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SelfLoop(x));
        }
        self.add_arc_unchecked(x, y);
        Ok(())
    }

    pub fn remove_arc(&mut self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        self.remove_arc_unchecked(x, y);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_pair_type_unchecked(&mut self, x: usize, y: usize, t: PairType) {
        let (f, b) = t.bits();
        if f {
            self.add_arc_unchecked(x, y)
        } else {
            self.remove_arc_unchecked(x, y)
        }
        if b {
            self.add_arc_unchecked(y, x)
        } else {
            self.remove_arc_unchecked(y, x)
        }
    }

    /// Rewrites both arc bits between `x` and `y` so that `(x, y)` has type `t`.
    pub fn set_pair_type(&mut self, x: usize, y: usize, t: PairType) -> Result<()> {
        self.check_pair(x, y)?;
        self.set_pair_type_unchecked(x, y, t);
        Ok(())
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            Err(Error::SameVertex(x))
        } else {
            Ok(())
        }
    }

    /// Pair type without range or distinctness checks; for kernels.
    #[inline]
    pub fn pair_type_unchecked(&self, x: usize, y: usize) -> PairType {
        PairType::from_bits(self.out[x] & (1 << y) != 0, self.inc[x] & (1 << y) != 0)
    }

    pub fn pair_type(&self, x: usize, y: usize) -> Result<PairType> {
        self.check_pair(x, y)?;
        Ok(self.pair_type_unchecked(x, y))
    }

    /// The `≡` relation on ordered pairs of distinct vertices.
    pub fn pairs_equivalent(&self, p: (usize, usize), q: (usize, usize)) -> Result<bool> {
        Ok(self.pair_type(p.0, p.1)? == self.pair_type(q.0, q.1)?)
    }

    /// `x ∼ Y`: every pair `(x, y)` with `y ∈ Y` has the same type.
    pub fn homogeneous(&self, x: usize, ys: VertexSet) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_set(ys)?;
        if ys.contains(x) {
            return Err(Error::Precondition(format!("vertex {x} belongs to {ys}")));
        }
        Ok(self.homogeneous_unchecked(x, ys))
    }

    #[inline]
    pub(crate) fn homogeneous_unchecked(&self, x: usize, ys: VertexSet) -> bool {
        let y = ys.bits();
        let o = self.out[x] & y;
        let i = self.inc[x] & y;
        (o == 0 || o == y) && (i == 0 || i == y)
    }

    /// Vertices of `within − ys` that see `ys` inhomogeneously.
    #[inline]
    pub(crate) fn splitters(&self, within: VertexSet, ys: VertexSet) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for z in within.difference(ys) {
            if !self.homogeneous_unchecked(z, ys) {
                s.insert(z);
            }
        }
        s
    }

    /// Induced subgraph on `xs`, relabelled to `0..|xs|` in increasing original
    /// order. The returned vector maps new labels to original vertices.
    pub fn induced(&self, xs: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        self.check_set(xs)?;
        let map = xs.to_vec();
        let mut g = Digraph::empty(map.len())?;
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if i != j && self.out[a] & (1 << b) != 0 {
                    g.add_arc_unchecked(i, j);
                }
            }
        }
        Ok((g, map))
    }

    /// `G − xs`.
    pub fn delete(&self, xs: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        self.induced(self.vertices().difference(xs))
    }

    /// Flips every off-diagonal arc bit.
    pub fn complement(&self) -> Digraph {
        let mut g = *self;
        let full = VertexSet::full(self.n).bits();
        for x in 0..self.n {
            g.out[x] = !self.out[x] & full & !(1 << x);
            g.inc[x] = !self.inc[x] & full & !(1 << x);
        }
        g
    }

    /// Reverses every arc.
    pub fn dual(&self) -> Digraph {
        let mut g = *self;
        g.out = self.inc;
        g.inc = self.out;
        g
    }

    /// Image of the graph under `perm`: `(perm(x), perm(y))` is an arc iff `(x, y)` is.
    pub fn relabel(&self, perm: &Permutation) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let mut g = Digraph::empty(self.n)?;
        for (x, y) in self.arcs() {
            g.add_arc_unchecked(perm.apply(x), perm.apply(y));
        }
        Ok(g)
    }

    /// True iff `perm` maps the arc set of `self` exactly onto that of `other`.
    pub fn is_isomorphism(&self, other: &Digraph, perm: &Permutation) -> bool {
        self.n == other.n && perm.len() == self.n && self.relabel(perm).map(|h| h == *other).unwrap_or(false)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.out_set(x).iter().map(move |y| (x, y)))
    }

    pub fn arc_count(&self) -> usize {
        self.out[..self.n].iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Counts of each pair type from `x` towards every other vertex, indexed by
    /// [`PairType::code`].
    pub fn profile(&self, x: usize) -> [u8; 4] {
        let others = VertexSet::full(self.n).without(x).bits();
        let o = self.out[x] & others;
        let i = self.inc[x] & others;
        let mutual = (o & i).count_ones() as u8;
        let fwd = (o & !i).count_ones() as u8;
        let bwd = (i & !o).count_ones() as u8;
        let absent = (self.n as u8 - 1) - mutual - fwd - bwd;
        [absent, fwd, bwd, mutual]
    }

    /// Every `i ≠ j` pair has `arc(i,j) = arc(j,i)`.
    pub fn is_symmetric(&self) -> bool {
        self.out == self.inc
    }

    /// `.dg` text: order, then one `0/1` row per vertex, newline terminated.
    pub fn to_dg(&self) -> String {
        let mut s = String::with_capacity((self.n + 1) * (self.n + 1) + 4);
        s.push_str(&self.n.to_string());
        s.push('\n');
        for x in 0..self.n {
            for y in 0..self.n {
                s.push(if self.out[x] & (1 << y) != 0 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_dg(text: &str) -> Result<Digraph> {
        let err = |line: usize, reason: &str| Error::Parse {
            line,
            reason: reason.to_string(),
        };
        if !text.ends_with('\n') {
            return Err(err(0, "missing final newline"));
        }
        let mut lines = text[..text.len() - 1].split('\n');
        let header = lines.next().ok_or_else(|| err(1, "empty input"))?;
        if header.is_empty() || !header.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(1, "header must be a decimal order"));
        }
        let n: usize = header.parse().map_err(|_| err(1, "order does not fit"))?;
        let mut g = Digraph::empty(n).map_err(|e| err(1, &e.to_string()))?;
        let mut rows = 0;
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            if i >= n {
                return Err(err(lineno, "more rows than the order"));
            }
            if line.len() != n {
                return Err(err(lineno, &format!("expected {n} characters, got {}", line.len())));
            }
            for (j, c) in line.bytes().enumerate() {
                match c {
                    b'0' => {}
                    b'1' if i == j => return Err(err(lineno, "diagonal entry set")),
                    b'1' => g.add_arc_unchecked(i, j),
                    _ => return Err(err(lineno, "characters must be 0 or 1")),
                }
            }
            rows += 1;
        }
        if rows != n {
            return Err(err(rows + 2, &format!("expected {n} rows, got {rows}")));
        }
        Ok(g)
    }

    /// Graphviz rendering: one directed edge per one-way arc and one
    /// undirected-styled edge per mutual pair. `highlight` vertices are filled.
    pub fn to_dot(&self, name: &str, highlight: VertexSet) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for v in 0..self.n {
            if highlight.contains(v) {
                s.push_str(&format!("  {v} [style=filled, fillcolor=gold];\n"));
            } else {
                s.push_str(&format!("  {v};\n"));
            }
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                match self.pair_type_unchecked(x, y) {
                    PairType::Forward => s.push_str(&format!("  {x} -> {y};\n")),
                    PairType::Backward => s.push_str(&format!("  {y} -> {x};\n")),
                    PairType::Mutual => s.push_str(&format!("  {x} -> {y} [dir=none];\n")),
                    PairType::Absent => {}
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dg())
    }
}

impl FromStr for Digraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Digraph::parse_dg(s)
    }
}
