//! Intervals (modules, clans) and the partition of the vertices outside an
//! indecomposable subset.
//!
//! Most kernels take a `within` set and work on the induced subgraph `G(within)`
//! in place, without relabelling. Statements about `G(X ∪ {x, y})` are evaluated
//! by passing `X ∪ {x, y}` as `within`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{precondition, Error, Result};
use crate::set::{subsets_of_size, VertexSet};

/// Largest order accepted by the subset-enumeration oracle.
pub const SUBSET_ORACLE_BOUND: usize = 12;

/// `xs` is an interval of `G(within)`: every vertex of `within − xs` sees `xs`
/// homogeneously.
#[inline]
pub fn is_interval_within(g: &Digraph, within: VertexSet, xs: VertexSet) -> bool {
    within.difference(xs).iter().all(|z| g.homogeneous_unchecked(z, xs))
}

pub fn is_interval(g: &Digraph, xs: VertexSet) -> Result<bool> {
    g.check_set(xs)?;
    Ok(is_interval_within(g, g.vertices(), xs))
}

/// Smallest interval of `G(within)` containing `seed`: keep absorbing every
/// vertex that splits the current set.
#[inline]
pub fn closure_within(g: &Digraph, within: VertexSet, seed: VertexSet) -> VertexSet {
    let mut xs = seed;
    loop {
        let s = g.splitters(within, xs);
        if s.is_empty() {
            return xs;
        }
        xs = xs.union(s);
    }
}

pub fn minimal_interval_containing(g: &Digraph, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(closure_within(g, g.vertices(), VertexSet::pair(u, v)))
}

/// `G(within)` has only trivial intervals. Sets of size at most 2 count as
/// indecomposable.
pub fn is_indecomposable_within(g: &Digraph, within: VertexSet) -> bool {
    if within.len() <= 2 {
        return true;
    }
    for u in within {
        for v in within.iter().filter(|&v| v > u) {
            if closure_within(g, within, VertexSet::pair(u, v)) != within {
                return false;
            }
        }
    }
    true
}

pub fn is_indecomposable(g: &Digraph) -> bool {
    is_indecomposable_within(g, g.vertices())
}

/// Some nontrivial interval of `G(within)`, or `None` when it is indecomposable.
/// Returns the smallest pair closure that is not the whole set.
pub fn find_nontrivial_interval_within(g: &Digraph, within: VertexSet) -> Option<VertexSet> {
    if within.len() <= 2 {
        return None;
    }
    let mut best: Option<VertexSet> = None;
    for u in within {
        for v in within.iter().filter(|&v| v > u) {
            let c = closure_within(g, within, VertexSet::pair(u, v));
            if c != within && best.is_none_or(|b| c.len() < b.len()) {
                best = Some(c);
            }
        }
    }
    best
}

pub fn find_nontrivial_interval(g: &Digraph) -> Option<VertexSet> {
    find_nontrivial_interval_within(g, g.vertices())
}

/// Every interval `X` of `G(within)` with `2 ≤ |X| < |within|`, by plain
/// subset enumeration. Independent of the closure kernels; used as an oracle.
pub fn nontrivial_intervals_within(g: &Digraph, within: VertexSet) -> Vec<VertexSet> {
    let k = within.len();
    let members = within.to_vec();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << k) {
        let size = mask.count_ones() as usize;
        if size < 2 || size >= k {
            continue;
        }
        let xs: VertexSet = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        // check each outside vertex pair-by-pair, not through the word kernel
        let ok = within.difference(xs).iter().all(|z| {
            let first = xs.first().unwrap();
            xs.iter()
                .all(|y| g.pair_type_unchecked(z, y) == g.pair_type_unchecked(z, first))
        });
        if ok {
            out.push(xs);
        }
    }
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

pub fn nontrivial_intervals(g: &Digraph) -> Result<Vec<VertexSet>> {
    if g.order() > SUBSET_ORACLE_BOUND {
        return Err(Error::OrderBound {
            order: g.order(),
            bound: SUBSET_ORACLE_BOUND,
        });
    }
    Ok(nontrivial_intervals_within(g, g.vertices()))
}

/// Partition of `S − X` relative to an indecomposable `G(X)` with `|X| ≥ 3`:
/// `ext` (adding the vertex keeps `G(X ∪ {x})` indecomposable), `bracket` (`X` stays
/// an interval) and one cell per `u ∈ X` (`{u, x}` is an interval of `G(X ∪ {x})`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PXPartition {
    pub base: VertexSet,
    pub ext: VertexSet,
    pub bracket: VertexSet,
    pub cells: BTreeMap<usize, VertexSet>,
}

impl PXPartition {
    pub fn cell(&self, u: usize) -> VertexSet {
        self.cells.get(&u).copied().unwrap_or_default()
    }

    /// Which class an outside vertex belongs to.
    pub fn class_of(&self, x: usize) -> Option<PartClass> {
        if self.ext.contains(x) {
            Some(PartClass::Ext)
        } else if self.bracket.contains(x) {
            Some(PartClass::Bracket)
        } else {
            self.cells
                .iter()
                .find(|(_, c)| c.contains(x))
                .map(|(&u, _)| PartClass::Cell(u))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartClass {
    Ext,
    Bracket,
    Cell(usize),
}

/// `{u, x}` is an interval of `G(X ∪ {x})`: no `z ∈ X − {u}` tells them apart.
#[inline]
fn in_cell(g: &Digraph, xs: VertexSet, u: usize, x: usize) -> bool {
    let ux = VertexSet::pair(u, x);
    xs.without(u).iter().all(|z| g.homogeneous_unchecked(z, ux))
}

/// Classifies every vertex outside `xs` within `G(within)`. The three membership
/// tests run independently; a vertex landing in zero or several classes is
/// reported as a theorem violation.
pub fn outside_partition_within(g: &Digraph, within: VertexSet, xs: VertexSet) -> Result<PXPartition> {
    let mut part = PXPartition {
        base: xs,
        ext: VertexSet::EMPTY,
        bracket: VertexSet::EMPTY,
        cells: xs.iter().map(|u| (u, VertexSet::EMPTY)).collect(),
    };
    for x in within.difference(xs) {
        let mut hits = 0;
        if g.homogeneous_unchecked(x, xs) {
            part.bracket.insert(x);
            hits += 1;
        }
        for u in xs {
            if in_cell(g, xs, u, x) {
                part.cells.get_mut(&u).unwrap().insert(x);
                hits += 1;
            }
        }
        if is_indecomposable_within(g, xs.with(x)) {
            part.ext.insert(x);
            hits += 1;
        }
        if hits != 1 {
            return Err(Error::TheoremViolation(format!(
                "vertex {x} lies in {hits} classes of the partition outside {xs}"
            )));
        }
    }
    Ok(part)
}

pub fn outside_partition(g: &Digraph, xs: VertexSet) -> Result<PXPartition> {
    g.check_set(xs)?;
    if xs.len() < 3 {
        return precondition(format!("base set {xs} has fewer than 3 vertices"));
    }
    if !is_indecomposable_within(g, xs) {
        return precondition(format!("G({xs}) is decomposable"));
    }
    outside_partition_within(g, g.vertices(), xs)
}

/// One failed instance of the three extension statements attached to the partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BulletViolation {
    pub base: VertexSet,
    pub x: usize,
    pub y: usize,
    pub bullet: &'static str,
}

/// Checks, for every eligible outside pair `(x, y)`, the conclusions about a
/// decomposable `G(X ∪ {x, y})`:
/// * `x ∈ X(u)`, `y ∉ X ∪ X(u)`: `{u, x}` is an interval of it;
/// * `x ∈ [X]`, `y ∉ X ∪ [X]`: `X ∪ {y}` is an interval of it;
/// * `x ≠ y ∈ Ext(X)`: `{x, y}` is an interval of it.
pub fn extension_bullet_violations(g: &Digraph, part: &PXPartition, within: VertexSet) -> Vec<BulletViolation> {
    let xs = part.base;
    let outside = within.difference(xs);
    let mut bad = Vec::new();
    for x in outside {
        for y in outside.without(x) {
            let w = xs.with(x).with(y);
            let (label, claim) = match part.class_of(x) {
                Some(PartClass::Cell(u)) if !part.cell(u).contains(y) => ("cell", VertexSet::pair(u, x)),
                Some(PartClass::Bracket) if !part.bracket.contains(y) => ("bracket", xs.with(y)),
                Some(PartClass::Ext) if x < y && part.ext.contains(y) => ("ext", VertexSet::pair(x, y)),
                _ => continue,
            };
            if !is_indecomposable_within(g, w) && !is_interval_within(g, w, claim) {
                bad.push(BulletViolation {
                    base: xs,
                    x,
                    y,
                    bullet: label,
                });
            }
        }
    }
    bad
}

/// Least pair `{x, y} ⊆ S − X` (lexicographic) with `G(X ∪ {x, y})` indecomposable.
pub fn extend_by_two(g: &Digraph, xs: VertexSet) -> Result<(usize, usize)> {
    g.check_set(xs)?;
    let s = g.vertices();
    if !is_indecomposable(g) {
        return precondition("graph is decomposable");
    }
    if xs.len() < 3 || s.difference(xs).len() < 2 {
        return precondition(format!("need |X| ≥ 3 and |S − X| ≥ 2, got X = {xs}"));
    }
    if !is_indecomposable_within(g, xs) {
        return precondition(format!("G({xs}) is decomposable"));
    }
    extend_by_two_unchecked(g, xs)
}

pub(crate) fn extend_by_two_unchecked(g: &Digraph, xs: VertexSet) -> Result<(usize, usize)> {
    let outside = g.vertices().difference(xs);
    for x in outside {
        for y in outside.iter().filter(|&y| y > x) {
            if is_indecomposable_within(g, xs.with(x).with(y)) {
                return Ok((x, y));
            }
        }
    }
    Err(Error::TheoremViolation(format!(
        "no pair outside {xs} extends it to an indecomposable subgraph"
    )))
}

/// Least `X` containing `a` with `|X| ∈ {4, 5}` and `G(X)` indecomposable; size 4
/// before size 5, lexicographic within a size.
pub fn small_indecomposable_around(g: &Digraph, a: usize) -> Result<VertexSet> {
    g.check_vertex(a)?;
    if g.order() < 5 {
        return precondition(format!("order {} is below 5", g.order()));
    }
    if !is_indecomposable(g) {
        return precondition("graph is decomposable");
    }
    small_indecomposable_around_unchecked(g, a)
}

pub(crate) fn small_indecomposable_around_unchecked(g: &Digraph, a: usize) -> Result<VertexSet> {
    let rest = g.vertices().without(a);
    for k in [3, 4] {
        for t in subsets_of_size(rest, k) {
            let xs = t.with(a);
            if is_indecomposable_within(g, xs) {
                return Ok(xs);
            }
        }
    }
    Err(Error::TheoremViolation(format!(
        "no indecomposable subset of size 4 or 5 contains vertex {a}"
    )))
}
