//! Isomorphism testing and canonical codes.
//!
//! Both operations start from the per-vertex pair-type profile (how many
//! `Forward`, `Backward`, `Mutual` and `Absent` pairs a vertex has) and iterate
//! it to a stable colouring: a vertex's next colour is its current colour
//! together with the multiset of `(pair type, colour)` over all other vertices.
//! Colours are numbered by sorting these signatures, so the numbering is
//! isomorphism-invariant and comparable across graphs refined together.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Permutation};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_BOUND: usize = 16;

type Signature = (u32, Vec<(u8, u32)>);

/// Refines the colourings of several graphs simultaneously until no class splits.
/// Colours of different graphs are drawn from one shared numbering.
fn refine_joint(graphs: &[&Digraph], colors: &mut [Vec<u32>]) {
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<Vec<Signature>> = Vec::with_capacity(graphs.len());
        let mut table: BTreeMap<Signature, u32> = BTreeMap::new();
        for (g, col) in graphs.iter().zip(colors.iter()) {
            let n = g.order();
            let mut gs = Vec::with_capacity(n);
            for x in 0..n {
                let mut nb: Vec<(u8, u32)> = (0..n)
                    .filter(|&y| y != x)
                    .map(|y| (g.pair_type_unchecked(x, y).code(), col[y]))
                    .collect();
                nb.sort_unstable();
                let sig = (col[x], nb);
                table.entry(sig.clone()).or_insert(0);
                gs.push(sig);
            }
            sigs.push(gs);
        }
        for (i, v) in table.values_mut().enumerate() {
            *v = i as u32;
        }
        for (gs, col) in sigs.iter().zip(colors.iter_mut()) {
            for (x, s) in gs.iter().enumerate() {
                col[x] = table[s];
            }
        }
        let now = count_classes(colors);
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn refine(g: &Digraph, colors: &mut Vec<u32>) {
    refine_joint(&[g], std::slice::from_mut(colors));
}

/// Stable colouring of a single graph starting from the uniform colouring.
pub fn stable_coloring(g: &Digraph) -> Vec<u32> {
    let mut c = vec![0; g.order()];
    refine(g, &mut c);
    c
}

/// The transposition `(u v)` is an automorphism.
fn are_twins(g: &Digraph, u: usize, v: usize) -> bool {
    if !g.pair_type_unchecked(u, v).is_self_symmetric() {
        return false;
    }
    (0..g.order())
        .filter(|&z| z != u && z != v)
        .all(|z| g.pair_type_unchecked(z, u) == g.pair_type_unchecked(z, v))
}

/// Canonical byte string: equal codes exactly for isomorphic graphs.
///
/// The code is the order followed by the upper triangle of the pair-type matrix
/// under the labelling that minimises it among the leaves of an
/// individualisation-refinement search.
pub fn canonical_code(g: &Digraph) -> Result<Vec<u8>> {
    canonical_form(g).map(|(code, _)| code)
}

/// Canonical code together with one labelling realising it
/// (`labelling.apply(v)` is the canonical position of `v`).
pub fn canonical_form(g: &Digraph) -> Result<(Vec<u8>, Permutation)> {
    let n = g.order();
    if n > CANONICAL_BOUND {
        return Err(Error::OrderBound {
            order: n,
            bound: CANONICAL_BOUND,
        });
    }
    let colors = stable_coloring(g);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search_canonical(g, colors, &mut best);
    let (code, lab) = best.expect("search visits at least one leaf");
    Ok((code, Permutation::new(lab).expect("leaf colouring is discrete")))
}

fn leaf_code(g: &Digraph, pos: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut at = vec![0; n];
    for (v, &p) in pos.iter().enumerate() {
        at[p] = v;
    }
    let mut code = Vec::with_capacity(1 + n * n.saturating_sub(1) / 2);
    code.push(n as u8);
    for i in 0..n {
        for j in i + 1..n {
            code.push(g.pair_type_unchecked(at[i], at[j]).code());
        }
    }
    code
}

fn search_canonical(g: &Digraph, colors: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let n = g.order();
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    if cells.len() == n {
        // discrete: colours are 0..n after refinement renumbering
        let mut rank: Vec<(u32, usize)> = colors.iter().copied().zip(0..).collect();
        rank.sort_unstable();
        let mut pos = vec![0; n];
        for (p, &(_, v)) in rank.iter().enumerate() {
            pos[v] = p;
        }
        let code = leaf_code(g, &pos);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, pos));
        }
        return;
    }
    let target = cells
        .values()
        .filter(|c| c.len() > 1)
        .min_by_key(|c| c.len())
        .expect("non-discrete colouring has a non-singleton cell")
        .clone();
    let mut explored: Vec<usize> = Vec::new();
    for &v in &target {
        if explored.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        explored.push(v);
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(w != v))
            .collect();
        refine(g, &mut next);
        search_canonical(g, next, best);
    }
}

/// Finds `f` with `(x, y)` an arc of `g` iff `(f(x), f(y))` is an arc of `h`.
///
/// Backtracking over vertices of `g`; a candidate image must share the jointly
/// refined profile colour and agree on the pair type with every vertex already
/// mapped. Every returned witness is re-checked against the arc sets.
pub fn find_isomorphism(g: &Digraph, h: &Digraph) -> Option<Permutation> {
    let n = g.order();
    if n != h.order() || g.arc_count() != h.arc_count() {
        return None;
    }
    let mut colors = vec![vec![0u32; n], vec![0u32; n]];
    refine_joint(&[g, h], &mut colors);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in cg {
        *class_size.entry(c).or_default() += 1;
    }
    // small classes first, then grow along already-placed vertices
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(g, h, cg, ch, &order, 0, &mut map, &mut used) {
        let perm = Permutation::new(map).ok()?;
        debug_assert!(g.is_isomorphism(h, &perm));
        if g.is_isomorphism(h, &perm) {
            return Some(perm);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Digraph,
    h: &Digraph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.pair_type_unchecked(u, v) == h.pair_type_unchecked(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Lower-case hex rendering of a canonical code, for reports.
pub fn code_hex(code: &[u8]) -> String {
    code.iter().map(|b| format!("{b:x}")).collect()
}
