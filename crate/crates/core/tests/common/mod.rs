//! Brute-force oracles written straight from the definitions, using only
//! `has_arc`. Deliberately slow and independent of the library kernels.
#![allow(dead_code)]

use primgraph::{Digraph, Permutation, VertexSet};
use proptest::prelude::*;

pub fn arcs_agree(g: &Digraph, x: usize, y: usize, u: usize, v: usize) -> bool {
    g.has_arc(x, y) == g.has_arc(u, v) && g.has_arc(y, x) == g.has_arc(v, u)
}

/// `xs` is an interval of `g` restricted to `within`.
pub fn brute_interval(g: &Digraph, within: &[usize], xs: &[usize]) -> bool {
    within
        .iter()
        .filter(|v| !xs.contains(v))
        .all(|&z| xs.iter().all(|&a| xs.iter().all(|&b| arcs_agree(g, z, a, z, b))))
}

pub fn subsets(vs: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << vs.len())
        .map(|m| (0..vs.len()).filter(|i| m >> i & 1 == 1).map(|i| vs[i]).collect())
        .collect()
}

pub fn brute_indecomposable(g: &Digraph, within: &[usize]) -> bool {
    subsets(within)
        .into_iter()
        .filter(|s| s.len() >= 2 && s.len() < within.len())
        .all(|s| !brute_interval(g, within, &s))
}

pub fn all(g: &Digraph) -> Vec<usize> {
    (0..g.order()).collect()
}

pub fn minus(vs: &[usize], out: &[usize]) -> Vec<usize> {
    vs.iter().copied().filter(|v| !out.contains(v)).collect()
}

pub fn brute_noncritical(g: &Digraph) -> Vec<usize> {
    let s = all(g);
    s.iter()
        .copied()
        .filter(|&x| brute_indecomposable(g, &minus(&s, &[x])))
        .collect()
}

pub fn brute_ig_edges(g: &Digraph) -> Vec<(usize, usize)> {
    let s = all(g);
    let mut out = Vec::new();
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if brute_indecomposable(g, &minus(&s, &[x, y])) {
                out.push((x, y));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn brute_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    g.order() == h.order()
        && permutations(g.order())
            .into_iter()
            .any(|p| (0..g.order()).all(|x| (0..g.order()).all(|y| x == y || g.has_arc(x, y) == h.has_arc(p[x], p[y]))))
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn graph(n: usize, codes: &[u8]) -> Digraph {
    let mut g = Digraph::empty(n).unwrap();
    let mut i = 0;
    for x in 0..n {
        for y in x + 1..n {
            let c = codes[i % codes.len().max(1)];
            if c & 1 == 1 {
                g.add_arc(x, y).unwrap();
            }
            if c & 2 == 2 {
                g.add_arc(y, x).unwrap();
            }
            i += 1;
        }
    }
    g
}

/// Random labelled digraph of order in `orders`.
pub fn arb_digraph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Digraph> {
    orders.prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u8..4, pairs.max(1)).prop_map(move |c| graph(n, &c))
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}
