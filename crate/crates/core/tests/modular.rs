mod common;

use common::*;
use primgraph::families::{gen_h, gen_r};
use primgraph::modular::*;
use primgraph::{Digraph, VertexSet};
use proptest::prelude::*;

fn vs(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..ProptestConfig::with_cases(256) })]

    #[test]
    fn pair_types_reverse(g in arb_digraph(2..=8)) {
        for x in 0..g.order() {
            for y in 0..g.order() {
                if x != y {
                    prop_assert_eq!(g.pair_type(y, x).unwrap(), g.pair_type(x, y).unwrap().reverse());
                }
            }
        }
    }

    #[test]
    fn complement_and_dual_are_involutions(g in arb_digraph(0..=9)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert_eq!(g.dual().dual(), g);
        prop_assert_eq!(g.complement().dual(), g.dual().complement());
    }

    #[test]
    fn is_interval_matches_definition(g in arb_digraph(1..=8), bits in any::<u32>()) {
        let xs = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assert_eq!(is_interval(&g, xs).unwrap(), brute_interval(&g, &all(&g), &vs(xs)));
    }

    #[test]
    fn closure_is_the_least_interval(g in arb_digraph(2..=7), a in 0usize..7, b in 0usize..7) {
        let n = g.order();
        let u = a % n;
        let v = (u + 1 + b % (n - 1)) % n;
        let m = minimal_interval_containing(&g, u, v).unwrap();
        prop_assert!(m.contains(u) && m.contains(v));
        prop_assert!(brute_interval(&g, &all(&g), &vs(m)));
        for s in subsets(&vs(m)) {
            if s.len() < m.len() && s.contains(&u) && s.contains(&v) {
                prop_assert!(!brute_interval(&g, &all(&g), &s), "smaller interval {:?} inside {}", s, m);
            }
        }
    }

    #[test]
    fn indecomposability_matches_definition(g in arb_digraph(0..=6)) {
        prop_assert_eq!(is_indecomposable(&g), brute_indecomposable(&g, &all(&g)));
        prop_assert_eq!(nontrivial_intervals(&g).unwrap().is_empty(), is_indecomposable(&g));
    }

    #[test]
    fn intervals_survive_complement_and_dual(g in arb_digraph(1..=7)) {
        let base = nontrivial_intervals(&g).unwrap();
        prop_assert_eq!(&nontrivial_intervals(&g.complement()).unwrap(), &base);
        prop_assert_eq!(&nontrivial_intervals(&g.dual()).unwrap(), &base);
    }

    #[test]
    fn outside_classes_match_definitions(g in arb_digraph(4..=7)) {
        let s = all(&g);
        for k in 3..=4 {
            for xs in subsets(&s).into_iter().filter(|x| x.len() == k && x.len() < s.len()) {
                if !brute_indecomposable(&g, &xs) {
                    continue;
                }
                let p = outside_partition(&g, set(&xs)).unwrap();
                for x in minus(&s, &xs) {
                    let mut ext = xs.clone();
                    ext.push(x);
                    let in_bracket = brute_interval(&g, &ext, &xs);
                    let in_ext = brute_indecomposable(&g, &ext);
                    let cells: Vec<usize> = xs.iter().copied().filter(|&u| brute_interval(&g, &ext, &[u, x])).collect();
                    let hits = usize::from(in_bracket) + usize::from(in_ext) + cells.len();
                    prop_assert_eq!(hits, 1, "x = {} lands in {} classes", x, hits);
                    prop_assert_eq!(p.bracket.contains(x), in_bracket);
                    prop_assert_eq!(p.ext.contains(x), in_ext);
                    if let Some(&u) = cells.first() {
                        prop_assert!(p.cell(u).contains(x));
                    }
                }
                prop_assert!(extension_bullet_violations(&g, &p, g.vertices()).is_empty());
            }
        }
    }

    #[test]
    fn existence_operations_return_indecomposable_sets(g in arb_digraph(5..=7), bits in any::<u32>()) {
        prop_assume!(is_indecomposable(&g));
        let a = bits as usize % g.order();
        let x = small_indecomposable_around(&g, a).unwrap();
        prop_assert!(x.contains(a) && (x.len() == 4 || x.len() == 5));
        prop_assert!(brute_indecomposable(&g, &vs(x)));
        for xs in primgraph::set::subsets_of_size(g.vertices(), 3) {
            if is_indecomposable(&g.induced(xs).unwrap().0) {
                let (u, v) = extend_by_two(&g, xs).unwrap();
                prop_assert!(brute_indecomposable(&g, &vs(xs.with(u).with(v))));
            }
        }
    }
}

#[test]
fn h7_cell_and_ext_examples() {
    let g = gen_h(3).unwrap();
    let p = outside_partition(&g, set(&[0, 1, 2, 3, 4])).unwrap();
    assert!(p.cell(4).contains(6));
    assert_eq!(p.class_of(6), Some(PartClass::Cell(4)));

    let (h, map) = g.delete(set(&[0])).unwrap();
    let new = |old: usize| map.iter().position(|&o| o == old).unwrap();
    let xs: VertexSet = (2..=6).map(new).collect();
    let p = outside_partition(&h, xs).unwrap();
    assert_eq!(p.class_of(new(1)), Some(PartClass::Ext));
}

#[test]
fn extend_by_two_examples() {
    let h7 = gen_h(3).unwrap();
    let (x, y) = extend_by_two(&h7, set(&[0, 1, 2])).unwrap();
    assert!(brute_indecomposable(&h7, &[0, 1, 2, x, y]));

    let r7 = gen_r(3).unwrap();
    let base = primgraph::set::subsets_of_size(r7.vertices(), 3)
        .find(|&t| is_indecomposable(&r7.induced(t).unwrap().0))
        .unwrap();
    let (x, y) = extend_by_two(&r7, base).unwrap();
    let mut s = vs(base);
    s.extend([x, y]);
    assert!(brute_indecomposable(&r7, &s));
}

#[test]
fn small_around_examples() {
    for (g, a) in [(gen_r(3).unwrap(), 6), (gen_h(3).unwrap(), 0)] {
        let x = small_indecomposable_around(&g, a).unwrap();
        assert!(x.contains(a));
        assert!(brute_indecomposable(&g, &vs(x)));
    }
}

#[test]
fn named_indecomposability_examples() {
    let h3 = Digraph::new(3, [(0, 1), (2, 0)]).unwrap();
    assert!(is_indecomposable(&h3));
    assert!(is_indecomposable(&gen_r(3).unwrap()));
    for n in 3..=8 {
        assert!(!is_indecomposable(&Digraph::chain(n).unwrap()));
    }
    assert!(!is_interval(&h3, set(&[0, 1])).unwrap());
    for (u, v) in [(0, 1), (0, 2), (1, 2)] {
        assert_eq!(minimal_interval_containing(&h3, u, v).unwrap(), h3.vertices());
    }
}
