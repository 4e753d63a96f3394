mod common;

use common::*;
use primgraph::families::{gen_h, gen_r};
use primgraph::iso::*;
use primgraph::{Digraph, Permutation};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn code_is_relabel_invariant((g, p) in arb_digraph(1..=10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), arb_perm(n))
    })) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        let w = find_isomorphism(&g, &h).unwrap();
        prop_assert!(g.is_isomorphism(&h, &w));
    }

    #[test]
    fn codes_agree_with_permutation_search(g in arb_digraph(4..=5), h in arb_digraph(4..=5), flip in 0usize..10) {
        // bias towards near-isomorphic pairs
        let h = if flip < 5 {
            let mut p: Vec<usize> = (0..g.order()).collect();
            p.rotate_left(flip % g.order());
            let mut h = g.relabel(&Permutation::new(p).unwrap()).unwrap();
            if flip % 2 == 0 {
                let t = h.pair_type(0, 1).unwrap().complement();
                h.set_pair_type(0, 1, t).unwrap();
            }
            h
        } else {
            h
        };
        let same = brute_isomorphic(&g, &h);
        prop_assert_eq!(canonical_code(&g).unwrap() == canonical_code(&h).unwrap(), same);
        prop_assert_eq!(are_isomorphic(&g, &h), same);
    }

    #[test]
    fn dg_text_round_trip(g in arb_digraph(0..=12)) {
        prop_assert_eq!(Digraph::parse_dg(&g.to_dg()).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in arb_digraph(0..=9)) {
        let s = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Digraph>(&s).unwrap(), g);
    }
}

#[test]
fn named_isomorphism_examples() {
    let r = gen_r(3).unwrap();
    assert!(find_isomorphism(&r, &r.dual()).is_some());
    let h = gen_h(3).unwrap();
    assert!(find_isomorphism(&h, &h).is_some());
    let h3 = gen_h(1).unwrap();
    assert_ne!(canonical_code(&h3).unwrap(), canonical_code(&h3.complement()).unwrap());
    assert!(!brute_isomorphic(&h3, &h3.complement()));
}

#[test]
fn json_rejects_loops() {
    assert!(serde_json::from_str::<Digraph>(r#"{"order":2,"arcs":[[1,1]]}"#).is_err());
    assert!(serde_json::from_str::<Digraph>(r#"{"order":2,"arcs":[[0,2]]}"#).is_err());
}
