mod common;

use common::*;
use primgraph::criticality::*;
use primgraph::families::{gen_h, gen_q5, gen_r, gen_t};
use primgraph::modular::is_indecomposable;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn critical_vertices_match_deletion_oracle(g in arb_digraph(3..=7)) {
        prop_assume!(is_indecomposable(&g));
        let r = critical_vertices(&g).unwrap();
        prop_assert_eq!(r.noncritical.to_vec(), brute_noncritical(&g));
        prop_assert_eq!(r.defect, r.noncritical.len());
        prop_assert_eq!(r.critical.union(r.noncritical), g.vertices());
    }

    #[test]
    fn indecomposability_graph_matches_oracle(g in arb_digraph(4..=7)) {
        prop_assume!(is_indecomposable(&g));
        let h = indecomposability_graph(&g).unwrap();
        prop_assert_eq!(h.edges(), brute_ig_edges(&g));
    }

    #[test]
    fn complement_and_dual_keep_criticality(g in arb_digraph(5..=9)) {
        prop_assume!(is_indecomposable(&g));
        let r = critical_vertices(&g).unwrap();
        let h = indecomposability_graph(&g).unwrap();
        for t in [g.complement(), g.dual()] {
            prop_assert_eq!(critical_vertices(&t).unwrap(), r);
            prop_assert_eq!(indecomposability_graph(&t).unwrap(), h);
        }
    }

    #[test]
    fn critical_degree_bound_holds(g in arb_digraph(5..=8)) {
        prop_assume!(is_indecomposable(&g));
        prop_assert!(check_critical_degree(&g).unwrap().passed());
    }
}

#[test]
fn named_criticality_examples() {
    assert_eq!(
        critical_vertices(&gen_h(3).unwrap()).unwrap().noncritical.to_vec(),
        vec![0]
    );
    assert_eq!(critical_vertices(&gen_t(2).unwrap()).unwrap().defect, 0);
    let q = critical_vertices(&gen_q5()).unwrap();
    assert_eq!((q.defect, q.noncritical.to_vec()), (1, brute_noncritical(&gen_q5())));
    assert_eq!(q.noncritical.to_vec(), vec![2]);
}

#[test]
fn support_examples() {
    let r7 = indecomposability_graph(&gen_r(3).unwrap()).unwrap();
    assert_eq!(support(&r7).component, Some(set(&[0, 1, 2, 3, 4, 5])));
    assert_eq!(support_shape(&r7).1.kind, ShapeKind::Path { edges: 5 });
    let h7 = indecomposability_graph(&gen_h(3).unwrap()).unwrap();
    assert_eq!(support(&h7).component, Some(set(&[0, 1, 2, 3, 4, 5, 6])));
    assert_eq!(support_shape(&h7).1.kind, ShapeKind::Cycle { vertices: 7 });
    let q5 = indecomposability_graph(&gen_q5()).unwrap();
    assert_eq!(q5.edge_count(), 0);
    assert_eq!(support(&q5).component, None);
}

#[test]
fn critical_degree_examples() {
    for g in [gen_r(3).unwrap(), gen_h(3).unwrap(), gen_t(2).unwrap()] {
        let rep = check_critical_degree(&g).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.entries.iter().all(|e| e.degree <= 2));
    }
    // every vertex of the cycle but the non-critical one has two neighbours
    let rep = check_critical_degree(&gen_h(3).unwrap()).unwrap();
    assert!(rep.entries.iter().all(|e| e.degree == 2));
    assert!(check_critical_degree(&gen_h(1).unwrap()).is_err());
}

#[test]
fn starred_tree_shape() {
    // source 0, branches of 3, 2 and 2 edges
    let h = SymGraph::from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7)]);
    assert_eq!(
        support_shape(&h).1.kind,
        ShapeKind::StarTree {
            source: 0,
            branches: vec![2, 2, 3]
        }
    );
    assert_eq!(trichotomy_violation(&h, 0), None);
    assert!(trichotomy_violation(&h, 1).is_some());
}
