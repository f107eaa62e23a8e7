#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, VecDeque};

use palfy_core::{
    build_graph, classify, complement, connected_components, is_clique, satisfies_palfy_condition,
    Classification, DegreeSet, PrimeGraph, ViolationReason,
};
use proptest::prelude::*;

const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// A labelled graph on the first `order` primes with each edge drawn
/// independently.
fn arb_graph(max_order: usize) -> impl Strategy<Value = PrimeGraph> {
    (0..=max_order).prop_flat_map(|order| {
        let pairs = order * order.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut bit = bits.iter();
            for i in 0..order {
                for j in i + 1..order {
                    if *bit.next().unwrap() {
                        edges.push((PRIMES[i], PRIMES[j]));
                    }
                }
            }
            PrimeGraph::new(PRIMES[..order].iter().copied(), edges).unwrap()
        })
    })
}

/// Disjoint cliques on consecutive primes, for exercising the two-component
/// structure directly.
fn arb_clique_union() -> impl Strategy<Value = (Vec<usize>, PrimeGraph)> {
    proptest::collection::vec(1usize..4, 1..4).prop_map(|sizes| {
        let mut edges = Vec::new();
        let mut start = 0;
        for &s in &sizes {
            for i in start..start + s {
                for j in i + 1..start + s {
                    edges.push((PRIMES[i], PRIMES[j]));
                }
            }
            start += s;
        }
        let g = PrimeGraph::new(PRIMES[..start].iter().copied(), edges).unwrap();
        (sizes, g)
    })
}

fn brute_is_prime(p: u64) -> bool {
    p >= 2 && (2..p).all(|d| !p.is_multiple_of(d))
}

fn brute_triangle_free(g: &PrimeGraph) -> bool {
    let vs: Vec<u64> = g.vertices().iter().copied().collect();
    let n = vs.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j
                    && j != k
                    && i != k
                    && g.has_edge(vs[i], vs[j])
                    && g.has_edge(vs[j], vs[k])
                    && g.has_edge(vs[i], vs[k])
                {
                    return false;
                }
            }
        }
    }
    true
}

fn reachable(g: &PrimeGraph, from: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in g.vertices() {
            if g.has_edge(v, w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

proptest! {
    #[test]
    fn adjacency_matches_divisibility_scan(degrees in proptest::collection::btree_set(1u64..2000, 1..8)) {
        let ds = DegreeSet::new(degrees.iter().copied()).unwrap();
        let g = build_graph(&ds);
        let max = *degrees.iter().max().unwrap();
        let primes: Vec<u64> = (2..=max).filter(|&p| brute_is_prime(p)).collect();
        for &p in &primes {
            let divides_some = degrees.iter().any(|d| d % p == 0);
            prop_assert_eq!(g.vertices().contains(&p), divides_some, "vertex {}", p);
        }
        for &v in g.vertices() {
            prop_assert!(degrees.iter().any(|d| d % v == 0));
        }
        for &p in g.vertices() {
            for &q in g.vertices() {
                if p < q {
                    let expected = degrees.iter().any(|d| d % (p * q) == 0);
                    prop_assert_eq!(g.has_edge(p, q), expected, "edge {}-{}", p, q);
                }
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(complement(&complement(&g)), g.clone());
        let c = complement(&g);
        for &p in g.vertices() {
            for &q in g.vertices() {
                if p != q {
                    prop_assert_ne!(g.has_edge(p, q), c.has_edge(p, q));
                }
            }
        }
    }

    #[test]
    fn components_partition_the_graph(g in arb_graph(10)) {
        let cd = connected_components(&g);
        let mut union = BTreeSet::new();
        for comp in &cd.components {
            prop_assert!(comp.is_disjoint(&union));
            union.extend(comp.iter().copied());
            let first = *comp.first().unwrap();
            prop_assert_eq!(&reachable(&g, first), comp);
        }
        prop_assert_eq!(&union, g.vertices());
        for &(p, q) in g.edges() {
            prop_assert!(cd.components.iter().any(|c| c.contains(&p) && c.contains(&q)));
        }
        for w in cd.components.windows(2) {
            prop_assert!(w[0].len() > w[1].len() || (w[0].len() == w[1].len() && w[0].first() < w[1].first()));
        }
    }

    #[test]
    fn condition_equals_triangle_free_complement(g in arb_graph(9)) {
        prop_assert_eq!(satisfies_palfy_condition(&g), brute_triangle_free(&complement(&g)));
    }

    #[test]
    fn survivors_are_two_cliques(g in arb_graph(10)) {
        let components = connected_components(&g);
        if satisfies_palfy_condition(&g) && components.len() >= 2 {
            prop_assert_eq!(components.len(), 2);
            for comp in &components.components {
                prop_assert!(is_clique(&g, comp).unwrap());
            }
            let is_two_cliques = matches!(classify(&g), Classification::TwoCompleteComponents { .. });
            prop_assert!(is_two_cliques);
        }
        if components.len() >= 3 {
            prop_assert!(!satisfies_palfy_condition(&g));
        }
    }

    #[test]
    fn violation_witnesses_are_concrete(g in arb_graph(10)) {
        if let Classification::PalfyViolation { reason, witness } = classify(&g) {
            let ws: Vec<u64> = witness.iter().copied().collect();
            match reason {
                ViolationReason::ComponentNotComplete => {
                    prop_assert_eq!(ws.len(), 2);
                    prop_assert!(!g.has_edge(ws[0], ws[1]));
                }
                ViolationReason::ThreeOrMoreComponents | ViolationReason::IndependentTriple => {
                    prop_assert_eq!(ws.len(), 3);
                    prop_assert!(!g.has_edge(ws[0], ws[1]));
                    prop_assert!(!g.has_edge(ws[0], ws[2]));
                    prop_assert!(!g.has_edge(ws[1], ws[2]));
                }
            }
            prop_assert!(!satisfies_palfy_condition(&g));
        }
    }

    #[test]
    fn clique_unions_classify_by_count((sizes, g) in arb_clique_union()) {
        match (sizes.len(), classify(&g)) {
            (1, Classification::Connected) => {}
            (2, Classification::TwoCompleteComponents { pair, inequality_holds }) => {
                let a = sizes[0].min(sizes[1]) as u64;
                let b = sizes[0].max(sizes[1]) as u64;
                prop_assert_eq!(pair.smaller(), &a.into());
                prop_assert_eq!(pair.larger(), &b.into());
                prop_assert_eq!(inequality_holds, b + 1 >= 1 << a);
            }
            (k, Classification::PalfyViolation { reason: ViolationReason::ThreeOrMoreComponents, .. }) if k >= 3 => {}
            (k, other) => prop_assert!(false, "{} cliques classified as {:?}", k, other),
        }
    }
}

#[test]
fn degree_one_contributes_nothing() {
    let with_one = build_graph(&DegreeSet::new([1, 6, 35]).unwrap());
    let without = build_graph(&DegreeSet::new([6, 35]).unwrap());
    assert_eq!(with_one, without);
    assert_eq!(
        build_graph(&DegreeSet::new([1]).unwrap()),
        PrimeGraph::empty()
    );
    assert_eq!(classify(&PrimeGraph::empty()), Classification::Empty);
}

#[test]
fn degree_set_graph_with_two_cliques() {
    // {1, 6, 5*7*11}: components {2,3} and {5,7,11}; 3 >= 2^2 - 1.
    let g = build_graph(&DegreeSet::new([1, 6, 385]).unwrap());
    match classify(&g) {
        Classification::TwoCompleteComponents {
            pair,
            inequality_holds,
        } => {
            assert_eq!(pair.to_string(), "(2, 3)");
            assert!(inequality_holds);
        }
        other => panic!("unexpected {other:?}"),
    }
}
