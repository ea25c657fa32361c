use proptest::prelude::*;
use rand::seq::SliceRandom;
use rigidity_core::matroid::{full_rank, is_independent};
use rigidity_core::{
    independent_basis, is_minimally_rigid, is_rigid, matroid_rank, Edge, Graph, RigidityOracle,
};
use rigidity_testkit::{
    brute_is_independent, brute_rank, independence_table, nonisomorphic_graphs, random_graph,
    random_graph_m, rng,
};

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(any::<prop::sample::Index>(), 0..=max_m.min(pairs)),
        )
            .prop_map(move |(n, picks)| {
                let all: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                let chosen: Vec<_> = picks.iter().map(|i| all[i.index(all.len())]).collect();
                Graph::from_edge_list(n, &chosen).unwrap()
            })
    })
}

fn rank_in_order(g: &Graph, order: &[Edge]) -> usize {
    let mut o = RigidityOracle::new(g);
    for &e in order {
        o.insert(e).unwrap();
    }
    o.rank()
}

#[test]
fn rank_matches_exhaustive_enumeration_on_small_graphs() {
    for n in 0..=5 {
        for g in nonisomorphic_graphs(n) {
            assert_eq!(matroid_rank(&g), brute_rank(&g), "{g:?}");
        }
    }
}

#[test]
fn rank_is_insertion_order_independent() {
    let mut r = rng(17);
    for _ in 0..200 {
        let n = 2 + (rand::Rng::random_range(&mut r, 0..6));
        let g = random_graph(&mut r, n, 0.6);
        let expected = matroid_rank(&g);
        let mut order = g.edges().to_vec();
        for _ in 0..20 {
            order.shuffle(&mut r);
            assert_eq!(rank_in_order(&g, &order), expected);
        }
    }
}

#[test]
fn matroid_axioms_hold_on_independence_predicate() {
    let mut r = rng(23);
    for _ in 0..40 {
        let g = random_graph_m(&mut r, 6, 10);
        let edges = g.edges();
        let table = independence_table(edges);
        let size = table.len();
        // A1 and A2 are properties of the oracle's verdicts on sub-graphs.
        let verdict = |mask: usize| {
            let sub: Vec<Edge> = (0..edges.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            is_independent(&Graph::from_edges(g.vertex_count(), sub).unwrap())
        };
        let oracle: Vec<bool> = (0..size).map(verdict).collect();
        assert_eq!(oracle, table);
        assert!(oracle[0], "A1");
        for a in 0..size {
            if !oracle[a] {
                continue;
            }
            // A2: every subset of an independent set is independent.
            let mut sub = a;
            loop {
                sub = (sub.wrapping_sub(1)) & a;
                assert!(oracle[sub], "A2");
                if sub == 0 {
                    break;
                }
            }
        }
        // A3: augmentation.
        for a in (0..size).filter(|&a| oracle[a]) {
            for b in (0..size).filter(|&b| oracle[b]) {
                if a.count_ones() < b.count_ones() {
                    let diff = b & !a;
                    assert!(
                        (0..edges.len()).any(|i| diff >> i & 1 == 1 && oracle[a | 1 << i]),
                        "A3"
                    );
                }
            }
        }
    }
}

#[test]
fn known_ranks() {
    assert_eq!(matroid_rank(&Graph::complete(4)), 5);
    assert_eq!(matroid_rank(&Graph::empty(9)), 0);
    assert_eq!(matroid_rank(&rigidity_testkit::bowtie()), 6);
}

#[test]
fn known_minimally_rigid() {
    assert!(is_minimally_rigid(&Graph::complete(3)));
    assert!(!is_minimally_rigid(&Graph::complete(4)));
    let k4_minus = Graph::complete(4)
        .remove_edges(&[rigidity_testkit::edge(1, 3)])
        .unwrap();
    assert!(is_minimally_rigid(&k4_minus));
    assert!(!is_rigid(&rigidity_testkit::path(3)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rank_equals_brute_force(g in arb_graph(8, 12)) {
        prop_assert_eq!(matroid_rank(&g), brute_rank(&g));
    }

    #[test]
    fn rank_bounded(g in arb_graph(12, 40)) {
        let r = matroid_rank(&g);
        prop_assert!(r <= g.edge_count().min(full_rank(g.vertex_count())));
    }

    #[test]
    fn adding_an_edge_never_lowers_rank(g in arb_graph(10, 25), a in 0usize..10, b in 0usize..10) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let bigger = g.add_edges(&[Edge::new(a, b).unwrap()]).unwrap();
        prop_assert!(matroid_rank(&bigger) >= matroid_rank(&g));
    }

    #[test]
    fn basis_is_independent_with_full_size(g in arb_graph(9, 14)) {
        let basis = independent_basis(&g);
        prop_assert_eq!(basis.len(), matroid_rank(&g));
        prop_assert!(brute_is_independent(&basis));
        prop_assert!(basis.iter().all(|&e| g.contains(e)));
    }

    #[test]
    fn accepted_set_stays_independent(g in arb_graph(8, 14)) {
        let mut o = RigidityOracle::new(&g);
        for &e in g.edges() {
            o.insert(e).unwrap();
            prop_assert!(brute_is_independent(o.accepted()));
        }
        prop_assert_eq!(o.accepted().len() + o.rejected().len(), g.edge_count());
    }

    #[test]
    fn rejected_edges_carry_a_true_circuit(g in arb_graph(8, 13)) {
        let mut o = RigidityOracle::new(&g);
        for &e in g.edges() {
            if let Some(c) = o.insert_with_circuit(e).unwrap() {
                prop_assert!(!brute_is_independent(&c));
                for i in 0..c.len() {
                    let mut without = c.clone();
                    without.remove(i);
                    prop_assert!(brute_is_independent(&without));
                }
            }
        }
    }
}
