use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rigidity_core::formats::{
    parse_deployment, parse_edge_list, write_deployment, write_edge_list,
};
use rigidity_core::indices::index_pair;
use rigidity_core::sweep::trial_seed;
use rigidity_core::{
    geometric_graph, sample_deployment, sweep_average, sweep_single, unit_grid, Graph, RatioValue,
};

#[test]
fn average_is_pointwise_mean_of_single_runs() {
    let grid = unit_grid(0.05).unwrap();
    let trials = 6;
    let avg = sweep_average(15, 30.0, trials, &grid, 100).unwrap();
    let singles: Vec<_> = (0..trials)
        .map(|t| {
            let dep = sample_deployment(15, 30.0, trial_seed(100, t)).unwrap();
            sweep_single(&dep, &grid).unwrap()
        })
        .collect();
    for i in 0..grid.len() {
        let sum = singles
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + &c.k_r_mean[i]);
        assert_eq!(avg.k_r_mean[i], sum / BigInt::from(trials));
        let sum = singles
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + &c.k_u_mean[i]);
        assert_eq!(avg.k_u_mean[i], sum / BigInt::from(trials));
    }
}

#[test]
fn averaged_rigidity_curve_is_non_decreasing() {
    let grid = unit_grid(0.02).unwrap();
    let avg = sweep_average(20, 30.0, 10, &grid, 7).unwrap();
    assert!(avg.k_r_mean.windows(2).all(|w| w[0] <= w[1]));
    let one = BigRational::from_integer(BigInt::from(1));
    assert!(avg
        .k_u_mean
        .iter()
        .chain(&avg.k_r_mean)
        .all(|v| *v >= BigRational::zero() && *v <= one));
}

#[test]
fn sweeps_are_reproducible() {
    let grid = unit_grid(0.1).unwrap();
    assert_eq!(
        sweep_average(12, 10.0, 4, &grid, 3).unwrap(),
        sweep_average(12, 10.0, 4, &grid, 3).unwrap()
    );
}

#[test]
fn complete_graph_entries_are_redundantly_rigid() {
    for seed in 0..10 {
        let dep = sample_deployment(5, 30.0, seed).unwrap();
        let curve = sweep_single(&dep, &[0.0, 1.0]).unwrap();
        let g = geometric_graph(&dep, 30.0).unwrap();
        if g == Graph::complete(5) {
            assert_eq!(curve.k_r_mean[1], RatioValue::ONE.to_big());
            assert_eq!(curve.k_u_mean[1], RatioValue::ONE.to_big());
        }
    }
}

#[test]
fn rgg_files_round_trip() {
    let dep = sample_deployment(25, 30.0, 12).unwrap();
    let g = geometric_graph(&dep, 12.0).unwrap();
    let back = parse_deployment(&write_deployment(&dep)).unwrap();
    assert_eq!(back, dep);
    assert_eq!(geometric_graph(&back, 12.0).unwrap(), g);
    assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disk_graphs_grow_with_radius(seed in any::<u64>(), n in 0usize..30, r1 in 0.0f64..45.0, r2 in 0.0f64..45.0) {
        let dep = sample_deployment(n, 30.0, seed).unwrap();
        let (lo, hi) = (r1.min(r2), r1.max(r2));
        let small = geometric_graph(&dep, lo).unwrap();
        let big = geometric_graph(&dep, hi).unwrap();
        prop_assert!(small.edges().iter().all(|&e| big.contains(e)));
        let (kr_small, _) = index_pair(&small);
        let (kr_big, _) = index_pair(&big);
        prop_assert!(kr_small <= kr_big);
    }

    #[test]
    fn single_trial_curves_non_decreasing(seed in any::<u64>()) {
        let dep = sample_deployment(18, 30.0, seed).unwrap();
        let curve = sweep_single(&dep, &unit_grid(0.05).unwrap()).unwrap();
        prop_assert!(curve.k_r_mean.windows(2).all(|w| w[0] <= w[1]));
    }
}
