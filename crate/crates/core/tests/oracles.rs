//! Solvers against brute force on every labeled graph with n <= 5 and on
//! seeded random graphs up to n = 9.

mod common;

use cobound::families::gnp;
use cobound::solve::{self, ClassMembership};
use cobound::verify::exhaustive_labeled;
use cobound::{Budget, Graph};

fn assert_matches_oracles(g: &Graph, label: &str) {
    let b = Budget::default();
    let omega = solve::max_clique(g, &b).unwrap();
    let alpha = solve::max_stable_set(g, &b).unwrap();
    let chi = solve::chromatic_number(g, &b).unwrap();
    let theta = solve::clique_cover_number(g, &b).unwrap();
    let nu = solve::max_matching(g);
    for r in [&omega, &alpha, &chi, &theta, &nu] {
        r.check(g).unwrap_or_else(|e| panic!("{label}: bad certificate {e}"));
    }
    assert_eq!(omega.value, common::omega(g), "{label}: omega");
    assert_eq!(alpha.value, common::alpha(g), "{label}: alpha");
    assert_eq!(chi.value, common::chi(g), "{label}: chi");
    assert_eq!(theta.value, common::theta(g), "{label}: theta");
    assert_eq!(nu.value, common::nu(g), "{label}: nu");
    assert_eq!(
        solve::max_deficiency(g, &b).unwrap().value,
        common::deficiency(g),
        "{label}: deficiency"
    );
    assert_eq!(
        solve::in_class_c(g, &b).unwrap().is_member(),
        common::in_class_c(g),
        "{label}: class membership"
    );
    assert_eq!(solve::is_factor_critical(g), common::factor_critical(g), "{label}: factor-critical");
    assert_eq!(
        solve::is_theta_critical(g, &b).unwrap(),
        common::theta_critical(g),
        "{label}: theta-critical"
    );
}

#[test]
fn every_labeled_graph_up_to_five_vertices() {
    let all = exhaustive_labeled(5).unwrap();
    assert_eq!(all.len(), 1 + 1 + 2 + 8 + 64 + 1024);
    for inst in &all {
        assert_matches_oracles(&inst.graph, &inst.descriptor);
    }
}

#[test]
fn seeded_random_graphs_up_to_nine_vertices() {
    for seed in 0..400u64 {
        let n = 6 + (seed % 4) as usize;
        let p = 0.1 + 0.2 * (seed % 5) as f64;
        let g = gnp(n, p, seed).unwrap();
        assert_matches_oracles(&g, &format!("gnp:{n},{p},seed={seed}"));
    }
}

#[test]
fn class_membership_witness_is_a_real_violation() {
    let b = Budget::default();
    for seed in 0..100u64 {
        let g = gnp(8, 0.8, seed).unwrap();
        if let ClassMembership::No { witness } = solve::in_class_c(&g, &b).unwrap() {
            let mask = witness.low_mask() as u32;
            assert!(3 * common::alpha_in(&g, mask) < witness.len());
        }
    }
}

#[test]
fn deficiency_witness_attains_the_value() {
    let b = Budget::default();
    for seed in 0..100u64 {
        let g = gnp(9, 0.5, seed).unwrap();
        let d = solve::max_deficiency(&g, &b).unwrap();
        let mask = d.witness.low_mask() as u32;
        assert_eq!(d.witness.len().saturating_sub(2 * common::alpha_in(&g, mask)), d.value);
    }
}

#[test]
fn neighborhood_cover_never_beats_theta() {
    let b = Budget::default();
    for seed in 0..200u64 {
        let g = gnp(9, 0.4, seed).unwrap();
        let theta = common::theta(&g);
        for levels in 1..=3 {
            let cover = solve::neighborhood_partition_cover(&g, levels, &b).unwrap();
            cover.check(&g, cover.size()).unwrap();
            assert!(cover.size() >= theta);
            if levels == 1 {
                assert_eq!(cover.size(), theta);
            }
        }
    }
}
