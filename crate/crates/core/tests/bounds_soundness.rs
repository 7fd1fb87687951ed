//! Soundness sweep for every bound over small labeled graphs: all bounds
//! hold, equality flags match the regularity characterizations, the closed
//! form at Delta = delta + 1 is exact, and unequal-edge counts there are
//! even. Exhaustive through order 5; seeded samples at orders 6 and 7.

mod common;

use common::exp;
use sdd_core::enumerate::{certify, labeled_graphs_with_edges, random_labeled_graphs};
use sdd_core::indices::Exponent;

fn sweep_alphas() -> Vec<Exponent> {
    [0.25, 0.5, 1.0, 2.0, 4.0].iter().map(|&a| exp(a)).collect()
}

#[test]
fn exhaustive_sweep_orders_2_to_5_is_clean() {
    let alphas = sweep_alphas();
    for n in 2..=5 {
        let summary = certify(labeled_graphs_with_edges(n), &alphas).unwrap();
        assert!(
            summary.is_clean(),
            "order {n} produced violations: {:#?}",
            summary
        );
        assert_eq!(summary.graphs, (1usize << (n * (n - 1) / 2)) - 1);
    }
}

#[test]
fn sampled_sweep_orders_6_and_7_is_clean() {
    let alphas = sweep_alphas();
    for n in [6, 7] {
        let graphs = random_labeled_graphs(n, 250, 0xD0E + n as u64);
        assert!(graphs.len() > 200);
        let summary = certify(graphs, &alphas).unwrap();
        assert!(
            summary.is_clean(),
            "order {n} produced violations: {:#?}",
            summary
        );
    }
}

#[test]
fn sweep_covers_graphs_with_isolated_vertices() {
    // Labeled enumeration includes graphs whose vertex 4 is isolated; make
    // sure such graphs actually reach the checker (delta is then taken over
    // the non-isolated vertices).
    let alphas = sweep_alphas();
    let with_isolated: Vec<_> = labeled_graphs_with_edges(5)
        .filter(|g| g.isolated_count() > 0)
        .collect();
    assert!(!with_isolated.is_empty());
    let summary = certify(with_isolated, &alphas).unwrap();
    assert!(summary.is_clean(), "{:#?}", summary);
}

#[test]
#[ignore = "full exhaustive certification at order 6; several minutes"]
fn exhaustive_sweep_order_6_is_clean() {
    let summary = certify(labeled_graphs_with_edges(6), &sweep_alphas()).unwrap();
    assert!(summary.is_clean(), "{:#?}", summary);
}
