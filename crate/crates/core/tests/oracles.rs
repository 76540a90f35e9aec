mod common;

use std::collections::BTreeSet;

use common::{brute_alpha, brute_well_covered, brute_wp, graph_code, labelled_classes, permutations};
use wplab::corpus::generate;
use wplab::criticality::is_alpha_critical;
use wplab::independence::alpha;
use wplab::wp::{is_well_covered, is_well_covered_recursive, is_wp_deletion, is_wp_recursive, member, wp_order};
use wplab::{Execution, Graph};

fn corpus(max_n: usize) -> Vec<Graph> {
    generate::classes_in_range(1, max_n, false, Execution::Parallel).unwrap()
}

#[test]
fn generation_matches_labelled_enumeration() {
    let levels = generate::levels(6, Execution::Sequential).unwrap();
    for n in 1..=6 {
        let perms = permutations(n);
        let got: BTreeSet<u64> = levels[n - 1].iter().map(|g| graph_code(g, &perms)).collect();
        assert_eq!(got.len(), levels[n - 1].len(), "duplicate class at n={n}");
        assert_eq!(got, labelled_classes(n), "n={n}");
    }
}

#[test]
fn connected_filter_matches_bfs() {
    let all = generate::classes(6, false, Execution::Parallel).unwrap();
    let conn = generate::classes(6, true, Execution::Parallel).unwrap();
    let expected: Vec<Graph> = all.into_iter().filter(|g| g.is_connected()).collect();
    assert_eq!(conn, expected);
    assert_eq!(conn.len(), 112);
}

#[test]
fn alpha_and_well_covered_match_brute_force() {
    for g in corpus(6) {
        assert_eq!(alpha(&g), brute_alpha(&g));
        let wc = brute_well_covered(&g);
        assert_eq!(is_well_covered(&g).unwrap(), wc);
        assert_eq!(is_well_covered_recursive(&g).unwrap(), wc);
    }
}

#[test]
fn deciders_match_tuple_oracle() {
    for g in corpus(5) {
        for p in 1..=4 {
            let want = brute_wp(&g, p);
            assert_eq!(member(&g, p).unwrap(), want, "definitional p={p} {:?}", g.edges());
            assert_eq!(is_wp_deletion(&g, p).unwrap().member, want, "deletion p={p}");
            assert_eq!(is_wp_recursive(&g, p).unwrap().member, want, "recursive p={p}");
        }
    }
}

#[test]
fn wp_order_is_the_largest_member_level() {
    for g in corpus(6) {
        let k = wp_order(&g).unwrap();
        assert!(k <= g.order());
        for p in 1..=g.order() {
            assert_eq!(member(&g, p).unwrap(), p <= k);
        }
    }
}

#[test]
fn alpha_critical_matches_edge_deletion() {
    for g in corpus(6) {
        let a = brute_alpha(&g);
        let want = g.edges().iter().all(|&(x, y)| brute_alpha(&g.delete_edge(x, y).unwrap()) > a);
        assert_eq!(is_alpha_critical(&g).alpha_critical, want, "{:?}", g.edges());
    }
}

#[test]
fn wp_levels_are_nested() {
    for g in corpus(7) {
        let mut prev = true;
        for p in 1..=4 {
            let m = member(&g, p).unwrap();
            assert!(prev || !m);
            prev = m;
        }
    }
}
