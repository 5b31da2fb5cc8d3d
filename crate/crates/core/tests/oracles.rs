//! Brute-force oracles checked against the library's fast paths.

use std::collections::BTreeSet;

use qext_core::constructions::{complete, cycle, path, s_nk, s_nk_plus, star};
use qext_core::enumeration::{canonical_form, enumerate_up_to};
use qext_core::spectral::{jacobi_eigen, q_index, q_index_dense, q_index_power, signless_laplacian};
use qext_core::subgraph::{
    find_constrained_path, find_cycle_of_length, EndpointConstraint,
};
use qext_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Every ordered sequence of `len` distinct vertices.
fn sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, len, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, len, &mut cur, &mut out);
    out
}

fn brute_path(g: &Graph, order: usize, ok_end: impl Fn(usize) -> bool) -> bool {
    sequences(g.order(), order)
        .iter()
        .any(|s| s.windows(2).all(|w| g.has_edge(w[0], w[1])) && ok_end(s[0]) && ok_end(s[order - 1]))
}

fn brute_cycle(g: &Graph, len: usize) -> bool {
    sequences(g.order(), len)
        .iter()
        .any(|s| s.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(s[len - 1], s[0]))
}

fn check_path_witness(g: &Graph, p: &[usize], order: usize) {
    assert_eq!(p.len(), order);
    assert_eq!(p.iter().collect::<BTreeSet<_>>().len(), order);
    assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
}

#[test]
fn path_search_matches_exhaustive_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..60 {
        let n = 3 + trial % 4;
        let g = random_graph(&mut rng, n, 0.45);
        for order in 1..=n {
            let found = find_constrained_path(&g, order, &EndpointConstraint::None).unwrap();
            assert_eq!(found.is_some(), brute_path(&g, order, |_| true), "{g:?} order {order}");
            if let Some(p) = found {
                check_path_witness(&g, p.vertices(), order);
            }
            let avoid = trial % n;
            let found = find_constrained_path(&g, order, &EndpointConstraint::EndsAvoid(avoid)).unwrap();
            assert_eq!(found.is_some(), brute_path(&g, order, |v| v != avoid), "{g:?} avoid {avoid}");
            if let Some(p) = found {
                check_path_witness(&g, p.vertices(), order);
                assert!(p.vertices()[0] != avoid && p.vertices()[order - 1] != avoid);
            }
        }
    }
}

#[test]
fn cycle_search_matches_exhaustive_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..60 {
        let n = 3 + trial % 5;
        let g = random_graph(&mut rng, n, 0.5);
        for len in 3..=n {
            let found = find_cycle_of_length(&g, len).unwrap();
            assert_eq!(found.is_some(), brute_cycle(&g, len), "{g:?} length {len}");
            if let Some(c) = found {
                let c = c.vertices();
                check_path_witness(&g, c, len);
                assert!(g.has_edge(c[len - 1], c[0]));
            }
        }
    }
}

#[test]
fn derived_cycle_examples() {
    let g = s_nk_plus(10, 2).unwrap();
    assert_eq!(g.size(), 18);
    assert!(brute_cycle(&g, 5));
    assert!(find_cycle_of_length(&g, 5).unwrap().is_some());
    assert!(find_cycle_of_length(&g, 7).unwrap().is_none());
    let g = s_nk(7, 2).unwrap();
    for len in 3..=7 {
        assert_eq!(find_cycle_of_length(&g, len).unwrap().is_some(), brute_cycle(&g, len));
    }
}

/// Labeled graphs on `n` vertices, deduplicated by minimum over all `n!`
/// relabelings of the adjacency bit string.
fn permutation_dedup_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = sequences(n, n);
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let adj = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let idx = pairs.iter().position(|&p| p == (a, b)).unwrap();
            mask >> idx & 1
        };
        let min = perms
            .iter()
            .map(|p| pairs.iter().fold(0u32, |acc, &(u, v)| acc << 1 | adj(p[u], p[v])))
            .min()
            .unwrap();
        seen.insert(min);
    }
    seen.len()
}

#[test]
fn enumeration_counts_match_permutation_dedup() {
    let levels = enumerate_up_to(5).unwrap();
    for n in 1..=5 {
        assert_eq!(levels[n].len(), permutation_dedup_count(n), "n = {n}");
    }
}

#[test]
fn canonical_forms_separate_exactly_the_isomorphism_classes_at_order_five() {
    // Two labeled graphs share a form iff some permutation maps one to the other.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let perms = sequences(5, 5);
    for _ in 0..200 {
        let a = random_graph(&mut rng, 5, 0.5);
        let b = random_graph(&mut rng, 5, 0.5);
        let iso = perms.iter().any(|p| a.relabeled(p).unwrap() == b);
        assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), iso);
    }
}

#[test]
fn power_iteration_agrees_with_dense_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for trial in 0..80 {
        let n = 2 + trial % 40;
        let g = random_graph(&mut rng, n, 0.3);
        let jac = jacobi_eigen(&signless_laplacian(&g).unwrap()).unwrap();
        let top = jac.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let dense = q_index_dense(&g).unwrap();
        assert!((dense.q - top).abs() < 1e-9);
        if let Ok(p) = q_index_power(&g, 1e-11) {
            assert!((p.q - top).abs() < 1e-8, "{} vs {top}", p.q);
        }
        let r = q_index(&g, 1e-11).unwrap();
        assert!((r.q - top).abs() < 1e-8);
        assert!(r.residual <= 1e-9);
    }
}

#[test]
fn classical_spectra() {
    for n in 2..20 {
        assert!((q_index(&complete(n).unwrap(), 1e-12).unwrap().q - (2 * n - 2) as f64).abs() < 1e-9);
        assert!((q_index(&star(n).unwrap(), 1e-12).unwrap().q - n as f64).abs() < 1e-9);
    }
    for n in 3..20 {
        assert!((q_index(&cycle(n).unwrap(), 1e-12).unwrap().q - 4.0).abs() < 1e-9);
        let expect = 2.0 + 2.0 * (std::f64::consts::PI / n as f64).cos();
        assert!((q_index(&path(n).unwrap(), 1e-12).unwrap().q - expect).abs() < 1e-9);
    }
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic_and_canonical() {
    for level in enumerate_up_to(6).unwrap() {
        let forms: BTreeSet<_> = level.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), level.len());
        for g in &level {
            assert_eq!(canonical_form(g).unwrap().to_graph(), *g);
        }
    }
}
