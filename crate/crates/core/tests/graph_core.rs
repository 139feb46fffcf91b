mod common;

use adrg::catalog::kneser;
use adrg::iso::{are_isomorphic, verify_isomorphism};
use adrg::perturb::delete_vertex;
use adrg::{emit_graph6, parse_graph6, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn graph6_round_trips_on_the_corpus() {
    for (name, g) in common::full_corpus() {
        let text = emit_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), g, "{name}");
    }
}

#[test]
fn json_round_trips_on_the_corpus() {
    for (name, g) in common::full_corpus() {
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g, "{name}");
    }
}

#[test]
fn petersen_graph6_is_the_kneser_graph() {
    let g = parse_graph6("IheA@GUAo").unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.edge_count(), 15);
    let cert = are_isomorphic(&g, &kneser(5, 2).unwrap()).unwrap().unwrap();
    assert!(verify_isomorphism(&g, &kneser(5, 2).unwrap(), &cert));
}

#[test]
fn distances_form_a_metric_on_catalog_graphs() {
    for (name, g) in common::catalog_graphs() {
        let d = g.distances();
        let n = g.n();
        for u in 0..n {
            assert_eq!(d.get(u, u), Some(0), "{name}");
            for v in 0..n {
                let duv = d.get(u, v).unwrap();
                assert_eq!(Some(duv), d.get(v, u), "{name}");
                assert_eq!(duv == 1, g.adjacent(u, v), "{name}");
                for w in 0..n {
                    assert!(duv <= d.get(u, w).unwrap() + d.get(w, v).unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_random_graphs() {
    let corpus = common::random_connected(60, 5, 9, 0.45, 17);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for g in &corpus {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm).unwrap();
        assert!(are_isomorphic(g, g).unwrap().is_some());
        let forward = are_isomorphic(g, &h).unwrap();
        let backward = are_isomorphic(&h, g).unwrap();
        assert!(forward.is_some() && backward.is_some());
    }
    for a in &corpus[..20] {
        for b in &corpus[..20] {
            let ab = are_isomorphic(a, b).unwrap().is_some();
            assert_eq!(ab, are_isomorphic(b, a).unwrap().is_some());
            for c in &corpus[..20] {
                if ab && are_isomorphic(b, c).unwrap().is_some() {
                    assert!(are_isomorphic(a, c).unwrap().is_some());
                }
            }
        }
    }
}

#[test]
fn isomorphism_separates_by_edge_count_oracle() {
    let corpus = common::random_connected(40, 6, 7, 0.5, 5);
    for a in &corpus {
        for b in &corpus {
            if a.n() != b.n() || a.edge_count() != b.edge_count() {
                assert!(are_isomorphic(a, b).unwrap().is_none());
            }
        }
    }
}

#[test]
fn deletions_commute_up_to_relabelling() {
    for g in common::random_connected(30, 5, 8, 0.5, 3) {
        let n = g.n();
        for u in 0..n {
            for v in (u + 1)..n {
                let uv = delete_vertex(&delete_vertex(&g, u).unwrap(), v - 1).unwrap();
                let vu = delete_vertex(&delete_vertex(&g, v).unwrap(), u).unwrap();
                assert!(are_isomorphic(&uv, &vu).unwrap().is_some());
            }
        }
    }
}
