mod common;

use adrg::classify::{GraphContext, Method, Status};
use adrg::perturb::{add_loop, add_pendant, delete_vertex};
use adrg::{catalog, charpoly, Graph, IntPoly};

fn all_equal(polys: &[IntPoly]) -> bool {
    polys.windows(2).all(|w| w[0] == w[1])
}

fn walk_matrices(g: &Graph, max_len: usize) -> Vec<Vec<Vec<u128>>> {
    let n = g.n();
    let mut out = vec![(0..n).map(|i| (0..n).map(|j| (i == j) as u128).collect()).collect::<Vec<Vec<u128>>>()];
    for _ in 0..max_len {
        let prev = out.last().unwrap();
        let next = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| prev[i][k] * g.get(k, j) as u128).sum())
                    .collect()
            })
            .collect();
        out.push(next);
    }
    out
}

fn minus_pair(g: &Graph, u: usize, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != u && w != v).collect();
    g.induced(&keep)
}

/// Intersection numbers by direct counting; `None` if some count varies.
fn intersection_array(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let d = g.distances();
    let diam = d.diameter() as usize;
    let mut b = vec![None; diam + 1];
    let mut c = vec![None; diam + 1];
    for u in 0..g.n() {
        for v in 0..g.n() {
            let i = d.get(u, v).unwrap() as usize;
            let nb: Vec<usize> = g.neighbors(v).collect();
            let ci = nb.iter().filter(|&&w| d.get(u, w).unwrap() as usize + 1 == i).count();
            let bi = nb.iter().filter(|&&w| d.get(u, w).unwrap() as usize == i + 1).count();
            for (slot, val) in [(&mut c[i], ci), (&mut b[i], bi)] {
                if slot.get_or_insert(val) != &val {
                    return None;
                }
            }
        }
    }
    Some((
        b[..diam].iter().map(|x| x.unwrap()).collect(),
        c[1..].iter().map(|x| x.unwrap()).collect(),
    ))
}

#[test]
fn vertex_level_conditions_agree() {
    for (name, g) in common::full_corpus() {
        let n = g.n();
        let deleted: Vec<IntPoly> = (0..n).map(|u| charpoly(&delete_vertex(&g, u).unwrap())).collect();
        let looped: Vec<IntPoly> = (0..n).map(|u| charpoly(&add_loop(&g, u).unwrap())).collect();
        let pendant: Vec<IntPoly> = (0..n).map(|u| charpoly(&add_pendant(&g, u).unwrap())).collect();
        let c = all_equal(&deleted);
        assert_eq!(c, all_equal(&looped), "{name}");
        assert_eq!(c, all_equal(&pendant), "{name}");

        let ctx = GraphContext::new(&g).unwrap();
        let wr = ctx.walk_regularity().unwrap();
        assert_eq!(wr.verdict, c, "{name}");
        for check in [&wr.diagonal_walks, &wr.local_multiplicities, &wr.vertex_deleted, &wr.loop_added, &wr.pendant_added] {
            assert_eq!(check.holds(), c, "{name}");
        }
        let walks = walk_matrices(&g, ctx.spectral().d());
        let diag_constant = walks.iter().all(|w| (0..n).all(|u| w[u][u] == w[0][0]));
        assert_eq!(diag_constant, c, "{name}");
    }
}

#[test]
fn punctual_classifications_agree_at_every_distance() {
    let mut saw_failure = false;
    for (name, g) in common::walk_regular_graphs() {
        let ctx = GraphContext::new(&g).unwrap();
        let walks = walk_matrices(&g, ctx.spectral().d());
        let d = g.distances();
        for h in 1..=ctx.diameter() {
            let level = ctx.level(h).unwrap();
            let pairs = d.pairs_at(h);
            let (a, b) = pairs[0];
            let walk_oracle = pairs
                .iter()
                .all(|&(u, v)| walks.iter().all(|w| w[u][v] == w[a][b]));
            let polys: Vec<IntPoly> = pairs.iter().map(|&(u, v)| charpoly(&minus_pair(&g, u, v))).collect();
            let cospectral_oracle = all_equal(&polys);
            assert_eq!(walk_oracle, cospectral_oracle, "{name} h={h}");
            let expect = if walk_oracle { Status::Holds } else { Status::Fails };
            assert_eq!(level.statuses(), [expect; 4], "{name} h={h}");
            for route in &level.isospectral.routes {
                assert_eq!(route.check.status, expect, "{name} h={h} {}", route.route);
            }
            assert_eq!(level.isospectral.routes.len(), 3);
            saw_failure |= !walk_oracle;
        }
    }
    assert!(saw_failure, "corpus exercises the failing direction");
}

#[test]
fn pair_perturbations_induce_one_partition() {
    for (name, g) in common::walk_regular_graphs() {
        let p = GraphContext::new(&g).unwrap().pair_perturbation_partitions().unwrap();
        assert!(p.agree, "{name}");
        assert_eq!(p.pairs, g.n() * (g.n() - 1) / 2);
    }
}

#[test]
fn distance_regularity_routes_agree() {
    for (name, g) in common::full_corpus() {
        let dr = GraphContext::new(&g).unwrap().distance_regularity().unwrap();
        let oracle = intersection_array(&g);
        assert_eq!(dr.verdict, oracle.is_some(), "{name}");
        if let (Some(arr), Some((b, c))) = (&dr.intersection_array, &oracle) {
            assert_eq!((&arr.b, &arr.c), (b, c), "{name}");
        }
        let spectral = dr.walk_regular && dr.cospectral_levels.iter().all(|s| *s == Status::Holds);
        assert_eq!(spectral, dr.verdict, "{name}");
    }
}

#[test]
fn known_intersection_arrays() {
    let cases = [
        ("petersen", "{3,2;1,1}"),
        ("cube", "{3,2,1;1,2,3}"),
        ("desargues", "{3,2,2,1,1;1,1,2,2,3}"),
        ("cycle_6", "{2,1,1;1,1,2}"),
        ("complete_5", "{4;1}"),
    ];
    for (name, arr) in cases {
        let dr = adrg::classify::is_distance_regular(&catalog(name).unwrap()).unwrap();
        assert_eq!(dr.intersection_array.unwrap().to_string(), arr, "{name}");
    }
    let twisted = adrg::classify::is_distance_regular(&catalog("twisted_desargues").unwrap()).unwrap();
    assert!(!twisted.verdict && twisted.walk_regular);
    assert_eq!(twisted.cospectral_levels[2], Status::Fails);
}

#[test]
fn m_levels_are_prefix_conjunctions() {
    let g = catalog("twisted_desargues").unwrap();
    let ctx = GraphContext::new(&g).unwrap();
    for method in [Method::Walk, Method::Spectrum, Method::Cospectral, Method::Isospectral] {
        let levels: Vec<bool> = (0..=5).map(|m| ctx.is_m_level(m, method).unwrap()).collect();
        assert_eq!(levels, vec![true, true, true, false, false, false], "{method:?}");
    }
    let d = catalog("desargues").unwrap();
    assert!(adrg::classify::is_m_level(&d, 5, Method::Isospectral).unwrap());
}

#[test]
fn strongly_regular_pairs_split_by_adjacency() {
    for name in ["petersen", "petersen_complement", "kneser_6_2"] {
        let g = catalog(name).unwrap();
        let check = adrg::classify::strongly_regular_pair_check(&g).unwrap();
        assert!(check.holds, "{name}");
    }
    assert!(adrg::classify::strongly_regular_pair_check(&catalog("cube").unwrap()).is_err());
}

#[test]
fn non_walk_regular_graphs_report_only_the_vertex_level() {
    let g = catalog("path_5").unwrap();
    let p = adrg::classify::profile(&g).unwrap();
    assert!(!p.walk_regular);
    assert_eq!(p.levels.len(), 1);
    assert!(matches!(
        p.levels[0].walk_regular.witness,
        Some(adrg::classify::Witness::Walks { .. })
    ));
}
