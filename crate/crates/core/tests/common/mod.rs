#![allow(dead_code)]

use adrg::catalog::{self, catalog};
use adrg::Graph;
use adrg::are_isomorphic;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;

/// 200 connected Erdős–Rényi graphs G(n, 0.4) with `4 ≤ n ≤ 10`.
pub fn random_corpus() -> Vec<Graph> {
    random_connected(200, 4, 10, 0.4, CORPUS_SEED)
}

pub fn random_connected(count: usize, lo: usize, hi: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(lo..=hi);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for &j in jumps {
            let v = (u + j) % n;
            if u < v && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
            if v < u && !edges.contains(&(v, u)) {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Named catalog graphs on at most 20 vertices.
pub fn catalog_graphs() -> Vec<(String, Graph)> {
    let names = [
        "k2",
        "petersen",
        "petersen_complement",
        "cube",
        "desargues",
        "twisted_desargues",
        "cycle_5",
        "cycle_6",
        "cycle_7",
        "complete_4",
        "complete_5",
        "path_4",
        "path_5",
        "hypercube_4",
        "kneser_6_2",
        "gp_8_3",
    ];
    names
        .iter()
        .map(|&s| (s.to_string(), catalog(s).unwrap()))
        .collect()
}

/// Walk-regular graphs that are not all distance-regular.
pub fn walk_regular_graphs() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("circulant_8_1_2".to_string(), circulant(8, &[1, 2])),
        ("circulant_9_1_3".to_string(), circulant(9, &[1, 3])),
        ("circulant_10_1_4".to_string(), circulant(10, &[1, 4])),
        ("circulant_12_1_5".to_string(), circulant(12, &[1, 5])),
        ("circulant_13_1_5".to_string(), circulant(13, &[1, 5])),
        ("circulant_13_1_3_4".to_string(), circulant(13, &[1, 3, 4])),
        ("circulant_14_1_2_6".to_string(), circulant(14, &[1, 2, 6])),
        ("gp_8_3".to_string(), catalog::generalized_petersen(8, 3).unwrap()),
        ("gp_12_5".to_string(), catalog::generalized_petersen(12, 5).unwrap()),
    ];
    out.extend(catalog_graphs().into_iter().filter(|(name, _)| !name.starts_with("path_")));
    out
}

/// Random corpus plus catalog and walk-regular graphs, deduplicated by name.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = random_corpus()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("random_{i}"), g))
        .collect();
    for (name, g) in walk_regular_graphs() {
        if !out.iter().any(|(m, _)| *m == name) {
            out.push((name, g));
        }
    }
    out
}

use adrg::perturb::PerturbationOp;
use adrg::sets::{
    find_correspondence, independent_sets, perturb_cospectral_check, set_mates, PerturbedPair,
    SetCorrespondence, SetOp,
};

/// Petersen with a removal-cospectral pairing between a 3-coclique with a
/// common neighbour and one without.
pub fn petersen_coclique_instance() -> (Graph, SetCorrespondence) {
    let g = catalog("petersen").unwrap();
    let family = set_mates(&g, &independent_sets(&g, 3), SetOp::Delete).unwrap();
    assert_eq!(family.classes.len(), 2);
    let a = &family.classes[0].representative;
    let b = &family.classes[1].representative;
    let c = find_correspondence(&g, &g, a, b).unwrap().expect("coclique types correspond");
    (g, c)
}

/// Twisted Desargues with two vertex pairs at the same distance `h ≠ 3`.
pub fn twisted_desargues_instances() -> Vec<(Graph, SetCorrespondence)> {
    let g = catalog("twisted_desargues").unwrap();
    let d = g.distances();
    [1, 2, 4, 5]
        .iter()
        .map(|&h| {
            let pairs = d.pairs_at(h);
            let (u, v) = pairs[0];
            let (x, y) = pairs[pairs.len() / 2 + 1];
            (g.clone(), SetCorrespondence::new(vec![u, v], vec![x, y]).unwrap())
        })
        .collect()
}

/// Grows a random sequence of up to `len` operations on tracked vertices
/// and returns the final state. Flips across multi-edges are never drawn,
/// and deletions keep at least one tracked vertex and three vertices.
pub fn random_sequence(
    rng: &mut impl Rng,
    g: &Graph,
    c: &SetCorrespondence,
    len: usize,
) -> (Vec<PerturbationOp>, PerturbedPair) {
    let mut ops = Vec::new();
    let mut state = perturb_cospectral_check(g, g, c, &ops).unwrap();
    while ops.len() < len {
        let set = &state.sets.u;
        let cur = &state.graph;
        let kind = rng.gen_range(0..6);
        let pick = |rng: &mut dyn rand::RngCore| set[rng.gen_range(0..set.len())];
        let op = match kind {
            0 if set.len() > 1 && cur.n() > 3 => PerturbationOp::DeleteVertex(pick(rng)),
            1 => PerturbationOp::AddLoop(pick(rng)),
            2 => PerturbationOp::AddPendant(pick(rng)),
            3..=5 if set.len() > 1 => {
                let u = pick(rng);
                let v = loop {
                    let v = pick(rng);
                    if v != u {
                        break v;
                    }
                };
                match kind {
                    3 if cur.get(u, v) <= 1 => PerturbationOp::FlipEdge(u, v),
                    4 => PerturbationOp::Amalgamate(u, v),
                    5 => PerturbationOp::Bridge(u, v),
                    _ => continue,
                }
            }
            _ => continue,
        };
        ops.push(op);
        state = perturb_cospectral_check(g, g, c, &ops).unwrap();
    }
    (ops, state)
}

/// Pairings `(G, U, U′)` with `G = G′`: automorphic images, which always
/// correspond, and random ones, which mostly do not.
pub fn set_instances() -> Vec<(String, Graph, SetCorrespondence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<(String, Graph)> = walk_regular_graphs()
        .into_iter()
        .filter(|(_, g)| g.n() <= 12)
        .collect();
    graphs.extend(
        random_corpus()
            .into_iter()
            .take(30)
            .enumerate()
            .map(|(i, g)| (format!("random_{i}"), g)),
    );
    let mut out = Vec::new();
    for (name, g) in graphs {
        let n = g.n();
        for _ in 0..6 {
            let k = rng.gen_range(1..=n.min(8));
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(&mut rng);
            let u: Vec<usize> = all[..k].to_vec();
            all.shuffle(&mut rng);
            let random = all[..k].to_vec();
            out.push((name.clone(), g.clone(), SetCorrespondence::new(u.clone(), random).unwrap()));

            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm).unwrap();
            if let Some(iso) = are_isomorphic(&h, &g).unwrap() {
                // iso ∘ perm is an automorphism of g
                let image: Vec<usize> = u.iter().map(|&x| iso[perm[x]]).collect();
                out.push((format!("{name}_aut"), g.clone(), SetCorrespondence::new(u, image).unwrap()));
            }
        }
    }
    out
}

