mod common;

use adrg::perturb::{
    bridge_formula_residual, deletion_formula_residual, pair_deletion_residual, verify_identity,
};
use adrg::{decompose, Graph, PerturbationOp};

fn all_ops(g: &Graph) -> Vec<PerturbationOp> {
    let n = g.n();
    let mut ops = Vec::new();
    for u in 0..n {
        ops.push(PerturbationOp::DeleteVertex(u));
        ops.push(PerturbationOp::AddLoop(u));
        ops.push(PerturbationOp::AddPendant(u));
        for v in (u + 1)..n {
            ops.push(PerturbationOp::FlipEdge(u, v));
            ops.push(PerturbationOp::Amalgamate(u, v));
            ops.push(PerturbationOp::Bridge(u, v));
        }
    }
    ops
}

#[test]
fn exact_identities_hold_on_the_corpus() {
    let mut flips = [0usize; 2];
    for (name, g) in common::full_corpus() {
        for op in all_ops(&g) {
            let check = verify_identity(&g, &op).unwrap();
            assert!(check.holds, "{name} {op}: {}", check.identity);
            if let PerturbationOp::FlipEdge(u, v) = op {
                flips[g.get(u, v) as usize] += 1;
            }
        }
    }
    assert!(flips[0] > 0 && flips[1] > 0, "both flip directions exercised");
}

#[test]
fn identities_hold_on_pseudographs() {
    let g = Graph::from_adjacency(&[
        vec![1, 2, 0, 1],
        vec![2, 0, 1, 0],
        vec![0, 1, 2, 1],
        vec![1, 0, 1, 0],
    ])
    .unwrap();
    for op in all_ops(&g) {
        if let PerturbationOp::FlipEdge(u, v) = op {
            if g.get(u, v) > 1 {
                assert!(verify_identity(&g, &op).is_err());
                continue;
            }
        }
        let check = verify_identity(&g, &op).unwrap();
        assert!(check.holds, "{op}: {}", check.identity);
    }
}

#[test]
fn resolvent_forms_hold_numerically() {
    for (name, g) in common::full_corpus() {
        let s = decompose(&g, None).unwrap();
        let n = g.n();
        for u in 0..n {
            let r = deletion_formula_residual(&g, &s, u).unwrap();
            assert_eq!(r.points.len(), 5);
            assert!(r.max_residual < 1e-8, "{name} delete {u}: {}", r.max_residual);
            for v in (u + 1)..n {
                let b = bridge_formula_residual(&g, &s, u, v).unwrap();
                assert!(b.max_residual < 1e-8, "{name} bridge ({u},{v}): {}", b.max_residual);
                let p = pair_deletion_residual(&g, &s, u, v).unwrap();
                assert!(p.max_residual < 1e-8, "{name} pair ({u},{v}): {}", p.max_residual);
            }
        }
    }
}

#[test]
fn walk_regular_pair_deletion_uses_the_vertex_constant() {
    for (name, g) in common::walk_regular_graphs() {
        let s = decompose(&g, None).unwrap();
        let m0: Vec<f64> = (0..s.eigenvalues().len()).map(|i| s.crossed(i, 0, 0)).collect();
        let phi = adrg::charpoly(&g);
        for v in 1..g.n() {
            let keep: Vec<usize> = (1..g.n()).filter(|&w| w != v).collect();
            let deleted = adrg::charpoly(&g.induced(&keep));
            let x = (g.degree(0) + 3) as f64;
            let diag: f64 = s.eigenvalues().iter().zip(&m0).map(|(l, m)| m / (x - l)).sum();
            let cross: f64 = (0..m0.len()).map(|i| s.crossed(i, 0, v) / (x - s.eigenvalues()[i])).sum();
            let lhs = deleted.eval_f64(x) / phi.eval_f64(x);
            assert!((lhs - (diag * diag - cross * cross)).abs() < 1e-8, "{name} (0,{v})");
        }
    }
}
