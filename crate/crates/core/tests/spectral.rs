mod common;

use adrg::spectral::{verify_idempotents, verify_multiplicity_identities};
use adrg::{charpoly, decompose, evaluate_rational_trace};
use num_traits::ToPrimitive;

/// Number of times `l` is a root of `p`, found by synthetic division until
/// the remainder stops vanishing.
fn deflation_multiplicity(coeffs: &[f64], l: f64) -> usize {
    let mut p = coeffs.to_vec();
    let mut count = 0;
    while p.len() > 1 {
        let deg = p.len() - 1;
        let mut q = vec![0.0; deg];
        let mut acc = 0.0;
        for k in (0..=deg).rev() {
            acc = acc * l + p[k];
            if k > 0 {
                q[k - 1] = acc;
            }
        }
        let scale = p.iter().map(|c| c.abs()).fold(1.0, f64::max);
        if acc.abs() > 1e-6 * scale {
            break;
        }
        count += 1;
        p = q;
    }
    count
}

#[test]
fn cluster_multiplicities_are_root_multiplicities() {
    for (name, g) in common::full_corpus() {
        let s = decompose(&g, None).unwrap();
        let coeffs: Vec<f64> = charpoly(&g).coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
        for (&l, &m) in s.eigenvalues().iter().zip(s.multiplicities()) {
            assert_eq!(deflation_multiplicity(&coeffs, l), m, "{name}: eigenvalue {l}");
        }
        assert_eq!(s.multiplicities().iter().sum::<usize>(), g.n(), "{name}");
    }
}

#[test]
fn crossed_multiplicity_identities_hold() {
    for (name, g) in common::full_corpus() {
        let s = decompose(&g, None).unwrap();
        let r = verify_multiplicity_identities(&s, &g).unwrap();
        assert!(r.max() < 1e-7, "{name}: {r:?}");
    }
}

#[test]
fn idempotent_residuals_are_small() {
    for (name, g) in common::full_corpus() {
        let s = decompose(&g, None).unwrap();
        let r = verify_idempotents(&s, &g);
        assert!(
            r.completeness < 1e-8 && r.orthogonality < 1e-8 && r.eigen_equation < 1e-8,
            "{name}: {r:?}"
        );
    }
}

#[test]
fn resolvent_matches_cofactor_ratio() {
    for (name, g) in common::walk_regular_graphs() {
        let s = decompose(&g, None).unwrap();
        for v in 1..g.n() {
            let r = evaluate_rational_trace(&g, &s, 0, v).unwrap();
            assert!(r.max_discrepancy < 1e-8, "{name} (0,{v}): {}", r.max_discrepancy);
        }
    }
}

#[test]
fn petersen_spectrum() {
    let g = adrg::catalog("petersen").unwrap();
    let s = decompose(&g, None).unwrap();
    let rounded: Vec<i64> = s.eigenvalues().iter().map(|l| l.round() as i64).collect();
    assert_eq!(rounded, vec![3, 1, -2]);
    assert_eq!(s.multiplicities(), &[1, 5, 4]);
}
