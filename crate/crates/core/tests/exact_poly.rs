mod common;

use adrg::perturb::delete_vertex;
use adrg::{charpoly, cofactor_poly, decompose, Graph, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Fraction-free Gaussian elimination.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn shifted(g: &Graph, x: i64, drop_row: Option<usize>, drop_col: Option<usize>) -> Vec<Vec<BigInt>> {
    let n = g.n();
    (0..n)
        .filter(|&i| Some(i) != drop_row)
        .map(|i| {
            (0..n)
                .filter(|&j| Some(j) != drop_col)
                .map(|j| {
                    let diag = if i == j { x } else { 0 };
                    BigInt::from(diag - g.get(i, j) as i64)
                })
                .collect()
        })
        .collect()
}

/// Coefficients of the unique polynomial of degree < points.len() through
/// the given values.
fn interpolate(points: &[i64], values: &[BigInt]) -> IntPoly {
    let k = points.len();
    let mut coeffs = vec![BigRational::zero(); k];
    for (i, (&xi, yi)) in points.iter().zip(values).enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(xj.into());
            }
            basis = next;
            denom *= BigRational::from_integer((xi - xj).into());
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "interpolated coefficient {c} is not integral");
                c.to_integer()
            })
            .collect(),
    )
}

fn charpoly_oracle(g: &Graph) -> IntPoly {
    let points: Vec<i64> = (0..=g.n() as i64).collect();
    let values: Vec<BigInt> = points.iter().map(|&x| bareiss(shifted(g, x, None, None))).collect();
    interpolate(&points, &values)
}

fn cofactor_oracle(g: &Graph, u: usize, v: usize) -> IntPoly {
    let points: Vec<i64> = (0..g.n() as i64).collect();
    let sign = if (u + v) % 2 == 0 { 1 } else { -1 };
    let values: Vec<BigInt> = points
        .iter()
        .map(|&x| bareiss(shifted(g, x, Some(v), Some(u))) * sign)
        .collect();
    interpolate(&points, &values)
}

fn minus_pair(g: &Graph, u: usize, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != u && w != v).collect();
    g.induced(&keep)
}

#[test]
fn charpoly_matches_determinant_interpolation() {
    for (name, g) in common::full_corpus() {
        assert_eq!(charpoly(&g), charpoly_oracle(&g), "{name}");
    }
}

#[test]
fn charpoly_of_pseudographs_matches_oracle() {
    let g = Graph::from_adjacency(&[
        vec![2, 1, 0, 3],
        vec![1, 0, 2, 0],
        vec![0, 2, 1, 1],
        vec![3, 0, 1, 0],
    ])
    .unwrap();
    assert_eq!(charpoly(&g), charpoly_oracle(&g));
}

#[test]
fn cofactors_match_minor_interpolation() {
    for (name, g) in common::random_corpus().into_iter().take(60).map(|g| ("random", g)) {
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    assert_eq!(cofactor_poly(&g, u, v).unwrap(), cofactor_oracle(&g, u, v), "{name}");
                }
            }
        }
    }
    let p = adrg::catalog("petersen").unwrap();
    assert_eq!(cofactor_poly(&p, 0, 7).unwrap(), cofactor_oracle(&p, 0, 7));
}

#[test]
fn cofactor_degree_is_n_minus_one_minus_distance() {
    for (name, g) in common::full_corpus().into_iter().filter(|(_, g)| g.n() <= 12) {
        let d = g.distances();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    let psi = cofactor_poly(&g, u, v).unwrap();
                    let expect = g.n() - 1 - d.get(u, v).unwrap() as usize;
                    assert_eq!(psi.degree(), Some(expect), "{name} ({u},{v})");
                    assert!(psi.leading().unwrap().is_positive());
                }
            }
        }
    }
}

#[test]
fn jacobi_identity_at_two_indices() {
    for (name, g) in common::full_corpus().into_iter().filter(|(_, g)| g.n() <= 10) {
        let phi = charpoly(&g);
        let n = g.n();
        let single: Vec<IntPoly> = (0..n).map(|u| charpoly(&delete_vertex(&g, u).unwrap())).collect();
        for u in 0..n {
            for v in (u + 1)..n {
                let psi = cofactor_poly(&g, u, v).unwrap();
                let lhs = &psi * &psi;
                let rhs = &(&single[u] * &single[v]) - &(&phi * &charpoly(&minus_pair(&g, u, v)));
                assert_eq!(lhs, rhs, "{name} ({u},{v})");
            }
        }
    }
}

#[test]
fn disjoint_union_multiplies_charpolys() {
    let corpus = common::random_corpus();
    for pair in corpus.chunks(2).take(40) {
        let (a, b) = (&pair[0], &pair[1]);
        assert_eq!(charpoly(&a.disjoint_union(b)), &charpoly(a) * &charpoly(b));
    }
}

#[test]
fn low_coefficients_track_traces() {
    for (name, g) in common::full_corpus() {
        let p = charpoly(&g);
        let n = g.n();
        let c1 = p.coeff(n - 1);
        let c2 = p.coeff(n - 2);
        let tr1: i64 = (0..n).map(|u| g.get(u, u) as i64).sum();
        let tr2: i64 = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| (g.get(u, v) as i64).pow(2))
            .sum();
        assert_eq!(BigInt::from(-tr1), c1, "{name}");
        assert_eq!(BigInt::from(tr2), &c1 * &c1 - BigInt::from(2) * c2, "{name}");
    }
}

#[test]
fn floating_roots_multiply_back_to_the_exact_coefficients() {
    for (name, g) in common::full_corpus() {
        let s = decompose(&g, None).unwrap();
        let mut prod = vec![1.0f64];
        for (&l, &m) in s.eigenvalues().iter().zip(s.multiplicities()) {
            for _ in 0..m {
                let mut next = vec![0.0; prod.len() + 1];
                for (d, c) in prod.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * l;
                }
                prod = next;
            }
        }
        let exact = charpoly(&g);
        let scale = exact.coeffs().iter().map(|c| c.to_f64().unwrap().abs()).fold(1.0, f64::max);
        for (d, c) in prod.iter().enumerate() {
            let e = exact.coeff(d).to_f64().unwrap();
            assert!(
                (c - e).abs() <= 1e-6 * e.abs().max(1.0) || (c - e).abs() <= 1e-12 * scale,
                "{name}: coefficient {d} is {e}, roots give {c}"
            );
        }
    }
}
