//! Exact characteristic and cofactor polynomials of adjacency matrices.
//!
//! `charpoly` uses Berkowitz's division-free recurrence, first in checked
//! `i128` arithmetic and again over big integers if anything overflows.
//! `cofactor_poly` expands the adjugate of `xI - A` in powers of `A`:
//!
//! ```text
//! adj(xI - A) = Σ_{k<n} q_k(x) A^k,   q_k(x) = Σ_{j>k} c_j x^{j-k-1}
//! ```
//!
//! where `c_j` are the coefficients of `det(xI - A)`. This is Cayley–Hamilton
//! rearranged, so the `(u,v)` cofactor is a combination of exact walk counts.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{big_to_f64, IntPoly};
use crate::spectral::SpectralData;
use crate::walks::walk_column;

trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_u32(m: u32) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_u32(m: u32) -> Self {
        m as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn from_u32(m: u32) -> Self {
        BigInt::from(m)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Berkowitz: coefficients of `det(xI - A)`, highest degree first.
fn berkowitz<R: Ring>(g: &Graph) -> Option<Vec<R>> {
    let n = g.n();
    let a = |i: usize, j: usize| R::from_u32(g.get(i, j));
    let mut p: Vec<R> = vec![R::one()];
    for r in 0..n {
        // t = [1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C] with M the leading r×r block
        let mut t = Vec::with_capacity(r + 2);
        t.push(R::one());
        t.push(a(r, r).neg()?);
        let mut v: Vec<R> = (0..r).map(|i| a(i, r)).collect();
        for k in 0..r {
            let mut dot = R::zero();
            for (j, vj) in v.iter().enumerate() {
                if g.get(r, j) != 0 {
                    dot = dot.add(&a(r, j).mul(vj)?)?;
                }
            }
            t.push(dot.neg()?);
            if k + 1 < r {
                let mut next = Vec::with_capacity(r);
                for i in 0..r {
                    let mut acc = R::zero();
                    for (j, vj) in v.iter().enumerate() {
                        let m = g.get(i, j);
                        if m != 0 {
                            acc = acc.add(&R::from_u32(m).mul(vj)?)?;
                        }
                    }
                    next.push(acc);
                }
                v = next;
            }
        }
        let mut q = Vec::with_capacity(r + 2);
        for j in 0..(r + 2) {
            let mut acc = R::zero();
            for i in 0..=j.min(r) {
                acc = acc.add(&t[j - i].mul(&p[i])?)?;
            }
            q.push(acc);
        }
        p = q;
    }
    Some(p)
}

/// Exact `det(xI - A)`.
pub fn charpoly(g: &Graph) -> IntPoly {
    let desc: Vec<BigInt> = match berkowitz::<i128>(g) {
        Some(c) => c.into_iter().map(BigInt::from).collect(),
        None => berkowitz::<BigInt>(g).expect("big integer arithmetic cannot overflow"),
    };
    IntPoly::new(desc.into_iter().rev().collect())
}

/// Exact cospectrality: identical characteristic polynomials.
pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && charpoly(g) == charpoly(h)
}

/// The `(u,v)` cofactor `Ψ_uv(x)` of `xI - A`, for `u ≠ v`.
pub fn cofactor_poly(g: &Graph, u: usize, v: usize) -> Result<IntPoly> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument(
            "diagonal cofactor requested; use the characteristic polynomial of G - u".into(),
        ));
    }
    Ok(cofactor_with(g, &charpoly(g), u, v))
}

pub(crate) fn cofactor_with(g: &Graph, phi: &IntPoly, u: usize, v: usize) -> IntPoly {
    let n = g.n();
    let walks = walk_column(g, v, n.saturating_sub(1));
    let c = |j: usize| phi.coeff(j);
    // coefficient of x^m is Σ_k a_uv^(k) c_{m+k+1}
    let coeffs = (0..n)
        .map(|m| {
            let mut acc = <BigInt as Zero>::zero();
            for (k, col) in walks.iter().enumerate().take(n - m) {
                let w = &col[u];
                if !w.is_zero() {
                    acc += w * c(m + k + 1);
                }
            }
            acc
        })
        .collect();
    IntPoly::new(coeffs)
}

/// Sample points for resolvent identities: five consecutive integers past
/// the largest row sum, which bounds the spectral radius, so each point
/// sits at distance at least 1 from every eigenvalue.
pub fn sample_panel(g: &Graph) -> Vec<f64> {
    let bound = (0..g.n())
        .map(|u| g.row(u).iter().map(|&m| m as u64).sum::<u64>())
        .max()
        .unwrap_or(0);
    (0..5).map(|k| (bound + 2 + k) as f64).collect()
}

/// Ratio `p(x) / q(x)` evaluated exactly at an integer point, then rounded.
pub(crate) fn exact_ratio(p: &IntPoly, q: &IntPoly, x: f64) -> f64 {
    let xb = BigInt::from(x as i64);
    let (num, den) = (p.eval(&xb), q.eval(&xb));
    match (num.to_f64(), den.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // scale numerator and denominator down together
            let shift = den.bits().saturating_sub(900);
            big_to_f64(&(num >> shift)) / big_to_f64(&(den >> shift))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolventCheck {
    pub points: Vec<f64>,
    /// `Ψ_uv(x) / φ_G(x)` from the exact polynomials.
    pub exact: Vec<f64>,
    /// `Σ_i m_uv(λ_i) / (x - λ_i)` from the idempotents.
    pub spectral: Vec<f64>,
    pub max_discrepancy: f64,
}

/// Compares the cofactor against the spectral resolvent entry,
/// `Ψ_uv(x) = φ_G(x) Σ_i m_uv(λ_i)/(x − λ_i)`, after dividing through by
/// `φ_G(x)`. Points closer than 1/2 to an eigenvalue are skipped and
/// replaced by the next integer.
pub fn evaluate_rational_trace(
    g: &Graph,
    s: &SpectralData,
    u: usize,
    v: usize,
) -> Result<ResolventCheck> {
    let phi = charpoly(g);
    let psi = cofactor_poly(g, u, v)?;
    let points = safe_points(&sample_panel(g), s.eigenvalues());
    let exact: Vec<f64> = points.iter().map(|&x| exact_ratio(&psi, &phi, x)).collect();
    let spectral: Vec<f64> = points.iter().map(|&x| s.resolvent(u, v, x)).collect();
    let max_discrepancy = exact
        .iter()
        .zip(&spectral)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(ResolventCheck {
        points,
        exact,
        spectral,
        max_discrepancy,
    })
}

pub(crate) fn safe_points(panel: &[f64], eigenvalues: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(panel.len());
    let mut x = panel.first().copied().unwrap_or(2.0);
    while out.len() < panel.len() {
        if eigenvalues.iter().all(|l| (x - l).abs() >= 0.5) {
            out.push(x);
        }
        x += 1.0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::decompose;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_charpolys() {
        let k2 = path(2);
        assert_eq!(charpoly(&k2), p(&[-1, 0, 1]));
        let loop1 = Graph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(charpoly(&loop1), p(&[-1, 1]));
        assert_eq!(charpoly(&Graph::empty(0)), IntPoly::one());
        assert_eq!(charpoly(&path(3)), p(&[0, -2, 0, 1]));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // 30 vertices, every entry 10^6: det(xI - cJ) = x^29 (x - 30c)
        let c = 1_000_000u32;
        let rows = vec![vec![c; 30]; 30];
        let g = Graph::from_adjacency(&rows).unwrap();
        assert!(berkowitz::<i128>(&g).is_none());
        let phi = charpoly(&g);
        let expect = &IntPoly::x().pow(29) * &IntPoly::new(vec![BigInt::from(-30i64 * c as i64), BigInt::from(1)]);
        assert_eq!(phi, expect);
    }

    #[test]
    fn cospectral_basics() {
        let k2 = path(2);
        assert!(cospectral(&k2, &k2));
        assert!(!cospectral(&k2, &Graph::empty(2)));
        assert!(!cospectral(&k2, &path(3)));
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(cofactor_poly(&path(2), 0, 1).unwrap(), IntPoly::one());
        assert_eq!(cofactor_poly(&path(3), 0, 2).unwrap(), IntPoly::one());
        assert_eq!(cofactor_poly(&path(3), 0, 1).unwrap(), IntPoly::x());
        assert!(cofactor_poly(&path(3), 1, 1).is_err());
        assert!(cofactor_poly(&Graph::empty(3), 0, 2).unwrap().is_zero());
    }

    #[test]
    fn k2_resolvent_at_two() {
        let g = path(2);
        let s = decompose(&g, None).unwrap();
        let chk = evaluate_rational_trace(&g, &s, 0, 1).unwrap();
        // first panel point: row sum 1 + 2 = 3; both sides equal 1/(x^2 - 1)
        assert_eq!(chk.points[0], 3.0);
        assert!((chk.exact[0] - 1.0 / 8.0).abs() < 1e-15);
        assert!(chk.max_discrepancy < 1e-12);
        assert!((s.resolvent(0, 1, 2.0) * 3.0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn safe_points_skip_eigenvalues() {
        assert_eq!(safe_points(&[2.0, 3.0], &[2.2]), vec![3.0, 4.0]);
    }
}
