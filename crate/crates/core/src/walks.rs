//! Exact walk counts `(A^ℓ)_{uv}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::Graph;

/// Number of walks of length `ell` from `u` to `v`, by iterated exact
/// matrix-vector products.
pub fn walk_count(g: &Graph, u: usize, v: usize, ell: usize) -> Result<BigInt> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(walk_column(g, v, ell).swap_remove(ell).swap_remove(u))
}

/// Columns `A^k e_v` for `k = 0..=len`.
pub(crate) fn walk_column(g: &Graph, v: usize, len: usize) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let mut cur = vec![BigInt::zero(); n];
    cur[v] = BigInt::one();
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        let next = mat_vec(g, &cur);
        out.push(std::mem::replace(&mut cur, next));
    }
    out.push(cur);
    out
}

fn mat_vec(g: &Graph, x: &[BigInt]) -> Vec<BigInt> {
    (0..g.n())
        .map(|u| {
            let mut acc = BigInt::zero();
            for (w, &m) in g.row(u).iter().enumerate() {
                if m != 0 && !x[w].is_zero() {
                    acc += &x[w] * m;
                }
            }
            acc
        })
        .collect()
}

/// All powers `A^0, …, A^max_len`, kept for repeated lookups.
#[derive(Clone, Debug)]
pub struct WalkCounts {
    n: usize,
    powers: Vec<Vec<BigInt>>,
}

impl WalkCounts {
    pub fn new(g: &Graph, max_len: usize) -> Self {
        let n = g.n();
        let mut powers = Vec::with_capacity(max_len + 1);
        let mut identity = vec![BigInt::zero(); n * n];
        for u in 0..n {
            identity[u * n + u] = BigInt::one();
        }
        powers.push(identity);
        for _ in 0..max_len {
            let prev = powers.last().unwrap();
            let mut next = vec![BigInt::zero(); n * n];
            for u in 0..n {
                for (w, &m) in g.row(u).iter().enumerate() {
                    if m == 0 {
                        continue;
                    }
                    for v in 0..n {
                        let x = &prev[w * n + v];
                        if !x.is_zero() {
                            next[u * n + v] += x * m;
                        }
                    }
                }
            }
            powers.push(next);
        }
        WalkCounts { n, powers }
    }

    pub fn max_len(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn get(&self, ell: usize, u: usize, v: usize) -> &BigInt {
        &self.powers[ell][u * self.n + v]
    }
}
