//! Floating eigendecomposition, clustering into the distinct spectrum,
//! principal idempotents and crossed local multiplicities.
//!
//! Every clustering is certified against the exact characteristic
//! polynomial: the squarefree chain `g_0 = φ`, `g_j = gcd(g_{j-1}, g_{j-1}')`
//! gives squarefree factors `h_j = g_{j-1} / g_j` whose common roots are
//! exactly the roots of multiplicity at least `j`. A cluster of size `m` must
//! be a root of `h_1..h_m` and of no other `h_j`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::charpoly;
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::walks::WalkCounts;

pub use crate::walks::walk_count;

/// Newton-step bound used to decide that a clustered eigenvalue is a root
/// of one of the squarefree factors.
const ROOT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct SpectralData {
    n: usize,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    idempotents: Vec<Vec<f64>>,
    tolerance: f64,
    warnings: Vec<String>,
}

impl SpectralData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct eigenvalues, strictly descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `d`, the number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.eigenvalues.len().saturating_sub(1)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Row-major `n × n` idempotent `E_i`.
    pub fn idempotent(&self, i: usize) -> &[f64] {
        &self.idempotents[i]
    }

    /// `m_uv(λ_i) = (E_i)_{uv}`.
    #[inline]
    pub fn crossed(&self, i: usize, u: usize, v: usize) -> f64 {
        self.idempotents[i][u * self.n + v]
    }

    /// `(m_uv(λ_0), …, m_uv(λ_d))`.
    pub fn crossed_vector(&self, u: usize, v: usize) -> Vec<f64> {
        (0..self.eigenvalues.len()).map(|i| self.crossed(i, u, v)).collect()
    }

    /// `((xI - A)^{-1})_{uv} = Σ_i m_uv(λ_i) / (x - λ_i)`.
    pub fn resolvent(&self, u: usize, v: usize, x: f64) -> f64 {
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(i, l)| self.crossed(i, u, v) / (x - l))
            .sum()
    }

    pub fn to_json(&self, with_idempotents: bool) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            n: usize,
            eigenvalues: &'a [f64],
            multiplicities: &'a [usize],
            tolerance: f64,
            #[serde(skip_serializing_if = "<[String]>::is_empty")]
            warnings: &'a [String],
            #[serde(skip_serializing_if = "Option::is_none")]
            idempotents: Option<&'a [Vec<f64>]>,
        }
        serde_json::to_string(&View {
            n: self.n,
            eigenvalues: &self.eigenvalues,
            multiplicities: &self.multiplicities,
            tolerance: self.tolerance,
            warnings: &self.warnings,
            idempotents: with_idempotents.then_some(self.idempotents.as_slice()),
        })
        .expect("spectral data serializes")
    }
}

pub fn default_tolerance(g: &Graph) -> f64 {
    let bound = (0..g.n())
        .map(|u| g.row(u).iter().map(|&m| m as f64).sum::<f64>())
        .fold(0.0, f64::max);
    1e-9 * bound.max(1.0)
}

/// Full symmetric eigendecomposition. Consecutive sorted eigenvalues within
/// `tol` share a cluster; gaps in `(tol, 10·tol]` attach a warning.
pub fn decompose(g: &Graph, tol: Option<f64>) -> Result<SpectralData> {
    let n = g.n();
    let tolerance = tol.unwrap_or_else(|| default_tolerance(g));
    if !(tolerance > 0.0) {
        return Err(Error::InvalidArgument("clustering tolerance must be positive".into()));
    }
    if n == 0 {
        return Ok(SpectralData {
            n,
            eigenvalues: vec![],
            multiplicities: vec![],
            idempotents: vec![],
            tolerance,
            warnings: vec![],
        });
    }
    let a = DMatrix::from_fn(n, n, |i, j| g.get(i, j) as f64);
    let eig = a.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));

    let mut clusters: Vec<Vec<usize>> = vec![vec![order[0]]];
    let mut warnings = Vec::new();
    for w in order.windows(2) {
        let gap = eig.eigenvalues[w[0]] - eig.eigenvalues[w[1]];
        if gap <= tolerance {
            clusters.last_mut().unwrap().push(w[1]);
        } else {
            if gap <= 10.0 * tolerance {
                warnings.push(format!(
                    "ambiguous gap {gap:.3e} between {} and {}",
                    eig.eigenvalues[w[0]], eig.eigenvalues[w[1]]
                ));
            }
            clusters.push(vec![w[1]]);
        }
    }

    let mut eigenvalues = Vec::with_capacity(clusters.len());
    let mut multiplicities = Vec::with_capacity(clusters.len());
    let mut idempotents = Vec::with_capacity(clusters.len());
    for cluster in &clusters {
        let mean = cluster.iter().map(|&k| eig.eigenvalues[k]).sum::<f64>() / cluster.len() as f64;
        let mut e = vec![0.0; n * n];
        for &k in cluster {
            let col = eig.eigenvectors.column(k);
            for u in 0..n {
                let cu = col[u];
                for v in 0..n {
                    e[u * n + v] += cu * col[v];
                }
            }
        }
        eigenvalues.push(mean);
        multiplicities.push(cluster.len());
        idempotents.push(e);
    }

    let exact = root_multiplicities(&charpoly(g), &eigenvalues);
    if exact != multiplicities {
        return Err(Error::Invariant(format!(
            "clustered multiplicities {multiplicities:?} at {eigenvalues:?} disagree with the exact characteristic polynomial ({exact:?})"
        )));
    }

    Ok(SpectralData {
        n,
        eigenvalues,
        multiplicities,
        idempotents,
        tolerance,
        warnings,
    })
}

/// Squarefree factors `h_1, h_2, …` of a monic polynomial; `h_j` carries the
/// roots of multiplicity at least `j`, each once.
pub fn squarefree_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut g = p.clone();
    while g.degree().unwrap_or(0) > 0 {
        let next = g.gcd(&g.derivative());
        let h = g
            .div_exact_unit(&next)
            .expect("gcd of monic integer polynomials is monic");
        out.push(h);
        g = next;
    }
    out
}

/// For each approximate root, how many squarefree factors vanish there.
pub fn root_multiplicities(p: &IntPoly, roots: &[f64]) -> Vec<usize> {
    let chain = squarefree_chain(p);
    let derivs: Vec<IntPoly> = chain.iter().map(IntPoly::derivative).collect();
    roots
        .iter()
        .map(|&x| {
            chain
                .iter()
                .zip(&derivs)
                .filter(|(h, dh)| {
                    // Horner values; a Newton step below the bound marks a root
                    let step = h.eval_f64(x) / dh.eval_f64(x);
                    step.abs() < ROOT_TOLERANCE * x.abs().max(1.0)
                })
                .count()
        })
        .collect()
}

/// Returns `(m_uv(λ_i))`, the crossed local multiplicity.
pub fn crossed_multiplicity(s: &SpectralData, u: usize, v: usize, i: usize) -> Result<f64> {
    if u >= s.n || v >= s.n {
        return Err(Error::VertexOutOfRange { vertex: u.max(v), n: s.n });
    }
    if i >= s.eigenvalues.len() {
        return Err(Error::InvalidArgument(format!(
            "eigenvalue index {i} out of range (d = {})",
            s.d()
        )));
    }
    Ok(s.crossed(i, u, v))
}

/// Worst residuals of the three crossed-multiplicity identities.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MultiplicityResiduals {
    /// `Σ_i m_uv(λ_i) = δ_uv`
    pub completeness: f64,
    /// `Σ_w a_vw m_uw(λ_i) = λ_i m_uv(λ_i)`
    pub eigen_equation: f64,
    /// `a_uv^(ℓ) = Σ_i m_uv(λ_i) λ_i^ℓ` for `ℓ ≤ d`
    pub walk_expansion: f64,
}

impl MultiplicityResiduals {
    pub fn max(&self) -> f64 {
        self.completeness.max(self.eigen_equation).max(self.walk_expansion)
    }
}

pub fn verify_multiplicity_identities(s: &SpectralData, g: &Graph) -> Result<MultiplicityResiduals> {
    let n = g.n();
    if s.n != n {
        return Err(Error::InvalidArgument("spectral data belongs to another graph".into()));
    }
    let d = s.d();
    let walks = WalkCounts::new(g, d);
    let mut res = MultiplicityResiduals {
        completeness: 0.0,
        eigen_equation: 0.0,
        walk_expansion: 0.0,
    };
    for u in 0..n {
        for v in 0..n {
            let total: f64 = (0..=d).map(|i| s.crossed(i, u, v)).sum();
            let delta = if u == v { 1.0 } else { 0.0 };
            res.completeness = res.completeness.max((total - delta).abs());

            for (i, &l) in s.eigenvalues.iter().enumerate() {
                let lhs: f64 = g
                    .row(v)
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(w, &m)| m as f64 * s.crossed(i, u, w))
                    .sum();
                res.eigen_equation = res.eigen_equation.max((lhs - l * s.crossed(i, u, v)).abs());
            }

            for ell in 0..=d {
                let expansion: f64 = s
                    .eigenvalues
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| s.crossed(i, u, v) * l.powi(ell as i32))
                    .sum();
                let exact = crate::poly::big_to_f64(walks.get(ell, u, v));
                res.walk_expansion = res.walk_expansion.max((exact - expansion).abs());
            }
        }
    }
    Ok(res)
}

/// Residuals of `Σ E_i = I`, `E_i E_j = δ_ij E_i` and `A E_i = λ_i E_i`.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentResiduals {
    pub completeness: f64,
    pub orthogonality: f64,
    pub eigen_equation: f64,
}

pub fn verify_idempotents(s: &SpectralData, g: &Graph) -> IdempotentResiduals {
    let n = s.n;
    let k = s.eigenvalues.len();
    let mats: Vec<DMatrix<f64>> = s
        .idempotents
        .iter()
        .map(|e| DMatrix::from_row_slice(n, n, e))
        .collect();
    let a = DMatrix::from_fn(n, n, |i, j| g.get(i, j) as f64);
    let mut sum = DMatrix::<f64>::zeros(n, n);
    for m in &mats {
        sum += m;
    }
    let completeness = (sum - DMatrix::<f64>::identity(n, n)).amax();
    let mut orthogonality: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let prod = &mats[i] * &mats[j];
            let target = if i == j { mats[i].clone() } else { DMatrix::zeros(n, n) };
            orthogonality = orthogonality.max((prod - target).amax());
        }
    }
    let eigen_equation = (0..k)
        .map(|i| (&a * &mats[i] - &mats[i] * s.eigenvalues[i]).amax())
        .fold(0.0, f64::max);
    IdempotentResiduals {
        completeness,
        orthogonality,
        eigen_equation,
    }
}

/// Pairs up the distinct eigenvalues of two spectra that should coincide.
pub(crate) fn aligned(a: &SpectralData, b: &SpectralData) -> Result<()> {
    let tol = a.tolerance.max(b.tolerance) * 10.0;
    let same = a.eigenvalues.len() == b.eigenvalues.len()
        && a.multiplicities == b.multiplicities
        && a
            .eigenvalues
            .iter()
            .zip(&b.eigenvalues)
            .all(|(x, y)| (x - y).abs() <= tol.max(1e-9));
    if same {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "spectra of cospectral graphs do not align: {:?} vs {:?}",
            a.eigenvalues, b.eigenvalues
        )))
    }
}
