//! One- and two-vertex perturbations and their characteristic-polynomial
//! identities.
//!
//! New vertices (pendant, bridge, amalgam) are always appended at the end;
//! surviving vertices keep their relative order. Labels record provenance:
//! `pendant-of-3`, `amalgam-2+7`, `bridge-2-7`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{charpoly, cofactor_with, exact_ratio, safe_points, sample_panel};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::spectral::SpectralData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PerturbationKind {
    DeleteVertex,
    AddLoop,
    AddPendant,
    FlipEdge,
    Amalgamate,
    Bridge,
}

impl PerturbationKind {
    pub fn code(self) -> &'static str {
        match self {
            PerturbationKind::DeleteVertex => "P1",
            PerturbationKind::AddLoop => "P2",
            PerturbationKind::AddPendant => "P3",
            PerturbationKind::FlipEdge => "P4",
            PerturbationKind::Amalgamate => "P5",
            PerturbationKind::Bridge => "P6",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            PerturbationKind::DeleteVertex
            | PerturbationKind::AddLoop
            | PerturbationKind::AddPendant => 1,
            _ => 2,
        }
    }
}

/// One perturbation together with its vertex arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "args")]
pub enum PerturbationOp {
    DeleteVertex(usize),
    AddLoop(usize),
    AddPendant(usize),
    FlipEdge(usize, usize),
    Amalgamate(usize, usize),
    Bridge(usize, usize),
}

impl PerturbationOp {
    pub fn new(kind: PerturbationKind, args: &[usize]) -> Result<Self> {
        if args.len() != kind.arity() {
            return Err(Error::InvalidArgument(format!(
                "{} takes {} vertex argument(s), got {}",
                kind.code(),
                kind.arity(),
                args.len()
            )));
        }
        if kind.arity() == 2 && args[0] == args[1] {
            return Err(Error::SameVertex(args[0]));
        }
        Ok(match kind {
            PerturbationKind::DeleteVertex => PerturbationOp::DeleteVertex(args[0]),
            PerturbationKind::AddLoop => PerturbationOp::AddLoop(args[0]),
            PerturbationKind::AddPendant => PerturbationOp::AddPendant(args[0]),
            PerturbationKind::FlipEdge => PerturbationOp::FlipEdge(args[0], args[1]),
            PerturbationKind::Amalgamate => PerturbationOp::Amalgamate(args[0], args[1]),
            PerturbationKind::Bridge => PerturbationOp::Bridge(args[0], args[1]),
        })
    }

    pub fn kind(&self) -> PerturbationKind {
        match self {
            PerturbationOp::DeleteVertex(_) => PerturbationKind::DeleteVertex,
            PerturbationOp::AddLoop(_) => PerturbationKind::AddLoop,
            PerturbationOp::AddPendant(_) => PerturbationKind::AddPendant,
            PerturbationOp::FlipEdge(..) => PerturbationKind::FlipEdge,
            PerturbationOp::Amalgamate(..) => PerturbationKind::Amalgamate,
            PerturbationOp::Bridge(..) => PerturbationKind::Bridge,
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            PerturbationOp::DeleteVertex(u)
            | PerturbationOp::AddLoop(u)
            | PerturbationOp::AddPendant(u) => vec![u],
            PerturbationOp::FlipEdge(u, v)
            | PerturbationOp::Amalgamate(u, v)
            | PerturbationOp::Bridge(u, v) => vec![u, v],
        }
    }

    /// The same perturbation with its vertices renamed.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        let vs: Vec<usize> = self.vertices().into_iter().map(f).collect();
        PerturbationOp::new(self.kind(), &vs).expect("renaming keeps arity")
    }
}

impl fmt::Display for PerturbationOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(ToString::to_string).collect();
        write!(f, "{}:{}", self.kind().code(), vs.join(","))
    }
}

/// Parses descriptors such as `P1:4` or `P5:2,7`.
impl FromStr for PerturbationOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad perturbation descriptor '{s}'"));
        let (code, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let kind = match code.trim().to_ascii_uppercase().as_str() {
            "P1" => PerturbationKind::DeleteVertex,
            "P2" => PerturbationKind::AddLoop,
            "P3" => PerturbationKind::AddPendant,
            "P4" => PerturbationKind::FlipEdge,
            "P5" => PerturbationKind::Amalgamate,
            "P6" => PerturbationKind::Bridge,
            _ => return Err(bad()),
        };
        let args = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        PerturbationOp::new(kind, &args)
    }
}

/// A perturbed graph plus the fate of each original vertex.
#[derive(Clone, Debug)]
pub struct Applied {
    pub graph: Graph,
    /// `old_to_new[v]` is the index of original vertex `v`, or `None` if it
    /// was deleted or merged.
    pub old_to_new: Vec<Option<usize>>,
    /// The vertex this perturbation created, if any.
    pub created: Option<usize>,
}

fn keep_all(n: usize) -> Vec<Option<usize>> {
    (0..n).map(Some).collect()
}

fn distinct(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

fn remove_vertices(g: &Graph, gone: &[usize]) -> (Graph, Vec<Option<usize>>) {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !gone.contains(v)).collect();
    let mut map = vec![None; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        map[v] = Some(i);
    }
    (g.induced(&keep), map)
}

/// P1: `G − u`.
pub fn delete_vertex(g: &Graph, u: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::DeleteVertex(u))?.graph)
}

/// P2: `G + uu`, one loop at `u`.
pub fn add_loop(g: &Graph, u: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::AddLoop(u))?.graph)
}

/// P3: `G + uū`, a new pendant vertex attached to `u`.
pub fn add_pendant(g: &Graph, u: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::AddPendant(u))?.graph)
}

/// P4: `G ± uv`. Refuses pairs joined by more than one edge.
pub fn flip_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::FlipEdge(u, v))?.graph)
}

/// P5: `G_{u+v}`. The merged vertex has `adj[u][w] + adj[v][w]` edges to
/// every other `w` and `adj[u][u] + adj[v][v] + adj[u][v]` loops.
pub fn amalgamate(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::Amalgamate(u, v))?.graph)
}

/// P6: `G + uūv`, a new vertex adjacent to both `u` and `v`.
pub fn bridge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    Ok(apply(g, &PerturbationOp::Bridge(u, v))?.graph)
}

pub fn apply(g: &Graph, op: &PerturbationOp) -> Result<Applied> {
    let n = g.n();
    match *op {
        PerturbationOp::DeleteVertex(u) => {
            g.check_vertex(u)?;
            let (graph, old_to_new) = remove_vertices(g, &[u]);
            Ok(Applied {
                graph,
                old_to_new,
                created: None,
            })
        }
        PerturbationOp::AddLoop(u) => {
            g.check_vertex(u)?;
            let mut graph = g.clone();
            graph.set(u, u, g.get(u, u) + 1);
            Ok(Applied {
                graph,
                old_to_new: keep_all(n),
                created: None,
            })
        }
        PerturbationOp::AddPendant(u) => {
            g.check_vertex(u)?;
            let mut graph = g.clone();
            let w = graph.push_vertex(Some(format!("pendant-of-{u}")));
            graph.set(u, w, 1);
            Ok(Applied {
                graph,
                old_to_new: keep_all(n),
                created: Some(w),
            })
        }
        PerturbationOp::FlipEdge(u, v) => {
            distinct(g, u, v)?;
            let m = g.get(u, v);
            if m > 1 {
                return Err(Error::NotSimple { u, v, value: m });
            }
            let mut graph = g.clone();
            graph.set(u, v, 1 - m);
            Ok(Applied {
                graph,
                old_to_new: keep_all(n),
                created: None,
            })
        }
        PerturbationOp::Amalgamate(u, v) => {
            distinct(g, u, v)?;
            let (mut graph, old_to_new) = remove_vertices(g, &[u, v]);
            let w = graph.push_vertex(Some(format!("amalgam-{u}+{v}")));
            for x in 0..n {
                if let Some(nx) = old_to_new[x] {
                    graph.set(w, nx, g.get(u, x) + g.get(v, x));
                }
            }
            graph.set(w, w, g.get(u, u) + g.get(v, v) + g.get(u, v));
            Ok(Applied {
                graph,
                old_to_new,
                created: Some(w),
            })
        }
        PerturbationOp::Bridge(u, v) => {
            distinct(g, u, v)?;
            let mut graph = g.clone();
            let w = graph.push_vertex(Some(format!("bridge-{u}-{v}")));
            graph.set(u, w, 1);
            graph.set(v, w, 1);
            Ok(Applied {
                graph,
                old_to_new: keep_all(n),
                created: Some(w),
            })
        }
    }
}

/// Which of the one-vertex perturbations to apply across a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetPerturbation {
    DeleteVertex,
    AddLoop,
    AddPendant,
}

/// `G − U`, `G + UU` or `G + UŪ`. Order independent: deletions are indexed
/// against the original graph and pendants are appended in ascending order
/// of their anchors.
pub fn apply_set(g: &Graph, kind: SetPerturbation, set: &[usize]) -> Result<Graph> {
    if set.is_empty() {
        return Err(Error::InvalidArgument("vertex set is empty".into()));
    }
    for &u in set {
        g.check_vertex(u)?;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    match kind {
        SetPerturbation::DeleteVertex => {
            if sorted.len() == g.n() {
                return Err(Error::InvalidArgument("cannot delete every vertex".into()));
            }
            Ok(remove_vertices(g, &sorted).0)
        }
        SetPerturbation::AddLoop => {
            let mut out = g.clone();
            for &u in &sorted {
                out.set(u, u, out.get(u, u) + 1);
            }
            Ok(out)
        }
        SetPerturbation::AddPendant => {
            let mut out = g.clone();
            for &u in &sorted {
                let w = out.push_vertex(Some(format!("pendant-of-{u}")));
                out.set(u, w, 1);
            }
            Ok(out)
        }
    }
}

/// Both sides of one exact characteristic-polynomial identity.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub holds: bool,
}

/// Checks the exact identity attached to `op`:
///
/// * P1: `φ_{G−u}` equals the `(u,u)` entry of `adj(xI − A)`
/// * P2: `φ_{G+uu} = φ_G − φ_{G−u}`
/// * P3: `φ_{G+uū} = x φ_G − φ_{G−u}`
/// * P4: `φ_{G±uv} = φ_G − φ_{G−u−v} ∓ 2Ψ_uv`
/// * P5: `φ_{G_{u+v}} = φ_{G−u} + φ_{G−v} − (x − a_uv) φ_{G−u−v} − 2Ψ_uv`
/// * P6: `φ_{G+uūv} = x φ_G − φ_{G−u} − φ_{G−v} − 2Ψ_uv`
pub fn verify_identity(g: &Graph, op: &PerturbationOp) -> Result<IdentityCheck> {
    let perturbed = apply(g, op)?.graph;
    let lhs = charpoly(&perturbed);
    let phi = charpoly(g);
    let minus = |vs: &[usize]| charpoly(&remove_vertices(g, vs).0);
    let two = |p: &IntPoly| p.scale(&2.into());
    let (identity, rhs) = match *op {
        PerturbationOp::DeleteVertex(u) => {
            // the adjugate expansion read on the diagonal
            ("phi(G-u) = adj(xI-A)[u][u]", cofactor_with(g, &phi, u, u))
        }
        PerturbationOp::AddLoop(u) => ("phi(G+uu) = phi(G) - phi(G-u)", &phi - &minus(&[u])),
        PerturbationOp::AddPendant(u) => (
            "phi(G+uu') = x phi(G) - phi(G-u)",
            &phi.shift(1) - &minus(&[u]),
        ),
        PerturbationOp::FlipEdge(u, v) => {
            let psi = cofactor_with(g, &phi, u, v);
            let base = &phi - &minus(&[u, v]);
            if g.get(u, v) == 0 {
                ("phi(G+uv) = phi(G) - phi(G-u-v) - 2 Psi_uv", &base - &two(&psi))
            } else {
                ("phi(G-uv) = phi(G) - phi(G-u-v) + 2 Psi_uv", &base + &two(&psi))
            }
        }
        PerturbationOp::Amalgamate(u, v) => {
            let psi = cofactor_with(g, &phi, u, v);
            let x_minus_a = IntPoly::linear(g.get(u, v) as i64);
            let rhs = &(&(&minus(&[u]) + &minus(&[v])) - &(&x_minus_a * &minus(&[u, v]))) - &two(&psi);
            (
                "phi(G_u+v) = phi(G-u) + phi(G-v) - (x - a_uv) phi(G-u-v) - 2 Psi_uv",
                rhs,
            )
        }
        PerturbationOp::Bridge(u, v) => {
            let psi = cofactor_with(g, &phi, u, v);
            let rhs = &(&(&phi.shift(1) - &minus(&[u])) - &minus(&[v])) - &two(&psi);
            ("phi(G+uu'v) = x phi(G) - phi(G-u) - phi(G-v) - 2 Psi_uv", rhs)
        }
    };
    Ok(IdentityCheck {
        identity,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Numerical residuals of a resolvent-form identity at the sample panel.
#[derive(Clone, Debug, Serialize)]
pub struct NumericCheck {
    pub identity: &'static str,
    pub points: Vec<f64>,
    pub max_residual: f64,
}

/// `φ_{G+uūv}(x) / φ_G(x) = x − Σ_i (m_uu + m_vv + 2 m_uv)(λ_i) / (x − λ_i)`.
///
/// For a walk-regular graph `m_uu = m_vv = m_{0i}` and the right-hand side
/// becomes `x − 2 Σ_i (m_{0i} + m_uv(λ_i)) / (x − λ_i)`.
pub fn bridge_formula_residual(
    g: &Graph,
    s: &SpectralData,
    u: usize,
    v: usize,
) -> Result<NumericCheck> {
    distinct(g, u, v)?;
    let phi = charpoly(g);
    let bridged = charpoly(&bridge(g, u, v)?);
    let points = safe_points(&sample_panel(g), s.eigenvalues());
    let max_residual = points
        .iter()
        .map(|&x| {
            let lhs = exact_ratio(&bridged, &phi, x);
            let rhs = x - s.resolvent(u, u, x) - s.resolvent(v, v, x) - 2.0 * s.resolvent(u, v, x);
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max);
    Ok(NumericCheck {
        identity: "phi(G+uu'v)/phi(G) = x - sum_i (m_uu + m_vv + 2 m_uv)/(x - l_i)",
        points,
        max_residual,
    })
}

/// `φ_{G−u}(x) / φ_G(x) = Σ_i m_uu(λ_i) / (x − λ_i)`.
pub fn deletion_formula_residual(g: &Graph, s: &SpectralData, u: usize) -> Result<NumericCheck> {
    g.check_vertex(u)?;
    let phi = charpoly(g);
    let deleted = charpoly(&delete_vertex(g, u)?);
    let points = safe_points(&sample_panel(g), s.eigenvalues());
    let max_residual = points
        .iter()
        .map(|&x| (exact_ratio(&deleted, &phi, x) - s.resolvent(u, u, x)).abs())
        .fold(0.0, f64::max);
    Ok(NumericCheck {
        identity: "phi(G-u)/phi(G) = sum_i m_uu/(x - l_i)",
        points,
        max_residual,
    })
}

/// `φ_{G−u−v}(x) / φ_G(x) = R_uu R_vv − R_uv²` with `R = (xI − A)^{-1}`;
/// for walk-regular graphs this is `(Σ m_{0i}/(x−λ_i))² − (Σ m_uv(λ_i)/(x−λ_i))²`.
pub fn pair_deletion_residual(
    g: &Graph,
    s: &SpectralData,
    u: usize,
    v: usize,
) -> Result<NumericCheck> {
    distinct(g, u, v)?;
    let phi = charpoly(g);
    let deleted = charpoly(&remove_vertices(g, &[u, v]).0);
    let points = safe_points(&sample_panel(g), s.eigenvalues());
    let max_residual = points
        .iter()
        .map(|&x| {
            let ruv = s.resolvent(u, v, x);
            let rhs = s.resolvent(u, u, x) * s.resolvent(v, v, x) - ruv * ruv;
            (exact_ratio(&deleted, &phi, x) - rhs).abs()
        })
        .fold(0.0, f64::max);
    Ok(NumericCheck {
        identity: "phi(G-u-v)/phi(G) = R_uu R_vv - R_uv^2",
        points,
        max_residual,
    })
}
