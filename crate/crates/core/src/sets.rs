//! Removal-cospectral and isometric vertex sets, perturbations applied to
//! corresponding sets, and generation of cospectral mates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{GraphContext, MULTIPLICITY_TOLERANCE, AUTHORITY_BAND};
use crate::error::{Error, Result};
use crate::exact::charpoly;
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::perturb::{self, PerturbationOp};
use crate::poly::IntPoly;
use crate::spectral::{decompose, SpectralData};
use crate::walks::WalkCounts;

/// Largest set accepted by the exhaustive subset route.
pub const MAX_EXHAUSTIVE_SET: usize = 12;

/// Largest set for which [`find_correspondence`] tries every bijection.
pub const MAX_BIJECTION_SEARCH: usize = 6;

/// Vertex sets `U ⊆ V(G)` and `U′ ⊆ V(G′)` paired positionally:
/// `u[i] ↔ u_prime[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCorrespondence {
    pub u: Vec<usize>,
    pub u_prime: Vec<usize>,
}

impl SetCorrespondence {
    pub fn new(u: Vec<usize>, u_prime: Vec<usize>) -> Result<Self> {
        if u.len() != u_prime.len() {
            return Err(Error::InvalidArgument(format!(
                "sets have sizes {} and {}",
                u.len(),
                u_prime.len()
            )));
        }
        for side in [&u, &u_prime] {
            let mut s = side.clone();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument(format!("repeated vertex in {side:?}")));
            }
        }
        Ok(SetCorrespondence { u, u_prime })
    }

    /// `U ↔ U` vertex by vertex.
    pub fn identity(u: Vec<usize>) -> Self {
        SetCorrespondence {
            u_prime: u.clone(),
            u,
        }
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    fn check(&self, g: &Graph, gp: &Graph) -> Result<()> {
        for &v in &self.u {
            g.check_vertex(v)?;
        }
        for &v in &self.u_prime {
            gp.check_vertex(v)?;
        }
        Ok(())
    }

    /// Image of `v ∈ U` in `U′`.
    pub fn image(&self, v: usize) -> Option<usize> {
        self.u.iter().position(|&x| x == v).map(|i| self.u_prime[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalMethod {
    /// Compare crossed multiplicities `m_uv(λ_i)` and `m′_{u′v′}(λ_i)`.
    Multiplicity,
    /// Compare `φ_{G−W}` and `φ_{G′−W′}` for every subset `W ⊆ U`.
    Exhaustive,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityRoute {
    pub holds: bool,
    pub max_deviation: f64,
    /// `(u, v, i)` with the largest deviation, when the route fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetRoute {
    pub holds: bool,
    pub subsets_checked: usize,
    /// First subset `W ⊆ U` whose removal breaks cospectrality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RemovalCospectral {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<MultiplicityRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<SubsetRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn require_cospectral(g: &Graph, gp: &Graph) -> Result<()> {
    if g.n() != gp.n() || charpoly(g) != charpoly(gp) {
        return Err(Error::NotCospectral);
    }
    Ok(())
}

/// Decides whether `c` pairs removal-cospectral sets of the cospectral
/// graphs `g` and `gp`.
pub fn is_removal_cospectral(
    g: &Graph,
    gp: &Graph,
    c: &SetCorrespondence,
    method: RemovalMethod,
) -> Result<RemovalCospectral> {
    c.check(g, gp)?;
    require_cospectral(g, gp)?;
    if method != RemovalMethod::Multiplicity && c.len() > MAX_EXHAUSTIVE_SET {
        return Err(Error::SizeBound(format!(
            "exhaustive route takes at most {MAX_EXHAUSTIVE_SET} vertices, got {}",
            c.len()
        )));
    }
    let multiplicity = match method {
        RemovalMethod::Exhaustive => None,
        _ => {
            let s = decompose(g, None)?;
            let sp = if g == gp { s.clone() } else { decompose(gp, None)? };
            Some(multiplicity_route(&s, &sp, c)?)
        }
    };
    let exhaustive = match method {
        RemovalMethod::Multiplicity => None,
        _ => Some(subset_route(g, gp, c, c.len())),
    };
    let mut note = None;
    let verdict = match (&multiplicity, &exhaustive) {
        (Some(m), Some(e)) => {
            if m.holds != e.holds {
                if e.holds && m.max_deviation <= AUTHORITY_BAND {
                    note = Some(format!(
                        "crossed multiplicities deviate by {:.3e}; exact subset route is authoritative",
                        m.max_deviation
                    ));
                } else {
                    return Err(Error::Invariant(format!(
                        "removal-cospectral routes disagree: multiplicities {} (deviation {:.3e}), subsets {} (witness {:?})",
                        m.holds, m.max_deviation, e.holds, e.witness
                    )));
                }
            }
            e.holds
        }
        (Some(m), None) => m.holds,
        (None, Some(e)) => e.holds,
        (None, None) => unreachable!("at least one route runs"),
    };
    Ok(RemovalCospectral {
        verdict,
        multiplicity,
        exhaustive,
        note,
    })
}

fn multiplicity_route(
    s: &SpectralData,
    sp: &SpectralData,
    c: &SetCorrespondence,
) -> Result<MultiplicityRoute> {
    crate::spectral::aligned(s, sp)?;
    let mut worst = 0.0f64;
    let mut witness = None;
    for (a, (&u, &up)) in c.u.iter().zip(&c.u_prime).enumerate() {
        for (&v, &vp) in c.u.iter().zip(&c.u_prime).skip(a) {
            for i in 0..s.eigenvalues().len() {
                let dev = (s.crossed(i, u, v) - sp.crossed(i, up, vp)).abs();
                if dev > worst {
                    worst = dev;
                    witness = Some((u, v, i));
                }
            }
        }
    }
    let holds = worst <= MULTIPLICITY_TOLERANCE;
    Ok(MultiplicityRoute {
        holds,
        max_deviation: worst,
        witness: if holds { None } else { witness },
    })
}

/// Subsets of `U` of size at most `max_size`, as index masks, in order of
/// size then lexicographically.
fn masks(k: usize, max_size: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..(1u32 << k))
        .filter(|m| m.count_ones() as usize <= max_size)
        .collect();
    all.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    all
}

fn subset_route(g: &Graph, gp: &Graph, c: &SetCorrespondence, max_size: usize) -> SubsetRoute {
    let all = masks(c.len(), max_size);
    let results: Vec<bool> = all
        .par_iter()
        .map(|&m| {
            let pick = |side: &[usize]| -> Vec<usize> {
                (0..side.len()).filter(|i| m >> i & 1 == 1).map(|i| side[i]).collect()
            };
            let w = pick(&c.u);
            let wp = pick(&c.u_prime);
            charpoly(&without(g, &w)) == charpoly(&without(gp, &wp))
        })
        .collect();
    let witness = results.iter().position(|ok| !ok).map(|j| {
        (0..c.len())
            .filter(|i| all[j] >> i & 1 == 1)
            .map(|i| c.u[i])
            .collect()
    });
    SubsetRoute {
        holds: witness.is_none(),
        subsets_checked: all.len(),
        witness,
    }
}

fn without(g: &Graph, w: &[usize]) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !w.contains(v)).collect();
    g.induced(&keep)
}

/// Distances agree pair by pair under the correspondence.
pub fn is_isometric(g: &Graph, gp: &Graph, c: &SetCorrespondence) -> Result<bool> {
    c.check(g, gp)?;
    let d = g.distances();
    let dp = gp.distances();
    Ok(c.u.iter().zip(&c.u_prime).enumerate().all(|(a, (&u, &up))| {
        c.u.iter()
            .zip(&c.u_prime)
            .skip(a + 1)
            .all(|(&v, &vp)| d.get(u, v) == dp.get(up, vp))
    }))
}

/// Removal-cospectrality tested only on subsets with at most two vertices.
pub fn godsil_pair_reduction(g: &Graph, gp: &Graph, c: &SetCorrespondence) -> Result<SubsetRoute> {
    c.check(g, gp)?;
    require_cospectral(g, gp)?;
    Ok(subset_route(g, gp, c, 2))
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkAgreement {
    pub ell_max: usize,
    pub holds: bool,
    /// `(ℓ, u, v, a_uv, a′_{u′v′})` for the first mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize, usize, String, String)>,
}

/// Exact walk counts between corresponding pairs agree for `ℓ ≤ ell_max`
/// (default `d`).
pub fn schwenk_walk_check(
    g: &Graph,
    gp: &Graph,
    c: &SetCorrespondence,
    ell_max: Option<usize>,
) -> Result<WalkAgreement> {
    c.check(g, gp)?;
    let ell_max = match ell_max {
        Some(l) => l,
        None => decompose(g, None)?.d(),
    };
    let w = WalkCounts::new(g, ell_max);
    let wp = WalkCounts::new(gp, ell_max);
    for ell in 0..=ell_max {
        for (&u, &up) in c.u.iter().zip(&c.u_prime) {
            for (&v, &vp) in c.u.iter().zip(&c.u_prime) {
                let (a, b) = (w.get(ell, u, v), wp.get(ell, up, vp));
                if a != b {
                    return Ok(WalkAgreement {
                        ell_max,
                        holds: false,
                        witness: Some((ell, u, v, a.to_string(), b.to_string())),
                    });
                }
            }
        }
    }
    Ok(WalkAgreement {
        ell_max,
        holds: true,
        witness: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PerturbedPair {
    pub graph: Graph,
    pub graph_prime: Graph,
    pub sets: SetCorrespondence,
    pub cospectral: bool,
    pub removal_cospectral: bool,
}

impl PerturbedPair {
    pub fn holds(&self) -> bool {
        self.cospectral && self.removal_cospectral
    }
}

/// Applies `ops` to `(G, U)` and, through the correspondence, to
/// `(G′, U′)`. Operation vertices are indices into the current `G`-side
/// graph and must lie in the tracked set. Deleted vertices leave the sets,
/// an amalgam replaces its two parents, and new pendant or bridging
/// vertices join both sets.
pub fn perturb_cospectral_check(
    g: &Graph,
    gp: &Graph,
    c: &SetCorrespondence,
    ops: &[PerturbationOp],
) -> Result<PerturbedPair> {
    c.check(g, gp)?;
    let start = is_removal_cospectral(g, gp, c, strongest(c))?;
    if !start.verdict {
        return Err(Error::Refused(
            "the starting sets are not removal-cospectral".into(),
        ));
    }
    let (mut cur, mut cur_p, mut sets) = (g.clone(), gp.clone(), c.clone());
    for op in ops {
        let mapped = op.vertices()
            .iter()
            .map(|&v| {
                sets.image(v).ok_or_else(|| {
                    Error::InvalidArgument(format!("{op}: vertex {v} is not in the tracked set"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let op_p = PerturbationOp::new(op.kind(), &mapped)?;
        let a = perturb::apply(&cur, op)?;
        let ap = perturb::apply(&cur_p, &op_p)?;
        let mut u = Vec::new();
        let mut up = Vec::new();
        for (&x, &xp) in sets.u.iter().zip(&sets.u_prime) {
            match (a.old_to_new[x], ap.old_to_new[xp]) {
                (Some(y), Some(yp)) => {
                    u.push(y);
                    up.push(yp);
                }
                (None, None) => {}
                _ => return Err(Error::Invariant("tracked sets lost their pairing".into())),
            }
        }
        match (a.created, ap.created) {
            (Some(y), Some(yp)) => {
                u.push(y);
                up.push(yp);
            }
            (None, None) => {}
            _ => return Err(Error::Invariant("only one side created a vertex".into())),
        }
        sets = SetCorrespondence::new(u, up)?;
        cur = a.graph;
        cur_p = ap.graph;
    }
    let cospectral = cur.n() == cur_p.n() && charpoly(&cur) == charpoly(&cur_p);
    let removal_cospectral = cospectral
        && (sets.is_empty()
            || is_removal_cospectral(&cur, &cur_p, &sets, strongest(&sets))?.verdict);
    Ok(PerturbedPair {
        graph: cur,
        graph_prime: cur_p,
        sets,
        cospectral,
        removal_cospectral,
    })
}

/// Both routes when the exact one is affordable.
fn strongest(c: &SetCorrespondence) -> RemovalMethod {
    if c.len() <= MAX_EXHAUSTIVE_SET {
        RemovalMethod::Both
    } else {
        RemovalMethod::Multiplicity
    }
}

/// Searches the bijections `U → U′` (lexicographic in the order of `U′`)
/// for one that is isometric and removal-cospectral.
pub fn find_correspondence(
    g: &Graph,
    gp: &Graph,
    u: &[usize],
    u_prime: &[usize],
) -> Result<Option<SetCorrespondence>> {
    let base = SetCorrespondence::new(u.to_vec(), u_prime.to_vec())?;
    base.check(g, gp)?;
    if u.len() > MAX_BIJECTION_SEARCH {
        return Err(Error::SizeBound(format!(
            "bijection search takes at most {MAX_BIJECTION_SEARCH} vertices, got {}",
            u.len()
        )));
    }
    require_cospectral(g, gp)?;
    let d = g.distances();
    let dp = gp.distances();
    let s = decompose(g, None)?;
    let sp = if g == gp { s.clone() } else { decompose(gp, None)? };
    let mut images = u_prime.to_vec();
    images.sort_unstable();
    loop {
        let isometric = (0..u.len()).all(|a| {
            (a + 1..u.len()).all(|b| d.get(u[a], u[b]) == dp.get(images[a], images[b]))
        });
        if isometric {
            let c = SetCorrespondence::new(u.to_vec(), images.clone())?;
            if multiplicity_route(&s, &sp, &c)?.holds && subset_route(g, gp, &c, c.len()).holds {
                return Ok(Some(c));
            }
        }
        if !next_permutation(&mut images) {
            return Ok(None);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All independent sets of size `k`, lexicographically.
pub fn independent_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n() {
            if g.get(v, v) == 0 && cur.iter().all(|&w| !g.adjacent(v, w)) {
                cur.push(v);
                grow(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(g, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The pair perturbation used by [`generate_mates`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MateOp {
    FlipEdge,
    Amalgamate,
    Bridge,
    /// `G − u − v`; at `h = 0` the single deletion `G − u`.
    DeleteBoth,
}

impl std::str::FromStr for MateOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p4" | "flip" | "flip_edge" => Ok(MateOp::FlipEdge),
            "p5" | "amalgamate" => Ok(MateOp::Amalgamate),
            "p6" | "bridge" => Ok(MateOp::Bridge),
            "delete" | "delete_both" | "p1" => Ok(MateOp::DeleteBoth),
            _ => Err(Error::InvalidArgument(format!("unknown mate operation '{s}'"))),
        }
    }
}

/// Perturbation applied to every vertex of a set in [`set_mates`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetOp {
    /// `G − U`
    Delete,
    /// Join every two vertices of `U` that are not yet adjacent.
    Complete,
}

#[derive(Clone, Debug, Serialize)]
pub struct MateClass {
    pub graph: Graph,
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MateFamily {
    pub charpoly: IntPoly,
    pub classes: Vec<MateClass>,
    /// Every two classes differ in a vertex invariant or were separated by
    /// the isomorphism search.
    pub pairwise_non_isomorphic: bool,
}

impl MateFamily {
    pub fn graphs(&self) -> Vec<&Graph> {
        self.classes.iter().map(|c| &c.graph).collect()
    }
}

/// Cheap isomorphism invariant: sorted per-vertex (loops, row multiset,
/// distance profile).
fn invariant(g: &Graph) -> Vec<(u32, Vec<u32>, Vec<usize>)> {
    let d = g.distances();
    let mut out: Vec<_> = (0..g.n())
        .map(|v| {
            let mut row: Vec<u32> = g
                .row(v)
                .iter()
                .enumerate()
                .filter(|&(w, &m)| w != v && m > 0)
                .map(|(_, &m)| m)
                .collect();
            row.sort_unstable();
            (g.get(v, v), row, d.profile(v))
        })
        .collect();
    out.sort();
    out
}

fn classify_outputs(items: Vec<(Vec<usize>, Graph)>) -> Result<MateFamily> {
    let polys: Vec<IntPoly> = items.par_iter().map(|(_, g)| charpoly(g)).collect();
    let Some(first) = polys.first().cloned() else {
        return Err(Error::Refused("no vertex tuples to perturb".into()));
    };
    if let Some(j) = polys.iter().position(|p| *p != first) {
        return Err(Error::Invariant(format!(
            "perturbations of {:?} and {:?} are not cospectral",
            items[0].0, items[j].0
        )));
    }
    let mut classes: Vec<(Vec<(u32, Vec<u32>, Vec<usize>)>, MateClass)> = Vec::new();
    for (tuple, graph) in items {
        let key = invariant(&graph);
        let mut home = None;
        for (i, (k, class)) in classes.iter().enumerate() {
            if *k == key && are_isomorphic(&class.graph, &graph)?.is_some() {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => classes[i].1.members.push(tuple),
            None => classes.push((
                key,
                MateClass {
                    graph,
                    representative: tuple.clone(),
                    members: vec![tuple],
                },
            )),
        }
    }
    Ok(MateFamily {
        charpoly: first,
        classes: classes.into_iter().map(|(_, c)| c).collect(),
        pairwise_non_isomorphic: true,
    })
}

/// Applies one pair perturbation to every pair at distance `h` of a
/// walk-regular, `h`-punctually cospectral graph and sorts the results
/// into isomorphism classes.
pub fn generate_mates(g: &Graph, h: u32, op: MateOp) -> Result<MateFamily> {
    let ctx = GraphContext::new(g)?;
    let wr = ctx.walk_regularity()?;
    if !wr.verdict {
        return Err(Error::Refused(format!(
            "graph is not walk-regular; witness {:?}",
            wr.vertex_deleted.witness
        )));
    }
    let check = ctx.punctual_cospectral(h)?;
    if !check.holds() {
        return Err(Error::Refused(format!(
            "graph is not {h}-punctually cospectral; witness {:?}",
            check.witness
        )));
    }
    let tuples: Vec<Vec<usize>> = if h == 0 {
        if op != MateOp::DeleteBoth {
            return Err(Error::InvalidArgument(
                "at distance 0 only vertex deletion applies".into(),
            ));
        }
        (0..g.n()).map(|u| vec![u]).collect()
    } else {
        ctx.distances().pairs_at(h).into_iter().map(|(u, v)| vec![u, v]).collect()
    };
    let items = tuples
        .into_par_iter()
        .map(|t| {
            let out = match (op, t.as_slice()) {
                (MateOp::DeleteBoth, _) => without(g, &t),
                (MateOp::FlipEdge, &[u, v]) => perturb::flip_edge(g, u, v)?,
                (MateOp::Amalgamate, &[u, v]) => perturb::amalgamate(g, u, v)?,
                (MateOp::Bridge, &[u, v]) => perturb::bridge(g, u, v)?,
                _ => unreachable!("pairs carry two vertices"),
            };
            Ok((t, out))
        })
        .collect::<Result<Vec<_>>>()?;
    classify_outputs(items)
}

/// Applies a set perturbation to each given vertex set and sorts the
/// results into isomorphism classes. The results must be cospectral.
pub fn set_mates(g: &Graph, sets: &[Vec<usize>], op: SetOp) -> Result<MateFamily> {
    let items = sets
        .par_iter()
        .map(|s| {
            for &v in s {
                g.check_vertex(v)?;
            }
            let out = match op {
                SetOp::Delete => without(g, s),
                SetOp::Complete => {
                    let mut h = g.clone();
                    for (a, &u) in s.iter().enumerate() {
                        for &v in &s[a + 1..] {
                            if h.get(u, v) == 0 {
                                h = perturb::flip_edge(&h, u, v)?;
                            }
                        }
                    }
                    h
                }
            };
            Ok((s.clone(), out))
        })
        .collect::<Result<Vec<_>>>()?;
    classify_outputs(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, path};

    #[test]
    fn identity_correspondence_is_removal_cospectral() {
        let g = path(5).unwrap();
        let c = SetCorrespondence::identity(vec![0, 2, 3]);
        let r = is_removal_cospectral(&g, &g, &c, RemovalMethod::Both).unwrap();
        assert!(r.verdict);
        assert!(is_isometric(&g, &g, &c).unwrap());
    }

    #[test]
    fn path_endpoints_versus_centre() {
        let g = path(4).unwrap();
        let c = SetCorrespondence::new(vec![0], vec![1]).unwrap();
        let r = is_removal_cospectral(&g, &g, &c, RemovalMethod::Both).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.exhaustive.unwrap().witness, Some(vec![0]));
        assert!(!godsil_pair_reduction(&g, &g, &c).unwrap().holds);
        let ends = SetCorrespondence::new(vec![0], vec![3]).unwrap();
        assert!(godsil_pair_reduction(&g, &g, &ends).unwrap().holds);
    }

    #[test]
    fn petersen_cocliques_split_into_two_types() {
        let g = catalog("petersen").unwrap();
        let cocliques = independent_sets(&g, 3);
        assert_eq!(cocliques.len(), 30);
        let family = set_mates(&g, &cocliques, SetOp::Delete).unwrap();
        assert_eq!(family.classes.len(), 2);
        let completed = set_mates(&g, &cocliques, SetOp::Complete).unwrap();
        assert_eq!(completed.classes.len(), 2);
    }

    #[test]
    fn correspondence_search_between_coclique_types() {
        let g = catalog("petersen").unwrap();
        let family = set_mates(&g, &independent_sets(&g, 3), SetOp::Delete).unwrap();
        let a = &family.classes[0].representative;
        let b = &family.classes[1].representative;
        let c = find_correspondence(&g, &g, a, b).unwrap().unwrap();
        assert!(schwenk_walk_check(&g, &g, &c, Some(4)).unwrap().holds);
    }

    #[test]
    fn set_evolution_under_amalgamation() {
        let g = catalog("petersen").unwrap();
        let c = SetCorrespondence::identity(vec![0, 1, 2]);
        let out = perturb_cospectral_check(
            &g,
            &g,
            &c,
            // vertex 2 becomes vertex 0 once 0 and 1 are merged
            &[PerturbationOp::Amalgamate(0, 1), PerturbationOp::AddPendant(0)],
        )
        .unwrap();
        assert!(out.holds());
        assert_eq!(out.sets.len(), 3);
        assert_eq!(out.graph.n(), 10);
    }

    #[test]
    fn ops_outside_the_set_are_rejected() {
        let g = catalog("petersen").unwrap();
        let c = SetCorrespondence::identity(vec![0]);
        assert!(perturb_cospectral_check(&g, &g, &c, &[PerturbationOp::AddLoop(5)]).is_err());
    }

    #[test]
    fn permutations_step_lexicographically() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, vec![2, 1, 0]);
    }

    #[test]
    fn mates_refuse_non_walk_regular_graphs() {
        assert!(matches!(
            generate_mates(&path(4).unwrap(), 1, MateOp::FlipEdge),
            Err(Error::Refused(_))
        ));
    }
}
