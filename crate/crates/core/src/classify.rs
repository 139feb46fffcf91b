//! Regularity classification: walk-regularity, the four h-punctual notions,
//! their m-level conjunctions, and distance-regularity.
//!
//! Every classification is computed by several independent routes. Walk
//! counts and characteristic polynomials are exact; crossed multiplicities
//! are floating and compared with an absolute tolerance. When a floating
//! route disagrees with the exact ones and its deviation lies in the band
//! `(tol, 1e-5]`, the exact verdict stands and a note is attached. Any other
//! disagreement is reported as [`Error::Invariant`].

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::charpoly;
use crate::graph::{DistanceMatrix, Graph};
use crate::perturb::{self, PerturbationOp, SetPerturbation};
use crate::poly::IntPoly;
use crate::spectral::{decompose, SpectralData};
use crate::walks::WalkCounts;

/// Absolute tolerance for comparing crossed multiplicities.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-7;

/// Upper end of the band in which exact routes overrule floating ones.
pub const AUTHORITY_BAND: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    /// No vertex tuple to compare.
    Vacuous,
}

impl Status {
    fn of(b: bool) -> Self {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Status::Holds => "yes",
            Status::Fails => "no",
            Status::Vacuous => "vacuous",
        }
    }
}

/// Two vertex tuples (single vertices at `h = 0`, pairs otherwise) on which
/// a quantity differs.
#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Walks {
        ell: usize,
        first: Vec<usize>,
        second: Vec<usize>,
        counts: [String; 2],
    },
    Multiplicity {
        index: usize,
        eigenvalue: f64,
        first: Vec<usize>,
        second: Vec<usize>,
        values: [f64; 2],
    },
    Polynomials {
        first: Vec<usize>,
        second: Vec<usize>,
        polys: [IntPoly; 2],
    },
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Check {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Largest deviation from the first tuple, for floating routes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    fn vacuous() -> Self {
        Check {
            status: Status::Vacuous,
            witness: None,
            max_deviation: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct NamedCheck {
    pub route: &'static str,
    #[serde(flatten)]
    pub check: Check,
}

/// Joint-perturbation verdict with its sub-routes (loop and pendant at
/// `h = 0`; edge flip, amalgamation and bridging vertex at `h ≥ 1`).
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Isospectral {
    pub status: Status,
    pub routes: Vec<NamedCheck>,
}

impl Isospectral {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// Crossed-multiplicity verdict plus the class constants `m_{h0..hd}` when
/// it holds.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SpectrumRegularity {
    #[serde(flatten)]
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_constants: Option<Vec<f64>>,
}

/// Cached exact and spectral data for one connected simple graph.
pub struct GraphContext {
    graph: Graph,
    dist: DistanceMatrix,
    spectral: SpectralData,
    walks: WalkCounts,
    phi: IntPoly,
    compare_tol: f64,
}

impl GraphContext {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_tolerance(g, None)
    }

    /// `tol` is the eigenvalue clustering tolerance; `None` uses the
    /// spectral default.
    pub fn with_tolerance(g: &Graph, tol: Option<f64>) -> Result<Self> {
        g.require_simple()?;
        let dist = g.distances();
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        let spectral = decompose(g, tol)?;
        let walks = WalkCounts::new(g, spectral.d());
        Ok(GraphContext {
            graph: g.clone(),
            dist,
            walks,
            phi: charpoly(g),
            spectral,
            compare_tol: MULTIPLICITY_TOLERANCE,
        })
    }

    /// Overrides the absolute tolerance used to compare crossed
    /// multiplicities.
    pub fn with_compare_tolerance(mut self, tol: f64) -> Self {
        self.compare_tol = tol;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn charpoly(&self) -> &IntPoly {
        &self.phi
    }

    pub fn diameter(&self) -> u32 {
        self.dist.diameter()
    }

    fn tuples(&self, h: u32) -> Result<Vec<Vec<usize>>> {
        if h > self.diameter() {
            return Err(Error::InvalidArgument(format!(
                "distance {h} exceeds the diameter {}",
                self.diameter()
            )));
        }
        Ok(if h == 0 {
            (0..self.graph.n()).map(|u| vec![u]).collect()
        } else {
            self.dist.pairs_at(h).into_iter().map(|(u, v)| vec![u, v]).collect()
        })
    }

    fn ends(t: &[usize]) -> (usize, usize) {
        (t[0], *t.last().expect("tuples are nonempty"))
    }

    fn walk_route(&self, tuples: &[Vec<usize>]) -> Check {
        let Some(first) = tuples.first() else {
            return Check::vacuous();
        };
        let (a, b) = Self::ends(first);
        for t in &tuples[1..] {
            let (u, v) = Self::ends(t);
            for ell in 0..=self.walks.max_len() {
                let (x, y) = (self.walks.get(ell, a, b), self.walks.get(ell, u, v));
                if x != y {
                    return Check {
                        status: Status::Fails,
                        witness: Some(Witness::Walks {
                            ell,
                            first: first.clone(),
                            second: t.clone(),
                            counts: [x.to_string(), y.to_string()],
                        }),
                        max_deviation: None,
                    };
                }
            }
        }
        Check {
            status: Status::Holds,
            witness: None,
            max_deviation: None,
        }
    }

    fn multiplicity_route(&self, tuples: &[Vec<usize>]) -> SpectrumRegularity {
        let Some(first) = tuples.first() else {
            return SpectrumRegularity {
                check: Check::vacuous(),
                class_constants: None,
            };
        };
        let (a, b) = Self::ends(first);
        let base = self.spectral.crossed_vector(a, b);
        let mut worst = 0.0f64;
        let mut witness = None;
        let mut sums = vec![0.0; base.len()];
        for t in tuples {
            let (u, v) = Self::ends(t);
            for (i, s) in sums.iter_mut().enumerate() {
                let m = self.spectral.crossed(i, u, v);
                *s += m;
                let dev = (m - base[i]).abs();
                if dev > worst {
                    worst = dev;
                    witness = Some(Witness::Multiplicity {
                        index: i,
                        eigenvalue: self.spectral.eigenvalues()[i],
                        first: first.clone(),
                        second: t.clone(),
                        values: [base[i], m],
                    });
                }
            }
        }
        let holds = worst <= self.compare_tol;
        let count = tuples.len() as f64;
        SpectrumRegularity {
            check: Check {
                status: Status::of(holds),
                witness: if holds { None } else { witness },
                max_deviation: Some(worst),
            },
            class_constants: holds.then(|| sums.iter().map(|s| s / count).collect()),
        }
    }

    fn poly_route<F>(&self, tuples: &[Vec<usize>], f: F) -> Result<Check>
    where
        F: Fn(&[usize]) -> Result<Graph> + Sync,
    {
        let polys = tuples
            .par_iter()
            .map(|t| f(t).map(|g| charpoly(&g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(uniform_polys(tuples, &polys))
    }

    /// Diagonal walk counts (`h = 0`) or walk counts over distance-`h`
    /// pairs, `ℓ = 0..=d`, all equal.
    pub fn punctual_walk_regular(&self, h: u32) -> Result<Check> {
        Ok(self.walk_route(&self.tuples(h)?))
    }

    pub fn punctual_spectrum_regular(&self, h: u32) -> Result<SpectrumRegularity> {
        Ok(self.multiplicity_route(&self.tuples(h)?))
    }

    /// `φ_{G−u}` (`h = 0`) or `φ_{G−u−v}` equal over the class.
    pub fn punctual_cospectral(&self, h: u32) -> Result<Check> {
        let tuples = self.tuples(h)?;
        let g = &self.graph;
        self.poly_route(&tuples, |t| {
            let keep: Vec<usize> = (0..g.n()).filter(|v| !t.contains(v)).collect();
            Ok(g.induced(&keep))
        })
    }

    /// Joint perturbations: loop and pendant at `h = 0`, edge flip,
    /// amalgamation and bridge at `h ≥ 1`. The sub-routes must agree.
    pub fn punctual_isospectral(&self, h: u32) -> Result<Isospectral> {
        let tuples = self.tuples(h)?;
        if tuples.is_empty() {
            return Ok(Isospectral {
                status: Status::Vacuous,
                routes: vec![],
            });
        }
        let g = &self.graph;
        let ops: Vec<(&'static str, fn(usize, usize) -> PerturbationOp)> = if h == 0 {
            vec![
                ("loop", |u, _| PerturbationOp::AddLoop(u)),
                ("pendant", |u, _| PerturbationOp::AddPendant(u)),
            ]
        } else {
            vec![
                ("edge_flip", PerturbationOp::FlipEdge),
                ("amalgamation", PerturbationOp::Amalgamate),
                ("bridge", PerturbationOp::Bridge),
            ]
        };
        let mut routes = Vec::with_capacity(ops.len());
        for (route, make) in ops {
            let check = self.poly_route(&tuples, |t| {
                let (u, v) = Self::ends(t);
                Ok(perturb::apply(g, &make(u, v))?.graph)
            })?;
            routes.push(NamedCheck { route, check });
        }
        let first = routes[0].check.status;
        if routes.iter().any(|r| r.check.status != first) {
            let summary: Vec<String> = routes
                .iter()
                .map(|r| format!("{}={}", r.route, r.check.status.symbol()))
                .collect();
            return Err(Error::Invariant(format!(
                "joint-perturbation routes disagree at h={h}: {}",
                summary.join(", ")
            )));
        }
        Ok(Isospectral {
            status: first,
            routes,
        })
    }

    /// Vertex-level regularity by all five routes.
    pub fn walk_regularity(&self) -> Result<WalkRegularity> {
        let level = self.level(0)?;
        let [loop_added, pendant_added] = [0, 1].map(|i| level.isospectral.routes[i].check.clone());
        Ok(WalkRegularity {
            verdict: level.cospectral.holds(),
            diagonal_walks: level.walk_regular,
            local_multiplicities: level.spectrum_regular,
            vertex_deleted: level.cospectral,
            loop_added,
            pendant_added,
            class_constants: level.class_constants,
            notes: level.notes,
        })
    }

    /// All four classifications at distance `h`, reconciled.
    pub fn level(&self, h: u32) -> Result<Level> {
        let tuples = self.tuples(h)?;
        let walk = self.walk_route(&tuples);
        let spectrum = self.multiplicity_route(&tuples);
        let cospectral = self.punctual_cospectral(h)?;
        let isospectral = self.punctual_isospectral(h)?;
        let mut notes = Vec::new();
        if walk.status != cospectral.status || cospectral.status != isospectral.status {
            return Err(Error::Invariant(format!(
                "exact routes disagree at h={h}: walks={}, deletion={}, joint={}; witnesses {:?} / {:?}",
                walk.status.symbol(),
                cospectral.status.symbol(),
                isospectral.status.symbol(),
                walk.witness,
                cospectral.witness,
            )));
        }
        if let Some(note) = reconcile(h, &cospectral, &spectrum.check, self.compare_tol)? {
            notes.push(note);
        }
        Ok(Level {
            h,
            tuples: tuples.len(),
            walk_regular: walk,
            spectrum_regular: spectrum.check,
            cospectral,
            isospectral,
            class_constants: spectrum.class_constants,
            notes,
        })
    }

    /// Every classification at every distance up to the diameter. For a
    /// graph that is not walk-regular only `h = 0` is reported.
    pub fn profile(&self) -> Result<PunctualProfile> {
        self.profile_to(None)
    }

    /// [`GraphContext::profile`] restricted to `h ≤ max_h`.
    pub fn profile_to(&self, max_h: Option<u32>) -> Result<PunctualProfile> {
        let top = max_h.map_or(self.diameter(), |m| m.min(self.diameter()));
        let level0 = self.level(0)?;
        let walk_regular = level0.cospectral.holds();
        let mut levels = vec![level0];
        let mut notes = Vec::new();
        if walk_regular {
            for h in 1..=top {
                levels.push(self.level(h)?);
            }
        } else {
            notes.push(
                "not walk-regular: the distance-h equivalences assume walk-regularity, \
                 so only h = 0 is classified"
                    .to_string(),
            );
        }
        Ok(PunctualProfile {
            diameter: self.diameter(),
            walk_regular,
            levels,
            notes,
        })
    }

    /// Conjunction of the chosen classification over `i = 0..=m`; `i = 0`
    /// is walk-regularity for every method.
    pub fn is_m_level(&self, m: u32, method: Method) -> Result<bool> {
        if m > self.diameter() {
            return Err(Error::InvalidArgument(format!(
                "level {m} exceeds the diameter {}",
                self.diameter()
            )));
        }
        if !self.walk_regularity()?.verdict {
            return Ok(false);
        }
        for h in 1..=m {
            let ok = match method {
                Method::Walk => self.punctual_walk_regular(h)?.holds(),
                Method::Spectrum => self.punctual_spectrum_regular(h)?.check.holds(),
                Method::Cospectral => self.punctual_cospectral(h)?.holds(),
                Method::Isospectral => self.punctual_isospectral(h)?.holds(),
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Combinatorial intersection numbers against walk-regularity plus
    /// cospectrality at every distance.
    pub fn distance_regularity(&self) -> Result<DistanceRegularity> {
        let combinatorial = intersection_numbers(&self.graph, &self.dist);
        let wr = self.walk_regularity()?.verdict;
        let mut levels = Vec::new();
        if wr {
            for h in 1..=self.diameter() {
                levels.push(self.punctual_cospectral(h)?.status);
            }
        }
        let spectral = wr && levels.iter().all(|s| *s == Status::Holds);
        let holds = combinatorial.array.is_some();
        if holds != spectral {
            return Err(Error::Invariant(format!(
                "distance-regularity routes disagree: counting={holds}, spectral={spectral}; {}",
                combinatorial.witness.clone().unwrap_or_default()
            )));
        }
        Ok(DistanceRegularity {
            verdict: holds,
            intersection_array: combinatorial.array,
            combinatorial_witness: combinatorial.witness,
            walk_regular: wr,
            cospectral_levels: levels,
        })
    }

    /// Characteristic polynomials of `G − u − v` split by adjacency.
    pub fn strongly_regular_pair_check(&self) -> Result<StronglyRegularCheck> {
        let g = &self.graph;
        let parameters = srg_parameters(g).ok_or_else(|| {
            Error::Refused("graph is not strongly regular (or is complete or empty)".into())
        })?;
        let n = g.n();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let polys: Vec<IntPoly> = pairs
            .par_iter()
            .map(|&(u, v)| {
                let keep: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
                charpoly(&g.induced(&keep))
            })
            .collect();
        let mut adjacent: Vec<IntPoly> = Vec::new();
        let mut nonadjacent: Vec<IntPoly> = Vec::new();
        for (&(u, v), p) in pairs.iter().zip(polys) {
            let class = if g.adjacent(u, v) { &mut adjacent } else { &mut nonadjacent };
            if !class.contains(&p) {
                class.push(p);
            }
        }
        let holds = adjacent.len() == 1 && nonadjacent.len() == 1 && adjacent[0] != nonadjacent[0];
        Ok(StronglyRegularCheck {
            parameters,
            holds,
            adjacent,
            nonadjacent,
        })
    }

    /// For every two pairs, deleting both vertices, adding a loop at both,
    /// and attaching a pendant at both give the same cospectrality
    /// relation. Requires walk-regularity.
    pub fn pair_perturbation_partitions(&self) -> Result<PairPartitions> {
        if !self.walk_regularity()?.verdict {
            return Err(Error::NotWalkRegular(
                "pair perturbation partitions are defined for walk-regular graphs".into(),
            ));
        }
        let g = &self.graph;
        let n = g.n();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        if n < 3 {
            return Ok(PairPartitions {
                pairs: pairs.len(),
                classes: pairs.len(),
                agree: true,
            });
        }
        let keys = pairs
            .par_iter()
            .map(|&(u, v)| {
                Ok([
                    charpoly(&perturb::apply_set(g, SetPerturbation::DeleteVertex, &[u, v])?),
                    charpoly(&perturb::apply_set(g, SetPerturbation::AddLoop, &[u, v])?),
                    charpoly(&perturb::apply_set(g, SetPerturbation::AddPendant, &[u, v])?),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        let labels: Vec<Vec<usize>> = (0..3)
            .map(|k| class_labels(keys.iter().map(|t| &t[k])))
            .collect();
        let agree = labels[0] == labels[1] && labels[1] == labels[2];
        Ok(PairPartitions {
            pairs: pairs.len(),
            classes: labels[0].iter().max().map_or(0, |m| m + 1),
            agree,
        })
    }
}

/// Labels equal items by order of first appearance.
fn class_labels<'a>(items: impl Iterator<Item = &'a IntPoly>) -> Vec<usize> {
    let mut seen: Vec<&IntPoly> = Vec::new();
    items
        .map(|p| match seen.iter().position(|q| *q == p) {
            Some(i) => i,
            None => {
                seen.push(p);
                seen.len() - 1
            }
        })
        .collect()
}

fn uniform_polys(tuples: &[Vec<usize>], polys: &[IntPoly]) -> Check {
    if polys.is_empty() {
        return Check::vacuous();
    }
    match polys.iter().position(|p| *p != polys[0]) {
        None => Check {
            status: Status::Holds,
            witness: None,
            max_deviation: None,
        },
        Some(j) => Check {
            status: Status::Fails,
            witness: Some(Witness::Polynomials {
                first: tuples[0].clone(),
                second: tuples[j].clone(),
                polys: [polys[0].clone(), polys[j].clone()],
            }),
            max_deviation: None,
        },
    }
}

fn reconcile(h: u32, exact: &Check, float: &Check, tol: f64) -> Result<Option<String>> {
    if exact.status == float.status {
        return Ok(None);
    }
    let dev = float.max_deviation.unwrap_or(f64::NAN);
    if exact.holds() && dev > tol && dev <= AUTHORITY_BAND {
        return Ok(Some(format!(
            "h={h}: crossed multiplicities deviate by {dev:.3e}; exact routes hold and are authoritative"
        )));
    }
    Err(Error::Invariant(format!(
        "h={h}: exact verdict {} but crossed multiplicities {} (max deviation {dev:.3e}); witness {:?}",
        exact.status.symbol(),
        float.status.symbol(),
        float.witness.as_ref().or(exact.witness.as_ref()),
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Walk,
    Spectrum,
    Cospectral,
    Isospectral,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "walk" => Ok(Method::Walk),
            "spectrum" => Ok(Method::Spectrum),
            "cospectral" => Ok(Method::Cospectral),
            "isospectral" => Ok(Method::Isospectral),
            _ => Err(Error::InvalidArgument(format!("unknown method '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WalkRegularity {
    /// The vertex-deleted route.
    pub verdict: bool,
    pub diagonal_walks: Check,
    pub local_multiplicities: Check,
    pub vertex_deleted: Check,
    pub loop_added: Check,
    pub pendant_added: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_constants: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Level {
    pub h: u32,
    /// Number of vertices (`h = 0`) or pairs at distance `h`.
    pub tuples: usize,
    pub walk_regular: Check,
    pub spectrum_regular: Check,
    pub cospectral: Check,
    pub isospectral: Isospectral,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_constants: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Level {
    pub fn statuses(&self) -> [Status; 4] {
        [
            self.walk_regular.status,
            self.spectrum_regular.status,
            self.cospectral.status,
            self.isospectral.status,
        ]
    }

    /// All four classifications hold.
    pub fn holds(&self) -> bool {
        self.statuses().iter().all(|s| *s == Status::Holds)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PunctualProfile {
    pub diameter: u32,
    pub walk_regular: bool,
    pub levels: Vec<Level>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PunctualProfile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }

    pub fn level(&self, h: u32) -> Option<&Level> {
        self.levels.iter().find(|l| l.h == h)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IntersectionArray {
    /// `b_0, …, b_{D−1}`
    pub b: Vec<usize>,
    /// `c_1, …, c_D`
    pub c: Vec<usize>,
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceRegularity {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_array: Option<IntersectionArray>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combinatorial_witness: Option<String>,
    pub walk_regular: bool,
    /// Pair-deletion cospectrality for `h = 1..=D`, when walk-regular.
    pub cospectral_levels: Vec<Status>,
}

struct Counting {
    array: Option<IntersectionArray>,
    witness: Option<String>,
}

fn intersection_numbers(g: &Graph, dist: &DistanceMatrix) -> Counting {
    let n = g.n();
    let d = dist.diameter() as usize;
    let mut b: Vec<Option<usize>> = vec![None; d + 1];
    let mut c: Vec<Option<usize>> = vec![None; d + 1];
    for u in 0..n {
        for v in 0..n {
            let i = dist.get(u, v).expect("connected") as usize;
            let (mut ci, mut bi) = (0, 0);
            for w in g.neighbors(v) {
                let dw = dist.get(u, w).expect("connected") as usize;
                if dw + 1 == i {
                    ci += 1;
                } else if dw == i + 1 {
                    bi += 1;
                }
            }
            for (slot, val, name) in [(&mut c[i], ci, "c"), (&mut b[i], bi, "b")] {
                match slot {
                    None => *slot = Some(val),
                    Some(prev) if *prev != val => {
                        return Counting {
                            array: None,
                            witness: Some(format!(
                                "{name}_{i} is {prev} for an earlier pair but {val} for ({u},{v})"
                            )),
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    Counting {
        array: Some(IntersectionArray {
            b: b[..d].iter().map(|x| x.unwrap_or(0)).collect(),
            c: c[1..].iter().map(|x| x.unwrap_or(0)).collect(),
        }),
        witness: None,
    }
}

/// `(n, k, λ, μ)` when `g` is strongly regular with both adjacency classes
/// nonempty.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    if n < 3 || !g.is_simple() || !g.is_regular() {
        return None;
    }
    let k = g.degree(0);
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in (u + 1)..n {
            let common = (0..n).filter(|&w| g.adjacent(u, w) && g.adjacent(v, w)).count();
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}

#[derive(Clone, Debug, Serialize)]
pub struct StronglyRegularCheck {
    pub parameters: (usize, usize, usize, usize),
    /// Exactly one polynomial per adjacency class, and the two differ.
    pub holds: bool,
    pub adjacent: Vec<IntPoly>,
    pub nonadjacent: Vec<IntPoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairPartitions {
    pub pairs: usize,
    pub classes: usize,
    pub agree: bool,
}

pub fn is_walk_regular(g: &Graph) -> Result<WalkRegularity> {
    GraphContext::new(g)?.walk_regularity()
}

pub fn punctual_walk_regular(g: &Graph, h: u32) -> Result<Check> {
    GraphContext::new(g)?.punctual_walk_regular(h)
}

pub fn punctual_spectrum_regular(g: &Graph, h: u32) -> Result<SpectrumRegularity> {
    GraphContext::new(g)?.punctual_spectrum_regular(h)
}

pub fn punctual_cospectral(g: &Graph, h: u32) -> Result<Check> {
    GraphContext::new(g)?.punctual_cospectral(h)
}

pub fn punctual_isospectral(g: &Graph, h: u32) -> Result<Isospectral> {
    GraphContext::new(g)?.punctual_isospectral(h)
}

pub fn profile(g: &Graph) -> Result<PunctualProfile> {
    GraphContext::new(g)?.profile()
}

pub fn is_m_level(g: &Graph, m: u32, method: Method) -> Result<bool> {
    GraphContext::new(g)?.is_m_level(m, method)
}

pub fn is_distance_regular(g: &Graph) -> Result<DistanceRegularity> {
    GraphContext::new(g)?.distance_regularity()
}

pub fn strongly_regular_pair_check(g: &Graph) -> Result<StronglyRegularCheck> {
    GraphContext::new(g)?.strongly_regular_pair_check()
}
