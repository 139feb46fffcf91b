//! One-shot analysis of a connected simple graph.

use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::classify::{DistanceRegularity, GraphContext, PunctualProfile, MULTIPLICITY_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::poly::IntPoly;

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Eigenvalue clustering tolerance; `None` uses the spectral default.
    pub tol: Option<f64>,
    /// Absolute tolerance for comparing crossed multiplicities; `None`
    /// uses [`MULTIPLICITY_TOLERANCE`].
    pub compare_tol: Option<f64>,
    /// Largest distance to classify; `None` means the diameter.
    pub max_h: Option<u32>,
    /// Record wall-clock time per stage. Off by default so that reports
    /// are byte-for-byte reproducible.
    pub timings: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub charpoly: IntPoly,
    pub charpoly_text: String,
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageTime {
    pub stage: &'static str,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    /// Catalog name, or `sha256:` followed by a hash prefix of the graph6
    /// encoding.
    pub identity: String,
    pub n: usize,
    pub edges: u64,
    pub diameter: u32,
    pub regular: bool,
    pub bipartite: bool,
    pub spectrum: Spectrum,
    pub profile: PunctualProfile,
    pub distance_regular: DistanceRegularity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<StageTime>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Content hash used when a graph has no catalog name.
pub fn graph_identity(g: &Graph) -> String {
    let text = emit_graph6(g).unwrap_or_else(|_| g.to_json());
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn analyze(g: &Graph, name: Option<&str>, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut times = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |stage: &'static str, times: &mut Vec<StageTime>| {
        let now = Instant::now();
        times.push(StageTime {
            stage,
            millis: (now - clock).as_secs_f64() * 1e3,
        });
        clock = now;
    };

    let ctx = GraphContext::with_tolerance(g, opts.tol)?
        .with_compare_tolerance(opts.compare_tol.unwrap_or(MULTIPLICITY_TOLERANCE));
    lap("spectral", &mut times);
    let profile = ctx.profile_to(opts.max_h)?;
    lap("profile", &mut times);
    let distance_regular = ctx.distance_regularity()?;
    lap("distance_regularity", &mut times);

    let s = ctx.spectral();
    let report = AnalysisReport {
        identity: name.map_or_else(|| graph_identity(g), str::to_string),
        n: g.n(),
        edges: g.edge_count(),
        diameter: ctx.diameter(),
        regular: g.is_regular(),
        bipartite: g.is_bipartite(),
        spectrum: Spectrum {
            charpoly: ctx.charpoly().clone(),
            charpoly_text: ctx.charpoly().to_string(),
            eigenvalues: s.eigenvalues().to_vec(),
            multiplicities: s.multiplicities().to_vec(),
            warnings: s.warnings().to_vec(),
        },
        profile,
        distance_regular,
        timings: opts.timings.then_some(times),
    };
    if report.profile.diameter != report.diameter
        || report.spectrum.multiplicities.iter().sum::<usize>() != report.n
    {
        return Err(Error::Invariant("analysis report is internally inconsistent".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn petersen_report() {
        let g = catalog("petersen").unwrap();
        let r = analyze(&g, Some("petersen"), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.diameter, 2);
        assert!(r.distance_regular.verdict);
        assert_eq!(r.spectrum.multiplicities, vec![1, 5, 4]);
        assert!(r.timings.is_none());
        assert_eq!(r.to_json(), analyze(&g, Some("petersen"), &AnalyzeOptions::default()).unwrap().to_json());
    }

    #[test]
    fn identity_hash_is_stable() {
        let g = catalog("k2").unwrap();
        assert_eq!(graph_identity(&g), graph_identity(&g.clone()));
        assert!(graph_identity(&g).starts_with("sha256:"));
    }
}
