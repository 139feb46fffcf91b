//! Symmetric nonnegative-integer adjacency tables with loops and multi-edges.
//!
//! A loop at `u` contributes exactly 1 to `adj[u][u]`. Multi-edges only arise
//! from amalgamation; the loaders for simple formats reject them.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 512;

/// Equality and hashing look only at the adjacency table; labels are
/// provenance metadata.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

/// Serializes as the pseudograph document `{"n", "adj", "labels"?}`.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.doc().serialize(s)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![0; n * n],
            labels: vec![None; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                g.adj[u * n + u] += 1;
            } else {
                g.adj[u * n + v] += 1;
                g.adj[v * n + u] += 1;
            }
        }
        Ok(g)
    }

    /// Builds a graph from a full adjacency table, checking symmetry.
    pub fn from_adjacency(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut adj = Vec::with_capacity(n * n);
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {u} has {} entries, expected {n}",
                    row.len()
                )));
            }
            adj.extend_from_slice(row);
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u * n + v] != adj[v * n + u] {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency is not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: vec![None; n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    pub fn adjacency_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|u| self.row(u).to_vec()).collect()
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.get(u).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn with_label(mut self, u: usize, label: impl Into<String>) -> Self {
        self.labels[u] = Some(label.into());
        self
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, value: u32) {
        self.adj[u * self.n + v] = value;
        self.adj[v * self.n + u] = value;
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.get(u, v) > 0
    }

    /// Neighbours on the simple support (loops excluded).
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u)
            .iter()
            .enumerate()
            .filter(move |&(v, &m)| v != u && m > 0)
            .map(|(v, _)| v)
    }

    /// Degree on the simple support.
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn trace(&self) -> u64 {
        (0..self.n).map(|u| self.get(u, u) as u64).sum()
    }

    /// Edge count with multiplicity; each loop counts once.
    pub fn edge_count(&self) -> u64 {
        let mut m = 0u64;
        for u in 0..self.n {
            for v in u..self.n {
                m += self.get(u, v) as u64;
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                for _ in 0..self.get(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.first_non_simple_entry().is_none()
    }

    pub fn first_non_simple_entry(&self) -> Option<(usize, usize, u32)> {
        for u in 0..self.n {
            for v in u..self.n {
                let m = self.get(u, v);
                if (u == v && m != 0) || m > 1 {
                    return Some((u, v, m));
                }
            }
        }
        None
    }

    pub fn require_simple(&self) -> Result<()> {
        match self.first_non_simple_entry() {
            None => Ok(()),
            Some((u, v, value)) => Err(Error::NotSimple { u, v, value }),
        }
    }

    pub fn is_regular(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let sum = |u: usize| -> u64 { self.row(u).iter().map(|&m| m as u64).sum() };
        let d = sum(0);
        (1..n).all(|u| sum(u) == d)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || bfs(self, 0).iter().all(|d| d.is_some())
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if self.get(u, u) > 0 {
                    return false;
                }
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Complement of the simple support.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.get(u, v) == 0 {
                    g.set(u, v, 1);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * n + v] = self.get(u, v);
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.adj[(u + self.n) * n + v + self.n] = other.get(u, v);
            }
        }
        g.labels[..self.n].clone_from_slice(&self.labels);
        g.labels[self.n..].clone_from_slice(&other.labels);
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.get(u, v);
            }
            g.labels[perm[u]] = self.labels[u].clone();
        }
        Ok(g)
    }

    /// Principal subgraph on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let k = keep.len();
        let mut g = Graph::empty(k);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                g.adj[i * k + j] = self.get(u, v);
            }
            g.labels[i] = self.labels[u].clone();
        }
        g
    }

    /// Appends a vertex with no edges and returns its index.
    pub(crate) fn push_vertex(&mut self, label: Option<String>) -> usize {
        let n = self.n + 1;
        let mut adj = vec![0u32; n * n];
        for u in 0..self.n {
            adj[u * n..u * n + self.n].copy_from_slice(self.row(u));
        }
        self.adj = adj;
        self.n = n;
        self.labels.push(label);
        n - 1
    }

    fn doc(&self) -> PseudographDoc {
        PseudographDoc {
            n: self.n,
            adj: self.adjacency_rows(),
            labels: if self.labels.iter().any(|l| l.is_some()) {
                Some(self.labels.clone())
            } else {
                None
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.doc()).expect("pseudograph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: PseudographDoc =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if doc.adj.len() != doc.n {
            return Err(Error::Json(format!(
                "\"n\" is {} but \"adj\" has {} rows",
                doc.n,
                doc.adj.len()
            )));
        }
        if doc.n > MAX_VERTICES {
            return Err(Error::SizeBound(format!(
                "{} vertices exceeds the limit of {MAX_VERTICES}",
                doc.n
            )));
        }
        let mut g = Graph::from_adjacency(&doc.adj).map_err(|e| Error::Json(e.to_string()))?;
        if let Some(labels) = doc.labels {
            if labels.len() != doc.n {
                return Err(Error::Json("\"labels\" length differs from \"n\"".into()));
            }
            g.labels = labels;
        }
        Ok(g)
    }

    /// DOT rendering. Loops appear as self-edges; multiplicities above one as
    /// edge labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
        for u in 0..self.n {
            match self.label(u) {
                Some(l) => {
                    let _ = writeln!(out, "  {u} [label=\"{}\"];", l.replace('"', "'"));
                }
                None => {
                    let _ = writeln!(out, "  {u};");
                }
            }
        }
        for u in 0..self.n {
            for v in u..self.n {
                match self.get(u, v) {
                    0 => {}
                    1 => {
                        let _ = writeln!(out, "  {u} -- {v};");
                    }
                    m => {
                        let _ = writeln!(out, "  {u} -- {v} [label=\"{m}\"];");
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::of(self)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PseudographDoc {
    n: usize,
    adj: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Option<String>>>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn bfs(g: &Graph, s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop distances on the simple support. `None` marks disconnected pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(bfs(g, s));
        }
        let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
        DistanceMatrix { n, dist, diameter }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|d| d.is_some())
    }

    /// Unordered pairs `u < v` at distance exactly `h`, in lexicographic order.
    pub fn pairs_at(&self, h: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.get(u, v) == Some(h) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of vertices at each distance from `u`, indexed by distance.
    pub fn profile(&self, u: usize) -> Vec<usize> {
        let mut counts = vec![0usize; self.diameter as usize + 2];
        for v in 0..self.n {
            match self.get(u, v) {
                Some(d) => counts[d as usize] += 1,
                None => *counts.last_mut().unwrap() += 1,
            }
        }
        counts
    }
}
