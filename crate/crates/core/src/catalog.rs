//! Named graphs with fixed vertex orders.
//!
//! * `gp_n_k`: generalized Petersen graph. Outer cycle `0..n` with
//!   `i ~ i+1`, spokes `i ~ n+i`, inner vertices `n+i ~ n+(i+k mod n)`.
//! * `petersen` is `gp_5_2`; `desargues` is `gp_10_3`.
//! * `kneser_n_k`: the `k`-subsets of `{0..n}` in lexicographic order,
//!   adjacent when disjoint.
//! * `hypercube_k`: vertices are bit strings, adjacent at Hamming distance 1.
//! * `twisted_desargues`: Desargues switched on the first 4-subset (in
//!   lexicographic order) that is a valid Godsil–McKay switching set and
//!   yields a connected cospectral graph not isomorphic to Desargues. The
//!   vertex order is that of `desargues`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::charpoly;
use crate::graph::{Graph, MAX_VERTICES};
use crate::iso::are_isomorphic;

const FIXED: &[&str] = &[
    "petersen",
    "petersen_complement",
    "desargues",
    "twisted_desargues",
    "cube",
    "k2",
];

const FAMILIES: &[&str] = &[
    "cycle_k",
    "complete_k",
    "path_k",
    "empty_k",
    "hypercube_k",
    "kneser_n_k",
    "gp_n_k",
];

/// Names accepted by [`catalog`]; parametrised families are shown with
/// their parameter placeholders.
pub fn available() -> Vec<&'static str> {
    FIXED.iter().chain(FAMILIES).copied().collect()
}

pub fn catalog(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownGraph {
        name: name.to_string(),
        available: available().join(", "),
    };
    let key = name.trim().to_ascii_lowercase();
    match key.as_str() {
        "petersen" => return generalized_petersen(5, 2),
        "petersen_complement" => return Ok(generalized_petersen(5, 2)?.complement()),
        "desargues" => return generalized_petersen(10, 3),
        "twisted_desargues" => return Ok(twisted_desargues().graph.clone()),
        "cube" => return hypercube(3),
        "k2" => return complete(2),
        _ => {}
    }
    let mut parts = key.split('_');
    let family = parts.next().ok_or_else(unknown)?;
    let params = parts
        .map(|p| p.parse::<usize>().map_err(|_| unknown()))
        .collect::<Result<Vec<_>>>()?;
    match (family, params.as_slice()) {
        ("cycle", &[k]) => cycle(k),
        ("complete", &[k]) => complete(k),
        ("path", &[k]) => path(k),
        ("empty", &[k]) => bounded(k).map(|_| Graph::empty(k)),
        ("hypercube", &[k]) => hypercube(k),
        ("kneser", &[n, k]) => kneser(n, k),
        ("gp", &[n, k]) => generalized_petersen(n, k),
        _ => Err(unknown()),
    }
}

fn bounded(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeBound(format!(
            "{n} vertices exceeds the limit of {}",
            MAX_VERTICES
        )));
    }
    Ok(())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    bounded(n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    bounded(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    bounded(n)?;
    Ok(Graph::empty(n).complement())
}

pub fn hypercube(k: usize) -> Result<Graph> {
    if k > 9 {
        return Err(Error::SizeBound(format!("hypercube of dimension {k}")));
    }
    let n = 1usize << k;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..k {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n || n > 31 {
        return Err(Error::InvalidArgument(format!("kneser({n},{k}) is not supported")));
    }
    let mut subsets: Vec<u32> = Vec::new();
    let mut current = Vec::with_capacity(k);
    k_subsets(n, k, 0, &mut current, &mut subsets, MAX_VERTICES + 1);
    bounded(subsets.len())?;
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(subsets.len(), &edges)
}

fn k_subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<u32>, cap: usize) {
    if out.len() >= cap {
        return;
    }
    if cur.len() == k {
        out.push(cur.iter().fold(0u32, |m, &i| m | (1 << i)));
        return;
    }
    for i in start..n {
        cur.push(i);
        k_subsets(n, k, i + 1, cur, out, cap);
        cur.pop();
    }
}

pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidArgument(format!(
            "gp({n},{k}) needs n >= 3 and 1 <= k < n/2"
        )));
    }
    bounded(2 * n)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::from_edges(2 * n, &edges)
}

/// A Godsil–McKay switching of a graph.
#[derive(Clone, Debug)]
pub struct Switching {
    pub set: Vec<usize>,
    pub graph: Graph,
}

/// `C` is a Godsil–McKay set when it induces a regular subgraph and every
/// outside vertex sees none, half, or all of it.
pub fn is_godsil_mckay_set(g: &Graph, set: &[usize]) -> bool {
    let k = set.len();
    if k == 0 || k % 2 == 1 {
        return false;
    }
    let inner: Vec<usize> = set
        .iter()
        .map(|&c| set.iter().filter(|&&d| g.adjacent(c, d)).count())
        .collect();
    if inner.iter().any(|&d| d != inner[0]) {
        return false;
    }
    (0..g.n())
        .filter(|v| !set.contains(v))
        .all(|v| {
            let seen = set.iter().filter(|&&c| g.adjacent(v, c)).count();
            seen == 0 || seen == k / 2 || seen == k
        })
}

/// Complements the edges between `set` and every outside vertex that sees
/// exactly half of it.
pub fn godsil_mckay_switch(g: &Graph, set: &[usize]) -> Result<Graph> {
    g.require_simple()?;
    if !is_godsil_mckay_set(g, set) {
        return Err(Error::InvalidArgument(format!(
            "{set:?} is not a Godsil-McKay switching set"
        )));
    }
    let mut out = g.clone();
    for v in (0..g.n()).filter(|v| !set.contains(v)) {
        let seen = set.iter().filter(|&&c| g.adjacent(v, c)).count();
        if 2 * seen == set.len() {
            for &c in set {
                out.set(v, c, 1 - g.get(v, c));
            }
        }
    }
    Ok(out)
}

/// The twisted Desargues graph together with the switching set used to
/// build it from `desargues`. Computed once per process.
pub fn twisted_desargues() -> &'static Switching {
    static CELL: OnceLock<Switching> = OnceLock::new();
    CELL.get_or_init(|| {
        let base = generalized_petersen(10, 3).expect("gp(10,3) is valid");
        find_switching(&base, 4).expect("desargues admits a cospectral switching")
    })
}

/// First `k`-subset in lexicographic order whose switch is connected,
/// cospectral to `g`, shares its degree sequence, bipartiteness and
/// diameter, and is not isomorphic to it.
pub fn find_switching(g: &Graph, k: usize) -> Option<Switching> {
    let n = g.n();
    let phi = charpoly(g);
    let diameter = g.distances().diameter();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let mut set: Vec<usize> = (0..k).collect();
    loop {
        if is_godsil_mckay_set(g, &set) {
            if let Ok(h) = godsil_mckay_switch(g, &set) {
                let mut hd: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
                hd.sort_unstable();
                let dist = h.distances();
                if h != *g
                    && dist.is_connected()
                    && dist.diameter() == diameter
                    && hd == degrees
                    && h.is_bipartite() == g.is_bipartite()
                    && charpoly(&h) == phi
                    && matches!(are_isomorphic(g, &h), Ok(None))
                {
                    return Some(Switching { set, graph: h });
                }
            }
        }
        if !next_subset(&mut set, n) {
            return None;
        }
    }
}

fn next_subset(set: &mut [usize], n: usize) -> bool {
    let k = set.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if set[i] < n - k + i {
            set[i] += 1;
            for j in (i + 1)..k {
                set[j] = set[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
