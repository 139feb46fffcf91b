//! Isomorphism testing by joint colour refinement with backtracking.
//!
//! Both graphs are coloured together, so colour classes are comparable
//! across them. Initial colours combine the loop count, the multiset of
//! off-diagonal entries and the distance profile; refinement repeatedly
//! splits classes by the multiset of (neighbour colour, multiplicity).
//! When refinement stabilises without singleton classes, one vertex of the
//! smallest class is individualised against each candidate image in turn.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by the isomorphism search.
pub const MAX_ISO_VERTICES: usize = 64;

/// Search-tree node budget used by [`are_isomorphic`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Returns `Some(perm)` with `h[perm[u]][perm[v]] = g[u][v]` for all `u, v`,
/// or `None` if no such bijection exists. Labels are ignored.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_budget(g, h, DEFAULT_NODE_BUDGET)
}

pub fn are_isomorphic_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n.max(h.n()) > MAX_ISO_VERTICES {
        return Err(Error::SizeBound(format!(
            "isomorphism testing is limited to {MAX_ISO_VERTICES} vertices, got {}",
            n.max(h.n())
        )));
    }
    if n != h.n() || g.trace() != h.trace() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut search = Search {
        g,
        h,
        n,
        nodes: 0,
        budget,
    };
    let colours = search.initial_colours();
    let found = search.explore(colours)?;
    if let Some(perm) = &found {
        if !verify_isomorphism(g, h, perm) {
            return Err(Error::Invariant(
                "isomorphism certificate failed re-verification".into(),
            ));
        }
    }
    Ok(found)
}

/// Checks that `perm` is a bijection carrying `g` entry-wise onto `h`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, perm: &[usize]) -> bool {
    let n = g.n();
    if h.n() != n || perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    (0..n).all(|u| (0..n).all(|v| g.get(u, v) == h.get(perm[u], perm[v])))
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    n: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Vertex `x < n` lives in `g`, `x ≥ n` is vertex `x - n` of `h`.
    fn side(&self, x: usize) -> (&Graph, usize) {
        if x < self.n {
            (self.g, x)
        } else {
            (self.h, x - self.n)
        }
    }

    fn initial_colours(&self) -> Vec<usize> {
        let dg = self.g.distances();
        let dh = self.h.distances();
        let sigs: Vec<(u32, Vec<u32>, Vec<usize>)> = (0..2 * self.n)
            .map(|x| {
                let (graph, v) = self.side(x);
                let mut row: Vec<u32> = graph
                    .row(v)
                    .iter()
                    .enumerate()
                    .filter(|&(w, &m)| w != v && m > 0)
                    .map(|(_, &m)| m)
                    .collect();
                row.sort_unstable();
                let profile = if x < self.n { dg.profile(v) } else { dh.profile(v) };
                (graph.get(v, v), row, profile)
            })
            .collect();
        relabel(&sigs)
    }

    /// Refines to a stable colouring, or `None` if the two sides stop
    /// matching class by class.
    fn refine(&self, mut colours: Vec<usize>) -> Option<Vec<usize>> {
        let mut classes = count_classes(&colours);
        loop {
            if !balanced(&colours, self.n) {
                return None;
            }
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..2 * self.n)
                .map(|x| {
                    let (graph, v) = self.side(x);
                    let offset = x - v;
                    let mut nb: Vec<(usize, u32)> = graph
                        .row(v)
                        .iter()
                        .enumerate()
                        .filter(|&(w, &m)| w != v && m > 0)
                        .map(|(w, &m)| (colours[offset + w], m))
                        .collect();
                    nb.sort_unstable();
                    (colours[x], nb)
                })
                .collect();
            colours = relabel(&sigs);
            let next = count_classes(&colours);
            if next == classes {
                return balanced(&colours, self.n).then_some(colours);
            }
            classes = next;
        }
    }

    fn explore(&mut self, colours: Vec<usize>) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let Some(colours) = self.refine(colours) else {
            return Ok(None);
        };
        let n = self.n;
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &c) in colours.iter().enumerate().take(n) {
            cells.entry(c).or_default().push(x);
        }
        let target = cells
            .iter()
            .filter(|(_, members)| members.len() > 1)
            .min_by_key(|(c, members)| (members.len(), **c));
        let Some((&cell, members)) = target else {
            let mut perm = vec![0; n];
            let by_colour: BTreeMap<usize, usize> =
                (n..2 * n).map(|y| (colours[y], y - n)).collect();
            for v in 0..n {
                perm[v] = by_colour[&colours[v]];
            }
            return Ok(verify_isomorphism(self.g, self.h, &perm).then_some(perm));
        };
        let x = members[0];
        let fresh = colours.iter().max().map_or(0, |m| m + 1);
        for y in (n..2 * n).filter(|&y| colours[y] == cell) {
            let mut next = colours.clone();
            next[x] = fresh;
            next[y] = fresh;
            if let Some(perm) = self.explore(next)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

fn relabel<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut uniq: Vec<T> = sigs.to_vec();
    uniq.sort();
    uniq.dedup();
    sigs.iter()
        .map(|s| uniq.binary_search(s).expect("signature present"))
        .collect()
}

fn count_classes(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(colours: &[usize], n: usize) -> bool {
    let mut left = colours[..n].to_vec();
    let mut right = colours[n..].to_vec();
    left.sort_unstable();
    right.sort_unstable();
    left == right
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let g = cycle(7);
        let perm = [3, 6, 0, 2, 5, 1, 4];
        let h = g.permuted(&perm).unwrap();
        let cert = are_isomorphic(&g, &h).unwrap().unwrap();
        assert!(verify_isomorphism(&g, &h, &cert));
    }

    #[test]
    fn c6_and_two_triangles_differ() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(are_isomorphic(&cycle(6), &two).unwrap().is_none());
    }

    #[test]
    fn loops_and_multiplicities_count() {
        let a = Graph::from_adjacency(&[vec![1, 2], vec![2, 0]]).unwrap();
        let b = Graph::from_adjacency(&[vec![0, 2], vec![2, 1]]).unwrap();
        let c = Graph::from_adjacency(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(are_isomorphic(&a, &b).unwrap(), Some(vec![1, 0]));
        assert!(are_isomorphic(&a, &c).unwrap().is_none());
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // the cube is vertex-transitive
        let cube = Graph::from_edges(
            8,
            &[(0, 1), (1, 3), (3, 2), (2, 0), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let h = cube.permuted(&[7, 2, 5, 0, 3, 6, 1, 4]).unwrap();
        assert!(are_isomorphic(&cube, &h).unwrap().is_some());
    }

    #[test]
    fn budget_and_size_limits() {
        let g = cycle(8);
        assert!(matches!(
            are_isomorphic_with_budget(&g, &g, 1),
            Err(Error::SearchBudget(1))
        ));
        let big = Graph::empty(65);
        assert!(matches!(are_isomorphic(&big, &big), Err(Error::SizeBound(_))));
    }

    #[test]
    fn bad_certificates_are_rejected() {
        let g = cycle(4);
        assert!(!verify_isomorphism(&g, &g, &[0, 0, 1, 2]));
        assert!(!verify_isomorphism(&g, &g, &[0, 2, 1, 3]));
        assert!(verify_isomorphism(&g, &g, &[1, 2, 3, 0]));
    }
}
