//! Maximum cardinality matching on general graphs.

use std::collections::VecDeque;

use crate::error::{GraphError, MatchingError};
use crate::graph::GainGraph;

/// Largest edge count accepted by [`matching_number_bruteforce`].
pub const BRUTEFORCE_EDGE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Sorted saturated vertices.
    pub saturated: Vec<usize>,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn from_mates(mate: &[usize]) -> MatchingResult {
        let edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        let saturated = (0..mate.len()).filter(|&v| mate[v] != NONE).collect();
        MatchingResult { edges, saturated }
    }
}

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm, `O(V³)`. Free vertices are processed in
/// increasing id order so the result is deterministic.
pub fn max_matching(g: &GainGraph) -> MatchingResult {
    let mut search = Blossom::new(g);
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    MatchingResult::from_mates(&search.mate)
}

/// `m(G)`.
pub fn matching_number(g: &GainGraph) -> usize {
    max_matching(g).size()
}

struct Blossom<'a> {
    g: &'a GainGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a GainGraph) -> Self {
        let n = g.order();
        let mut mate = vec![NONE; n];
        // Greedy warm start.
        for v in 0..n {
            if mate[v] == NONE {
                if let Some(w) = g.neighbors(v).find(|&w| mate[w] == NONE) {
                    mate[v] = w;
                    mate[w] = v;
                }
            }
        }
        Blossom {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, root: usize, mut child: usize) {
        while self.base[v] != root {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, w: usize) {
        let root = self.lowest_common_base(v, w);
        self.in_blossom.iter_mut().for_each(|b| *b = false);
        self.mark_path(v, root, w);
        self.mark_path(w, root, v);
        for u in 0..self.g.order() {
            if self.in_blossom[self.base[u]] {
                self.base[u] = root;
                if !self.in_tree[u] {
                    self.in_tree[u] = true;
                    self.queue.push_back(u);
                }
            }
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        self.in_tree.iter_mut().for_each(|b| *b = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.g.degree(v) {
                let w = self.g.incident(v)[i].0;
                if self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                if w == root || (self.mate[w] != NONE && self.parent[self.mate[w]] != NONE) {
                    self.contract(v, w);
                } else if self.parent[w] == NONE {
                    self.parent[w] = v;
                    if self.mate[w] == NONE {
                        return Some(w);
                    }
                    let next = self.mate[w];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// `m(G)` by exhaustive backtracking over edges, pruned by the number of
/// remaining edges and by half the number of vertices.
pub fn matching_number_bruteforce(g: &GainGraph) -> Result<usize, MatchingError> {
    if g.size() > BRUTEFORCE_EDGE_LIMIT {
        return Err(MatchingError::TooManyEdges(g.size()));
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut used = vec![false; g.order()];
    let mut best = 0;
    let cap = g.order() / 2;
    fn go(i: usize, size: usize, edges: &[(usize, usize)], used: &mut [bool], best: &mut usize, cap: usize) {
        if size > *best {
            *best = size;
        }
        if i == edges.len() || size + (edges.len() - i) <= *best || *best == cap {
            return;
        }
        let (u, v) = edges[i];
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            go(i + 1, size + 1, edges, used, best, cap);
            used[u] = false;
            used[v] = false;
        }
        go(i + 1, size, edges, used, best, cap);
    }
    go(0, 0, &edges, &mut used, &mut best, cap);
    Ok(best)
}

/// Whether some maximum matching of `g` uses no edge of `forbidden`.
pub fn exists_max_matching_avoiding(g: &GainGraph, forbidden: &[(usize, usize)]) -> Result<bool, GraphError> {
    let reduced = g.remove_edges(forbidden)?;
    Ok(matching_number(&reduced) == matching_number(g))
}

/// Whether every maximum matching of `g` saturates `v`.
pub fn every_max_matching_saturates(g: &GainGraph, v: usize) -> Result<bool, GraphError> {
    let (without, _) = g.delete_vertices(&[v])?;
    Ok(matching_number(&without) + 1 == matching_number(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named::*;

    fn check_valid(g: &GainGraph, m: &MatchingResult) {
        let mut seen = vec![false; g.order()];
        for &(u, v) in &m.edges {
            assert!(g.has_edge(u, v));
            assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
        assert_eq!(m.saturated.len(), 2 * m.size());
    }

    #[test]
    fn named_graphs() {
        for (g, m) in [(path(4), 2), (cycle(5), 2), (petersen(), 5), (complete(4), 2), (star(4), 1), (cycle(6), 3)] {
            let result = max_matching(&g);
            check_valid(&g, &result);
            assert_eq!(result.size(), m);
            assert_eq!(matching_number_bruteforce(&g).unwrap(), m);
        }
        assert_eq!(matching_number(&GainGraph::empty(0)), 0);
    }

    #[test]
    fn blossom_needs_contraction() {
        // Two triangles joined by a path; greedy start leaves an odd-cycle trap.
        let edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (0, 7), (6, 8)];
        let g = GainGraph::new(9, edges.map(|(u, v)| (u, v, Gain::ONE))).unwrap();
        assert_eq!(matching_number(&g), matching_number_bruteforce(&g).unwrap());
        assert_eq!(matching_number(&g), 4);
    }

    #[test]
    fn bruteforce_limit() {
        assert_eq!(matching_number_bruteforce(&complete(8)), Err(MatchingError::TooManyEdges(28)));
    }

    #[test]
    fn avoiding() {
        assert!(exists_max_matching_avoiding(&path(3), &[(0, 1)]).unwrap());
        assert!(!exists_max_matching_avoiding(&path(2), &[(0, 1)]).unwrap());
        let g = cycle(4).disjoint_union(&path(2)).with_edge(0, 4, Gain::ONE).unwrap();
        assert!(exists_max_matching_avoiding(&g, &[(0, 4)]).unwrap());
        assert!(exists_max_matching_avoiding(&g, &[(0, 2)]).is_err());
    }

    #[test]
    fn saturation() {
        assert!(every_max_matching_saturates(&path(2), 0).unwrap());
        assert!(every_max_matching_saturates(&path(3), 1).unwrap());
        assert!(!every_max_matching_saturates(&path(3), 0).unwrap());
        assert!((0..4).all(|v| every_max_matching_saturates(&cycle(4), v).unwrap()));
        assert!(every_max_matching_saturates(&path(3), 3).is_err());
    }
}
