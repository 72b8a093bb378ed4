//! The gain graph data model and its purely combinatorial operations.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::gain::{Gain, GainSpec, SNAP_TOLERANCE};

/// An edge `u -> v` carrying the gain of that orientation.
#[derive(Clone, Copy, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub gain: Gain,
}

/// A simple undirected graph with a unit complex gain on each oriented edge.
///
/// The gain of `v -> u` is the conjugate of the stored gain of `u -> v`.
/// Graphs are immutable; deletions return new graphs.
#[derive(Clone, Debug)]
pub struct GainGraph {
    order: usize,
    edges: Vec<Edge>,
    /// `(neighbor, edge index)` per vertex, sorted by neighbor.
    adjacency: Vec<Vec<(usize, usize)>>,
}

/// Builds a validated graph from loosely specified gains.
pub fn build_graph(order: usize, edges: &[(usize, usize, GainSpec)]) -> Result<GainGraph, GraphError> {
    let edges = edges
        .iter()
        .map(|&(u, v, spec)| Ok((u, v, spec.to_gain()?)))
        .collect::<Result<Vec<_>, GraphError>>()?;
    GainGraph::new(order, edges)
}

impl GainGraph {
    pub fn new<I>(order: usize, edges: I) -> Result<GainGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Gain)>,
    {
        let mut adjacency = vec![Vec::new(); order];
        let mut stored = Vec::new();
        for (u, v, gain) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if adjacency[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            let idx = stored.len();
            stored.push(Edge { u, v, gain });
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(GainGraph { order, edges: stored, adjacency })
    }

    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> GainGraph {
        GainGraph { order, edges: Vec::new(), adjacency: vec![Vec::new(); order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge index)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// Gain of the oriented edge `u -> v`, if `uv` is an edge.
    pub fn gain(&self, u: usize, v: usize) -> Option<Gain> {
        let e = self.edges[self.edge_index(u, v)?];
        Some(if e.u == u { e.gain } else { e.gain.conj() })
    }

    /// True when every gain is one of `1, -1, i, -i`.
    pub fn is_exact(&self) -> bool {
        self.edges.iter().all(|e| e.gain.is_exact())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order });
        }
        Ok(())
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut components = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `|E| - |V| + ω`.
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + self.component_count() - self.order
    }

    /// Induced subgraph on the complement of `removed`, with vertices
    /// relabeled contiguously in increasing order. The returned map sends
    /// each new id to its old id.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(GainGraph, Vec<usize>), GraphError> {
        let mut drop = vec![false; self.order];
        for &v in removed {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.order).filter(|&v| !drop[v]).collect();
        Ok((self.induced_subgraph_unchecked(&keep), keep))
    }

    /// Induced subgraph on `vertices` (relabeled in the given order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<GainGraph, GraphError> {
        let mut seen = BTreeSet::new();
        for &v in vertices {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        Ok(self.induced_subgraph_unchecked(vertices))
    }

    fn induced_subgraph_unchecked(&self, vertices: &[usize]) -> GainGraph {
        let mut new_id = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self.edges.iter().filter_map(|e| {
            let (a, b) = (new_id[e.u], new_id[e.v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b, e.gain))
        });
        GainGraph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// The same vertex set with the given edges (as unordered pairs) removed.
    pub fn remove_edges(&self, pairs: &[(usize, usize)]) -> Result<GainGraph, GraphError> {
        let mut drop = vec![false; self.size()];
        for &(u, v) in pairs {
            let idx = self.edge_index(u, v).ok_or(GraphError::NotAnEdge(u, v))?;
            drop[idx] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| (e.u, e.v, e.gain));
        GainGraph::new(self.order, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &GainGraph) -> GainGraph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.gain))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.gain)));
        GainGraph::new(self.order + other.order, edges).expect("disjoint union of valid graphs")
    }

    /// A copy with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize, gain: Gain) -> Result<GainGraph, GraphError> {
        let edges = self.edges.iter().map(|e| (e.u, e.v, e.gain)).chain([(u, v, gain)]);
        GainGraph::new(self.order, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> GainGraph {
        assert_eq!(perm.len(), self.order);
        let edges = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.gain));
        GainGraph::new(self.order, edges).expect("permutation of a valid graph")
    }

    /// Returns an error unless `cycle` lists at least three distinct vertices
    /// with consecutive (and wrap-around) pairs adjacent.
    pub fn check_cycle(&self, cycle: &[usize]) -> Result<(), GraphError> {
        let bad = || GraphError::NotACycle(cycle.to_vec());
        if cycle.len() < 3 {
            return Err(bad());
        }
        let mut seen = BTreeSet::new();
        for &v in cycle {
            if v >= self.order || !seen.insert(v) {
                return Err(bad());
            }
        }
        let closed = (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        if closed {
            Ok(())
        } else {
            Err(bad())
        }
    }

    /// Product of the gains along `cycle`, traversed in the listed order
    /// and closed back to the first vertex.
    pub fn gain_of_cycle(&self, cycle: &[usize]) -> Result<Gain, GraphError> {
        self.check_cycle(cycle)?;
        let n = cycle.len();
        Ok((0..n)
            .map(|i| self.gain(cycle[i], cycle[(i + 1) % n]).expect("checked adjacency"))
            .fold(Gain::ONE, |acc, g| acc * g))
    }

    /// Degree-one vertices.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Neighbors of pendant vertices.
    pub fn quasi_pendant_vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .pendant_vertices()
            .into_iter()
            .map(|v| self.adjacency[v][0].0)
            .collect();
        set.into_iter().collect()
    }

    /// Labeled equality: same order, same edge set, gains equal within 1e-12.
    pub fn graph_eq(&self, other: &GainGraph) -> bool {
        self.order == other.order
            && self.size() == other.size()
            && self.edges.iter().all(|e| {
                other
                    .gain(e.u, e.v)
                    .is_some_and(|g| g.approx_eq(e.gain, SNAP_TOLERANCE))
            })
    }
}

impl PartialEq for GainGraph {
    fn eq(&self, other: &GainGraph) -> bool {
        self.graph_eq(other)
    }
}

/// Convenience constructors for common small graphs with unit gains.
pub mod named {
    use super::*;

    pub fn path(n: usize) -> GainGraph {
        GainGraph::new(n, (1..n).map(|i| (i - 1, i, Gain::ONE))).unwrap()
    }

    pub fn cycle(n: usize) -> GainGraph {
        cycle_with_gains(&vec![Gain::ONE; n])
    }

    /// `C_n` on `0..n` where `gains[i]` sits on `i -> i+1 (mod n)`.
    pub fn cycle_with_gains(gains: &[Gain]) -> GainGraph {
        let n = gains.len();
        GainGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, gains[i]))).unwrap()
    }

    pub fn complete(n: usize) -> GainGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, Gain::ONE)));
        GainGraph::new(n, edges).unwrap()
    }

    pub fn star(leaves: usize) -> GainGraph {
        GainGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v, Gain::ONE))).unwrap()
    }

    pub fn petersen() -> GainGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5, Gain::ONE));
            edges.push((i, i + 5, Gain::ONE));
            edges.push((i + 5, (i + 2) % 5 + 5, Gain::ONE));
        }
        GainGraph::new(10, edges).unwrap()
    }
}
