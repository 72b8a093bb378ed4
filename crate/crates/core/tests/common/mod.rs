//! Independent oracles shared by the integration suites. None of these call
//! the library routine they are used to check.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use gain_inertia::{CycleType, GainGraph, Inertia};
use nalgebra::DMatrix;

/// Inertia from a dense symmetric eigensolver on the real embedding
/// `[[Re A, -Im A], [Im A, Re A]]`, whose spectrum is that of `A` doubled.
pub fn eigen_inertia(g: &GainGraph, tol: f64) -> Inertia {
    let n = g.order();
    if n == 0 {
        return Inertia::new(0, 0, 0);
    }
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for e in g.edges() {
        let z = e.gain.value();
        for (i, j, z) in [(e.u, e.v, z), (e.v, e.u, z.conj())] {
            m[(i, j)] = z.re;
            m[(i + n, j + n)] = z.re;
            m[(i, j + n)] = -z.im;
            m[(i + n, j)] = z.im;
        }
    }
    let eig = m.symmetric_eigen().eigenvalues;
    let p = eig.iter().filter(|&&x| x > tol).count();
    let q = eig.iter().filter(|&&x| x < -tol).count();
    assert!(p % 2 == 0 && q % 2 == 0, "real embedding spectrum must pair up");
    Inertia::new(p / 2, q / 2, n - p / 2 - q / 2)
}

/// Matching number by memoized recursion over vertex subsets.
pub fn matching_oracle(g: &GainGraph) -> usize {
    matching_oracle_avoiding(g, &[])
}

/// Largest matching that uses none of the `forbidden` pairs.
pub fn matching_oracle_avoiding(g: &GainGraph, forbidden: &[(usize, usize)]) -> usize {
    let n = g.order();
    assert!(n <= 24, "oracle limited to 24 vertices");
    let mut adj = vec![0u32; n];
    for e in g.edges() {
        if forbidden.iter().any(|&(a, b)| (a, b) == (e.u, e.v) || (a, b) == (e.v, e.u)) {
            continue;
        }
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    fn go(set: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if set == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&set) {
            return r;
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(set, best);
        best
    }
    go((1u32 << n) - 1, &adj, &mut HashMap::new())
}

/// Number of connected components by breadth-first search.
pub fn components_oracle(g: &GainGraph) -> usize {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

pub fn cyclomatic_oracle(g: &GainGraph) -> usize {
    g.size() + components_oracle(g) - g.order()
}

/// Whether edge `idx` lies on a cycle: its endpoints stay connected without it.
pub fn edge_on_cycle(g: &GainGraph, idx: usize) -> bool {
    let target = g.edges()[idx];
    let mut adj = vec![Vec::new(); g.order()];
    for (k, e) in g.edges().iter().enumerate() {
        if k != idx {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
    }
    let mut seen = vec![false; g.order()];
    seen[target.u] = true;
    let mut queue = VecDeque::from([target.u]);
    while let Some(v) = queue.pop_front() {
        if v == target.v {
            return true;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Per vertex: incident edges lying on some cycle.
pub fn cycle_edge_degrees(g: &GainGraph) -> Vec<usize> {
    let mut deg = vec![0; g.order()];
    for (k, e) in g.edges().iter().enumerate() {
        if edge_on_cycle(g, k) {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    deg
}

/// Every simple cycle through the vertices of a small graph, as vertex
/// sequences starting at their smallest vertex, each listed once.
pub fn all_cycles(g: &GainGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut out = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend(start, &adj, &mut path, &mut on_path, &mut out);
    }
    fn extend(start: usize, adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                extend(start, adj, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    out
}

/// Cycle inertia table, restated: `(p, n)` for `C_n` of each type.
pub fn cycle_inertia_table(n: usize, t: CycleType) -> Inertia {
    let (p, q) = match t {
        CycleType::A => (n / 2 - 1, n / 2 - 1),
        CycleType::B => (n / 2, n / 2),
        CycleType::C => (n / 2 + 1, n / 2),
        CycleType::D => (n / 2, n / 2 + 1),
        CycleType::E => (n / 2, n / 2),
    };
    Inertia::new(p, q, n - p - q)
}
