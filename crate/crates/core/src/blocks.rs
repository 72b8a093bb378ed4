//! Biconnected blocks, cycle structure, and the cycle contraction `T_G`.

use crate::gain::Gain;
use crate::graph::GainGraph;

/// A maximal biconnected subgraph, or a bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Edge indices into `GainGraph::edges`.
    pub edges: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block is a cycle exactly when it has as many edges as vertices (and at least three).
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.vertices.len() == self.edges.len()
    }
}

#[derive(Clone, Debug, Default)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
}

/// Tarjan's biconnected-component decomposition. Isolated vertices belong to no block.
pub fn block_decomposition(g: &GainGraph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next incident position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, parent_edge, pos) = stack[top];
            if let Some(&(w, e)) = g.incident(v).get(pos) {
                stack[top].2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(parent, _, _)) = stack.last() else { break };
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(e);
                    if e == parent_edge {
                        break;
                    }
                }
                blocks.push(make_block(g, edges));
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    BlockDecomposition { blocks, cut_vertices }
}

fn make_block(g: &GainGraph, mut edges: Vec<usize>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<usize> = edges
        .iter()
        .flat_map(|&e| [g.edges()[e].u, g.edges()[e].v])
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

/// Cycles of a graph whose cycles are pairwise vertex-disjoint, together
/// with `O(G)`, `F(G)` and the contraction onto `T_G`.
#[derive(Clone, Debug)]
pub struct CycleStructure {
    /// Each cycle as a vertex sequence starting at its smallest vertex.
    /// Empty when `vertex_disjoint` is false.
    pub cycles: Vec<Vec<usize>>,
    pub vertex_disjoint: bool,
    /// `O(G)`, sorted. Empty when `vertex_disjoint` is false.
    pub cycle_vertices: Vec<usize>,
    /// `F(G)`: edges touching a cycle without lying on it, as `(cycle endpoint,
    /// other endpoint)`. An edge joining two cycles is included. `None` unless
    /// `vertex_disjoint`.
    pub boundary_edges: Option<Vec<(usize, usize)>>,
    /// Vertex of `T_G` for each vertex of `G`. Empty unless `vertex_disjoint`.
    pub contraction: Vec<usize>,
    /// `T_G` itself (unit gains), present when `vertex_disjoint`.
    pub contracted: Option<GainGraph>,
}

impl CycleStructure {
    pub fn on_cycle(&self, v: usize) -> bool {
        self.cycle_vertices.binary_search(&v).is_ok()
    }
}

/// Cycle structure from the block decomposition.
pub fn cycle_structure(g: &GainGraph) -> CycleStructure {
    let decomposition = block_decomposition(g);
    let mut owner = vec![usize::MAX; g.order()];
    let mut cycle_blocks = Vec::new();
    let mut disjoint = true;
    for block in &decomposition.blocks {
        if block.is_bridge() {
            continue;
        }
        if !block.is_cycle() {
            disjoint = false;
            break;
        }
        for &v in &block.vertices {
            if owner[v] != usize::MAX {
                disjoint = false;
            }
            owner[v] = cycle_blocks.len();
        }
        cycle_blocks.push(block);
    }
    if !disjoint {
        return CycleStructure {
            cycles: Vec::new(),
            vertex_disjoint: false,
            cycle_vertices: Vec::new(),
            boundary_edges: None,
            contraction: Vec::new(),
            contracted: None,
        };
    }

    let mut cycles: Vec<Vec<usize>> = cycle_blocks.iter().map(|b| walk_cycle(g, b)).collect();
    cycles.sort();
    let mut owner = vec![usize::MAX; g.order()];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            owner[v] = i;
        }
    }

    let mut cycle_vertices: Vec<usize> = cycles.iter().flatten().copied().collect();
    cycle_vertices.sort_unstable();

    let boundary_edges = g
        .edges()
        .iter()
        .filter(|e| owner[e.u] != owner[e.v])
        .map(|e| if owner[e.u] != usize::MAX { (e.u, e.v) } else { (e.v, e.u) })
        .collect();

    // T_G ids are handed out in order of first appearance by original vertex id.
    let mut contraction = vec![usize::MAX; g.order()];
    let mut cycle_id = vec![usize::MAX; cycles.len()];
    let mut next = 0;
    for v in 0..g.order() {
        let slot = if owner[v] == usize::MAX { &mut contraction[v] } else { &mut cycle_id[owner[v]] };
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
        if owner[v] != usize::MAX {
            contraction[v] = cycle_id[owner[v]];
        }
    }
    let tree_edges = g.edges().iter().filter_map(|e| {
        let (a, b) = (contraction[e.u], contraction[e.v]);
        (a != b).then_some((a, b, Gain::ONE))
    });
    let contracted = GainGraph::new(next, tree_edges).expect("contraction of disjoint cycles is simple");
    debug_assert_eq!(contracted.cyclomatic_number(), 0);

    CycleStructure {
        cycles,
        vertex_disjoint: true,
        cycle_vertices,
        boundary_edges: Some(boundary_edges),
        contraction,
        contracted: Some(contracted),
    }
}

/// Orders the vertices of a cycle block, starting at its smallest vertex
/// and stepping first to the smaller of its two block neighbors.
fn walk_cycle(g: &GainGraph, block: &Block) -> Vec<usize> {
    let in_block = |u: usize, w: usize| {
        g.edge_index(u, w).is_some_and(|e| block.edges.binary_search(&e).is_ok())
    };
    let start = block.vertices[0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .find(|&w| w != prev && in_block(cur, w))
            .expect("cycle block vertex has two block neighbors");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// Vertices lying on at least one cycle (those in a non-bridge block), sorted.
pub fn vertices_on_cycles(g: &GainGraph) -> Vec<usize> {
    let count = cycle_edge_degree(g);
    (0..g.order()).filter(|&v| count[v] > 0).collect()
}

/// Common vertices of two cycles that pass through the vertex along
/// different pairs of edges, i.e. vertices with three or more incident
/// edges lying on cycles. Sorted.
///
/// A degree-2 vertex inside a theta subgraph lies on several cycles but is
/// not listed: deleting it lowers `c` by one only.
pub fn vertices_on_multiple_cycles(g: &GainGraph) -> Vec<usize> {
    let count = cycle_edge_degree(g);
    (0..g.order()).filter(|&v| count[v] >= 3).collect()
}

/// Per vertex: incident edges that lie in non-bridge blocks.
fn cycle_edge_degree(g: &GainGraph) -> Vec<usize> {
    let mut count = vec![0usize; g.order()];
    for block in block_decomposition(g).blocks {
        if block.is_bridge() {
            continue;
        }
        for &e in &block.edges {
            let edge = g.edges()[e];
            count[edge.u] += 1;
            count[edge.v] += 1;
        }
    }
    count
}

/// Membership in the class of graphs with at least one cycle, pairwise
/// vertex-disjoint cycles, and not merely a disjoint union of cycles and trees.
pub fn in_cyclic_class(g: &GainGraph) -> bool {
    let cs = cycle_structure(g);
    if !cs.vertex_disjoint || cs.cycles.is_empty() {
        return false;
    }
    let only_cycles_and_trees = g.connected_components().iter().all(|comp| {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let is_tree = edges + 1 == comp.len();
        let is_cycle = comp.len() >= 3 && comp.iter().all(|&v| g.degree(v) == 2);
        is_tree || is_cycle
    });
    !only_cycles_and_trees
}
