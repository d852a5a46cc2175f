//! Simple undirected graphs with dense integer vertex ids, the named
//! families used throughout the crate, and ingestion utilities.

mod canon;
mod fmt;

pub use canon::{canonical_form, canonical_form_bounded, CanonicalForm, DEFAULT_CANON_BOUND};
pub use fmt::{from_graph6, parse_edge_list, parse_graph, to_edge_list, to_graph6};

use crate::error::GraphError;

/// Vertex id, always in `0..n`.
pub type Vertex = usize;
/// Index into the sorted edge list of a [`Graph`].
pub type EdgeId = usize;

/// An unordered vertex pair with `u < v`.
pub type Edge = (Vertex, Vertex);

/// A simple undirected graph: no loops, no parallel edges, vertices `0..n`.
///
/// Edges are kept sorted so that edge ids are stable and serialization is
/// canonical for a fixed labeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; {})", self.n, self.edge_count(), to_edge_list(self))
    }
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicates and
    /// endpoints `>= n`. Accepts `n` up to 64.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        if n > 64 {
            return Err(GraphError::TooManyVertices { n, max: 64 });
        }
        let mut sorted: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop { v: a });
            }
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { v: a.max(b), n });
            }
            sorted.push((a.min(b), a.max(b)));
        }
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            let d = sorted.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(GraphError::DuplicateEdge { u: d.0, v: d.1 });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &sorted {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges: sorted, adj })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("empty graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list; the position of an edge is its [`EdgeId`].
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Edge id of `{u, v}`, if present.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn endpoints(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let bits = self.adj[v];
        (0..self.n).filter(move |&u| (bits >> u) & 1 == 1)
    }

    /// Ids of edges incident to `v`, in increasing edge-id order.
    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// All unordered pairs `{u, v}` that are not edges.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A new graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
        }
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        Graph::new(self.n, edges)
    }

    /// A new graph with the listed edges removed; all must be present.
    pub fn without_edges(&self, remove: &[Edge]) -> Result<Self, GraphError> {
        for &(u, v) in remove {
            if !self.has_edge(u, v) {
                return Err(GraphError::MissingEdge { u: u.min(v), v: u.max(v) });
            }
        }
        let gone: Vec<Edge> = remove.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let edges: Vec<Edge> = self.edges.iter().copied().filter(|e| !gone.contains(e)).collect();
        Graph::new(self.n, edges)
    }

    /// Applies the vertex permutation `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabeled(&self, perm: &[Vertex]) -> Result<Self, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the second graph's vertices are offset by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.component_of(0).count_ones() as usize == self.n
    }

    fn component_of(&self, start: Vertex) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            let mut new = self.adj[v] & !seen;
            seen |= new;
            while new != 0 {
                let u = new.trailing_zeros() as usize;
                new &= new - 1;
                frontier.push(u);
            }
        }
        seen
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if (seen >> v) & 1 == 0 {
                let comp = self.component_of(v);
                seen |= comp;
                out.push((0..self.n).filter(|&u| (comp >> u) & 1 == 1).collect());
            }
        }
        out
    }

    /// The subgraph induced on `verts`, relabeled to `0..verts.len()` in the
    /// given order.
    pub fn induced(&self, verts: &[Vertex]) -> Result<Self, GraphError> {
        let mut idx = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            idx[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| idx[u] != usize::MAX && idx[v] != usize::MAX)
            .map(|&(u, v)| (idx[u], idx[v]));
        Graph::new(verts.len(), edges)
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        let comps = self.components().len();
        self.edges.len() + comps == self.n
    }

    /// Vertex connectivity at least `k`, by brute-force cut enumeration.
    /// Intended for the small gadget graphs in this crate.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        // check that no set of fewer than k vertices disconnects the rest
        let mut cut = vec![0usize; k.saturating_sub(1)];
        fn rec(g: &Graph, cut: &mut Vec<Vertex>, depth: usize, start: Vertex) -> bool {
            if depth == cut.len() {
                let keep: Vec<Vertex> = (0..g.n).filter(|v| !cut.contains(v)).collect();
                let sub = g.induced(&keep).expect("induced subgraph of valid graph");
                return sub.is_connected();
            }
            for v in start..g.n {
                cut[depth] = v;
                if !rec(g, cut, depth + 1, v + 1) {
                    return false;
                }
            }
            true
        }
        for size in 1..k {
            cut.truncate(size);
            cut.resize(size, 0);
            if !rec(self, &mut cut, 0, 0) {
                return false;
            }
        }
        true
    }
}

/// The complete graph on `n >= 1` vertices.
pub fn complete_graph(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one vertex");
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete graph is simple")
}

/// Shapes recognized by [`remove_edge_structure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgePattern {
    SingleEdge,
    C5,
    TwoK2,
    K12,
    K14,
}

impl EdgePattern {
    fn matches(self, witness: &[Edge]) -> bool {
        let degs = |w: &[Edge]| {
            let mut d: std::collections::BTreeMap<Vertex, usize> = std::collections::BTreeMap::new();
            for &(u, v) in w {
                *d.entry(u).or_insert(0) += 1;
                *d.entry(v).or_insert(0) += 1;
            }
            d
        };
        match self {
            EdgePattern::SingleEdge => witness.len() == 1,
            EdgePattern::TwoK2 => {
                witness.len() == 2 && degs(witness).values().all(|&d| d == 1)
            }
            EdgePattern::K12 => {
                witness.len() == 2
                    && degs(witness).len() == 3
                    && degs(witness).values().filter(|&&d| d == 2).count() == 1
            }
            EdgePattern::K14 => {
                let d = degs(witness);
                witness.len() == 4 && d.len() == 5 && d.values().filter(|&&x| x == 4).count() == 1
            }
            EdgePattern::C5 => {
                let d = degs(witness);
                if witness.len() != 5 || d.len() != 5 || !d.values().all(|&x| x == 2) {
                    return false;
                }
                // connected 2-regular on 5 vertices is a 5-cycle
                let verts: Vec<Vertex> = d.keys().copied().collect();
                let sub = Graph::new(
                    verts.len(),
                    witness.iter().map(|&(u, v)| {
                        (
                            verts.iter().position(|&x| x == u).unwrap(),
                            verts.iter().position(|&x| x == v).unwrap(),
                        )
                    }),
                );
                sub.map(|g| g.is_connected()).unwrap_or(false)
            }
        }
    }
}

/// Removes a named edge structure from `g`. The witness edges must all be
/// present and must induce the named shape.
pub fn remove_edge_structure(g: &Graph, pattern: EdgePattern, witness: &[Edge]) -> Result<Graph, GraphError> {
    if !pattern.matches(witness) {
        return Err(GraphError::PatternMismatch { pattern: format!("{pattern:?}") });
    }
    g.without_edges(witness)
}

/// A 3-connected planar graph whose unique planar embedding has one
/// distinguished quadrilateral face (the "outer" one) and triangular faces
/// everywhere else.
///
/// `depth = 0` is a 4-cycle `0,1,2,3` with one dominating hub `4`. Each
/// further level stacks a new vertex into the lexicographically least
/// interior triangle, keeping the family deterministic.
pub fn quad_plate(depth: usize) -> Graph {
    let (g, _, _) = quad_plate_parts(depth);
    g
}

/// As [`quad_plate`], also returning the interior triangle list and the
/// outer quadrilateral `[0, 1, 2, 3]`.
pub fn quad_plate_parts(depth: usize) -> (Graph, Vec<[Vertex; 3]>, [Vertex; 4]) {
    let mut edges: Vec<Edge> = vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)];
    let mut tris: Vec<[Vertex; 3]> = vec![[0, 1, 4], [1, 2, 4], [2, 3, 4], [0, 3, 4]];
    tris.sort_unstable();
    let mut n = 5;
    for _ in 0..depth {
        let [a, b, c] = tris[0];
        let z = n;
        n += 1;
        edges.extend([(a, z), (b, z), (c, z)]);
        tris.remove(0);
        tris.extend([[a, b, z], [a, c, z], [b, c, z]]);
        tris.sort_unstable();
    }
    let g = Graph::new(n, edges).expect("stacked plate stays simple");
    (g, tris, [0, 1, 2, 3])
}
