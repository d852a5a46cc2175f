//! Rotation-system embeddings with edge signatures.
//!
//! An embedding of a connected graph on a surface is encoded by a cyclic
//! order of incident edges at every vertex plus a sign per edge. Faces are
//! recovered by the standard tracing rule; the Euler genus `2 - V + E - F`
//! and the balance of the signature classify the surface.
//!
//! Face tracing works on *states* `(arc, sign)`, where an arc is a directed
//! edge and the sign carries the product of the signatures crossed so far
//! (including the arc's own edge). From state `(u -> v, s)` the walk leaves
//! `v` along the rotation successor of `uv` when `s = +1`, the predecessor
//! when `s = -1`, and the new sign is `s` times the signature of the next
//! edge. The `4|E|` states split into closed orbits; orbits pair up under
//! mirror reversal and each pair is one face.

mod flip;

pub use flip::FlipSpec;

use crate::error::EmbeddingError;
use crate::graph::{EdgeId, Graph, Vertex};
use std::collections::BTreeMap;

/// A surface: the orientable `S_g` or nonorientable `N_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceSpec {
    orientable: bool,
    genus: usize,
}

impl SurfaceSpec {
    pub fn orientable(genus: usize) -> Self {
        SurfaceSpec { orientable: true, genus }
    }

    pub fn nonorientable(genus: usize) -> Result<Self, EmbeddingError> {
        if genus == 0 {
            return Err(EmbeddingError::BadSurface);
        }
        Ok(SurfaceSpec { orientable: false, genus })
    }

    pub fn sphere() -> Self {
        Self::orientable(0)
    }

    pub fn torus() -> Self {
        Self::orientable(1)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn euler_genus(&self) -> usize {
        if self.orientable {
            2 * self.genus
        } else {
            self.genus
        }
    }

    /// Parses `S<g>` / `N<k>` plus a few common names.
    pub fn parse(text: &str) -> Option<Self> {
        let t = text.trim();
        match t.to_ascii_lowercase().as_str() {
            "sphere" | "plane" => return Some(Self::sphere()),
            "torus" => return Some(Self::torus()),
            "projective" | "projective-plane" => return Self::nonorientable(1).ok(),
            "klein" | "klein-bottle" => return Self::nonorientable(2).ok(),
            _ => {}
        }
        let (head, tail) = t.split_at(1);
        let genus: usize = tail.parse().ok()?;
        match head {
            "S" | "s" => Some(Self::orientable(genus)),
            "N" | "n" => Self::nonorientable(genus).ok(),
            _ => None,
        }
    }
}

impl std::fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", if self.orientable { "S" } else { "N" }, self.genus)
    }
}

/// One step of a face walk: the walk leaves `vertex` along `edge` carrying
/// `sign` (the accumulated signature product including this edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceStep {
    pub vertex: Vertex,
    pub edge: EdgeId,
    pub sign: i8,
}

/// A closed face walk; `steps.len()` is the face length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub steps: Vec<FaceStep>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertices in walk order (with repetitions if the walk has any).
    pub fn vertices(&self) -> Vec<Vertex> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.steps.iter().any(|s| s.edge == e)
    }

    /// Positions at which `v` occurs on the walk.
    pub fn corners_of(&self, v: Vertex) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.vertex == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff the walk visits exactly the given cyclic vertex sequence,
    /// up to rotation and reversal.
    pub fn matches_cycle(&self, cycle: &[Vertex]) -> bool {
        let m = cycle.len();
        if self.len() != m {
            return false;
        }
        let verts = self.vertices();
        for start in 0..m {
            if (0..m).all(|i| verts[(start + i) % m] == cycle[i])
                || (0..m).all(|i| verts[(start + m - i) % m] == cycle[i])
            {
                return true;
            }
        }
        false
    }
}

/// A graph embedded via rotations and signatures.
///
/// Immutable after construction; all operations return new values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationEmbedding {
    graph: Graph,
    /// rotation[v]: cyclic order of the edges incident to v
    rotation: Vec<Vec<EdgeId>>,
    /// signature[e] in {+1, -1}
    signature: Vec<i8>,
}

impl RotationEmbedding {
    pub fn new(graph: Graph, mut rotation: Vec<Vec<EdgeId>>, signature: Vec<i8>) -> Result<Self, EmbeddingError> {
        // rotations are cyclic: store each starting from its least edge id
        // so that equal embeddings compare equal and serialize identically
        for rot in &mut rotation {
            if rot.len() > 1 {
                let min_pos = rot
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &e)| e)
                    .map(|(i, _)| i)
                    .unwrap();
                rot.rotate_left(min_pos);
            }
        }
        let emb = RotationEmbedding { graph, rotation, signature };
        emb.validate()?;
        Ok(emb)
    }

    /// Builds from per-vertex neighbor orders instead of edge ids.
    pub fn from_neighbor_orders(graph: Graph, orders: &[Vec<Vertex>], negative_edges: &[(Vertex, Vertex)]) -> Result<Self, EmbeddingError> {
        let mut rotation = Vec::with_capacity(graph.vertex_count());
        for (v, order) in orders.iter().enumerate() {
            let mut rot = Vec::with_capacity(order.len());
            for &u in order {
                let e = graph.edge_id(v, u).ok_or(EmbeddingError::NoSuchEdge { u: v, v: u })?;
                rot.push(e);
            }
            rotation.push(rot);
        }
        let mut signature = vec![1i8; graph.edge_count()];
        for &(u, v) in negative_edges {
            let e = graph.edge_id(u, v).ok_or(EmbeddingError::NoSuchEdge { u, v })?;
            signature[e] = -1;
        }
        RotationEmbedding::new(graph, rotation, signature)
    }

    /// The canonical all-positive embedding induced by listing each vertex's
    /// incident edges in increasing order. Not meaningful topologically, but
    /// a convenient deterministic starting point in tests.
    pub fn with_sorted_rotations(graph: Graph) -> Self {
        let rotation = (0..graph.vertex_count()).map(|v| graph.incident_edges(v)).collect();
        let signature = vec![1i8; graph.edge_count()];
        RotationEmbedding { graph, rotation, signature }
    }

    fn validate(&self) -> Result<(), EmbeddingError> {
        if self.rotation.len() != self.graph.vertex_count() || self.signature.len() != self.graph.edge_count() {
            return Err(EmbeddingError::SignatureMismatch);
        }
        if self.signature.iter().any(|&s| s != 1 && s != -1) {
            return Err(EmbeddingError::SignatureMismatch);
        }
        for v in 0..self.graph.vertex_count() {
            let mut expect = self.graph.incident_edges(v);
            let mut got = self.rotation[v].clone();
            expect.sort_unstable();
            got.sort_unstable();
            if expect != got {
                return Err(EmbeddingError::RotationNotPermutation { v });
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: Vertex) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    pub fn signature(&self, e: EdgeId) -> i8 {
        self.signature[e]
    }

    pub fn negative_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.signature
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == -1)
            .map(|(e, _)| self.graph.endpoints(e))
            .collect()
    }

    /// Reverses the rotation at `v` and negates the signature of its
    /// incident edges. This is the local reflection move; it maps an
    /// embedding to an equivalent one on the same surface.
    pub fn reflect_vertex(&self, v: Vertex) -> Self {
        let mut rotation = self.rotation.clone();
        rotation[v].reverse();
        let mut signature = self.signature.clone();
        for &e in &rotation[v] {
            signature[e] = -signature[e];
        }
        RotationEmbedding::new(self.graph.clone(), rotation, signature)
            .expect("reflection preserves embedding validity")
    }

    /// Reflects vertices so every spanning-tree edge (BFS tree from vertex 0)
    /// gets signature +1. Orientable embeddings come out all-positive, which
    /// keeps serialized certificates canonical.
    pub fn normalized(&self) -> Self {
        let n = self.graph.vertex_count();
        let mut color = vec![0i8; n];
        let mut out = self.clone();
        if n == 0 {
            return out;
        }
        color[0] = 1;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for u in self.graph.neighbors(v) {
                if color[u] == 0 {
                    let e = self.graph.edge_id(u, v).expect("neighbor edge");
                    color[u] = color[v] * self.signature[e];
                    queue.push_back(u);
                }
            }
        }
        for v in 0..n {
            if color[v] == -1 {
                out = out.reflect_vertex(v);
            }
        }
        out
    }

    /// Number of face-tracing states (`4|E|`).
    fn state_count(&self) -> usize {
        4 * self.graph.edge_count()
    }

    fn state_next(&self, state: usize) -> usize {
        let sgn = if state & 1 == 0 { 1i8 } else { -1i8 };
        let arc = state >> 1;
        let e = arc >> 1;
        let (lo, hi) = self.graph.endpoints(e);
        let head = if arc & 1 == 0 { hi } else { lo };
        let rot = &self.rotation[head];
        let pos = rot.iter().position(|&x| x == e).expect("validated rotation");
        let next_e = if sgn == 1 {
            rot[(pos + 1) % rot.len()]
        } else {
            rot[(pos + rot.len() - 1) % rot.len()]
        };
        let new_sgn = sgn * self.signature[next_e];
        let (nlo, nhi) = self.graph.endpoints(next_e);
        let ndir = if head == nlo { 0 } else { debug_assert_eq!(head, nhi); 1 };
        (((next_e << 1) | ndir) << 1) | if new_sgn == 1 { 0 } else { 1 }
    }

    fn state_mirror(&self, state: usize) -> usize {
        let sgn = if state & 1 == 0 { 1i8 } else { -1i8 };
        let arc = state >> 1;
        let e = arc >> 1;
        let rev_arc = arc ^ 1;
        let m_sgn = -sgn * self.signature[e];
        ((rev_arc) << 1) | if m_sgn == 1 { 0 } else { 1 }
    }

    fn state_tail(&self, state: usize) -> Vertex {
        let arc = state >> 1;
        let e = arc >> 1;
        let (lo, hi) = self.graph.endpoints(e);
        if arc & 1 == 0 {
            lo
        } else {
            hi
        }
    }

    /// Traces all faces. Deterministic: faces are ordered by their smallest
    /// state id and each walk starts at that state.
    pub fn trace_faces(&self) -> Vec<FaceWalk> {
        let total = self.state_count();
        let mut orbit_of = vec![usize::MAX; total];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..total {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let idx = orbits.len();
            let mut orbit = vec![start];
            orbit_of[start] = idx;
            let mut s = self.state_next(start);
            while s != start {
                debug_assert_eq!(orbit_of[s], usize::MAX, "face tracing must be a permutation");
                orbit_of[s] = idx;
                orbit.push(s);
                s = self.state_next(s);
            }
            orbits.push(orbit);
        }
        // keep one orbit of each mirror pair
        let mut faces = Vec::with_capacity(orbits.len() / 2);
        for orbit in &orbits {
            let min = orbit[0];
            let mirror_orbit = &orbits[orbit_of[self.state_mirror(min)]];
            assert_ne!(min, mirror_orbit[0], "a face orbit cannot be its own mirror");
            if min < mirror_orbit[0] {
                faces.push(FaceWalk {
                    steps: orbit
                        .iter()
                        .map(|&s| FaceStep {
                            vertex: self.state_tail(s),
                            edge: (s >> 2),
                            sign: if s & 1 == 0 { 1 } else { -1 },
                        })
                        .collect(),
                });
            }
        }
        faces
    }

    /// Euler genus `2 - V + E - F`. Requires a connected graph.
    pub fn euler_genus(&self) -> Result<usize, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        let f = if e == 0 { 1 } else { self.trace_faces().len() } as i64;
        let eg = 2 - v + e - f;
        debug_assert!(eg >= 0, "euler genus of a valid embedding is non-negative");
        Ok(eg as usize)
    }

    /// True iff the signature is balanced, i.e. removable by vertex
    /// reflections; such embeddings live on orientable surfaces.
    pub fn is_orientable(&self) -> bool {
        let n = self.graph.vertex_count();
        let mut color = vec![0i8; n];
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            color[start] = 1;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.graph.neighbors(v) {
                    let e = self.graph.edge_id(u, v).expect("neighbor edge");
                    let expect = color[v] * self.signature[e];
                    if color[u] == 0 {
                        color[u] = expect;
                        queue.push_back(u);
                    } else if color[u] != expect {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The surface this embedding lives on.
    pub fn surface(&self) -> Result<SurfaceSpec, EmbeddingError> {
        let eg = self.euler_genus()?;
        if self.is_orientable() {
            if eg % 2 != 0 {
                return Err(EmbeddingError::OddOrientableGenus { eg });
            }
            Ok(SurfaceSpec::orientable(eg / 2))
        } else {
            debug_assert!(eg >= 1);
            SurfaceSpec::nonorientable(eg)
        }
    }

    /// Face sizes as a `size -> count` map.
    pub fn face_size_multiset(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for f in self.trace_faces() {
            *out.entry(f.len()).or_insert(0) += 1;
        }
        out
    }

    /// Number of 4-faces with four distinct vertices inducing a complete
    /// graph.
    pub fn quad_faces_inducing_k4(&self) -> usize {
        self.trace_faces().iter().filter(|f| self.face_is_k4_quad(f)).count()
    }

    pub(crate) fn face_is_k4_quad(&self, f: &FaceWalk) -> bool {
        if f.len() != 4 {
            return false;
        }
        let vs = f.vertices();
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == 4
            && sorted
                .iter()
                .enumerate()
                .all(|(i, &a)| sorted[i + 1..].iter().all(|&b| self.graph.has_edge(a, b)))
    }

    /// True iff every three consecutive vertices of the walk are pairwise
    /// distinct. For 2-connected graphs this holds on every face.
    pub fn consecutive_vertices_distinct(&self, face: &FaceWalk) -> bool {
        let vs = face.vertices();
        let m = vs.len();
        (0..m).all(|i| {
            let (a, b, c) = (vs[i], vs[(i + 1) % m], vs[(i + 2) % m]);
            a != b && b != c && a != c
        })
    }
}

/// Edge count of a triangulation of an Euler-genus-`eg` surface on `n >= 3`
/// vertices: `3(n - 2 + eg)`.
pub fn triangulation_edge_target(n: usize, eg: usize) -> usize {
    debug_assert!(n >= 3);
    3 * (n - 2 + eg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, Graph};

    fn k4_planar() -> RotationEmbedding {
        // tetrahedron: at each vertex, neighbors in an order that closes
        // four triangles
        let g = complete_graph(4);
        RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn tetrahedron_faces() {
        let emb = k4_planar();
        let faces = emb.trace_faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert_eq!(emb.euler_genus().unwrap(), 0);
        assert!(emb.is_orientable());
        assert_eq!(emb.surface().unwrap(), SurfaceSpec::sphere());
        for f in &faces {
            assert!(emb.consecutive_vertices_distinct(f));
        }
        assert_eq!(emb.quad_faces_inducing_k4(), 0);
    }

    #[test]
    fn single_edge_has_one_face_of_length_two() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let emb = RotationEmbedding::with_sorted_rotations(g);
        let faces = emb.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
        assert_eq!(emb.euler_genus().unwrap(), 0);
        assert!(!emb.consecutive_vertices_distinct(&faces[0]));
    }

    #[test]
    fn triangle_with_negative_edge_is_projective() {
        let g = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let emb = RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1, 2], vec![0, 2], vec![0, 1]],
            &[(1, 2)],
        )
        .unwrap();
        assert!(!emb.is_orientable());
        let faces = emb.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 6);
        assert_eq!(emb.euler_genus().unwrap(), 1);
        assert_eq!(emb.surface().unwrap(), SurfaceSpec::nonorientable(1).unwrap());
    }

    #[test]
    fn edge_side_conservation() {
        for emb in [k4_planar(), RotationEmbedding::with_sorted_rotations(complete_graph(6))] {
            let faces = emb.trace_faces();
            let total: usize = faces.iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * emb.graph().edge_count());
            let mut per_edge = vec![0usize; emb.graph().edge_count()];
            for f in &faces {
                for s in &f.steps {
                    per_edge[s.edge] += 1;
                }
            }
            assert!(per_edge.iter().all(|&c| c == 2));
        }
    }

    #[test]
    fn tree_edge_negation_is_reflectable() {
        // one negative signature on a tree edge normalizes away
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let emb = RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1], vec![0, 2], vec![1]],
            &[(1, 2)],
        )
        .unwrap();
        assert!(emb.is_orientable());
        let norm = emb.normalized();
        assert!(norm.negative_edges().is_empty());
        assert_eq!(norm.euler_genus().unwrap(), emb.euler_genus().unwrap());
    }

    #[test]
    fn orientability_invariant_under_reflection() {
        let emb = k4_planar();
        for v in 0..4 {
            let r = emb.reflect_vertex(v);
            assert_eq!(r.is_orientable(), emb.is_orientable());
            assert_eq!(r.euler_genus().unwrap(), emb.euler_genus().unwrap());
            assert_eq!(r.face_size_multiset(), emb.face_size_multiset());
        }
        let g = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let proj = RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1, 2], vec![0, 2], vec![0, 1]],
            &[(1, 2)],
        )
        .unwrap();
        for v in 0..3 {
            let r = proj.reflect_vertex(v);
            assert!(!r.is_orientable());
            assert_eq!(r.euler_genus().unwrap(), 1);
        }
    }

    #[test]
    fn surface_parsing() {
        assert_eq!(SurfaceSpec::parse("S1"), Some(SurfaceSpec::torus()));
        assert_eq!(SurfaceSpec::parse("N2"), SurfaceSpec::nonorientable(2).ok());
        assert_eq!(SurfaceSpec::parse("torus"), Some(SurfaceSpec::torus()));
        assert_eq!(SurfaceSpec::parse("klein"), SurfaceSpec::nonorientable(2).ok());
        assert_eq!(SurfaceSpec::parse("N0"), None);
        assert_eq!(SurfaceSpec::parse("X3"), None);
        assert_eq!(SurfaceSpec::torus().euler_genus(), 2);
        assert_eq!(SurfaceSpec::nonorientable(2).unwrap().euler_genus(), 2);
    }

    #[test]
    fn triangulation_targets() {
        assert_eq!(triangulation_edge_target(7, 2), 21);
        assert_eq!(triangulation_edge_target(8, 2), 24);
        assert_eq!(triangulation_edge_target(3, 0), 3);
    }

    #[test]
    fn isolated_vertex_graph() {
        let g = Graph::new(1, []).unwrap();
        let emb = RotationEmbedding::with_sorted_rotations(g);
        assert_eq!(emb.euler_genus().unwrap(), 0);
    }

    #[test]
    fn invalid_rotation_rejected() {
        let g = complete_graph(3);
        // rotation at vertex 0 missing an edge
        let bad = RotationEmbedding::new(
            g.clone(),
            vec![vec![0], vec![0, 2], vec![1, 2]],
            vec![1, 1, 1],
        );
        assert!(matches!(bad, Err(EmbeddingError::RotationNotPermutation { v: 0 })));
        let bad_sig = RotationEmbedding::new(
            g.clone(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            vec![1, 1],
        );
        assert!(matches!(bad_sig, Err(EmbeddingError::SignatureMismatch)));
    }
}
