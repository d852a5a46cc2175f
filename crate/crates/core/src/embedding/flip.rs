//! Edge flips: re-embedding an existing edge across another face, and the
//! derived procedure that turns some face of size >= 5 into a 4-face.

use super::{FaceWalk, RotationEmbedding};
use crate::error::EmbeddingError;
use crate::graph::Vertex;

/// Arguments for a flip, as taken on the command line.
#[derive(Debug, Clone, Copy)]
pub struct FlipSpec {
    pub edge: (Vertex, Vertex),
    pub face: usize,
    pub corner_u: usize,
    pub corner_v: usize,
}

impl RotationEmbedding {
    /// Re-embeds the edge `{u, v}` across `target_face`, at the given corner
    /// occurrences of `u` and `v` on that face walk.
    ///
    /// The target face must not be incident to the edge, and the edge's two
    /// sides must currently lie on two distinct faces; then the move merges
    /// those two faces and splits the target, keeping the face count and the
    /// Euler genus unchanged. The re-inserted edge gets the signature
    /// determined by the face traversal, so flipping back to the original
    /// corners restores the original embedding.
    pub fn flip_edge(
        &self,
        uv: (Vertex, Vertex),
        target_face: usize,
        corner_u: usize,
        corner_v: usize,
    ) -> Result<RotationEmbedding, EmbeddingError> {
        let (u, v) = uv;
        let e = self
            .graph()
            .edge_id(u, v)
            .ok_or(EmbeddingError::NoSuchEdge { u, v })?;
        let faces = self.trace_faces();
        if target_face >= faces.len() {
            return Err(EmbeddingError::NoSuchFace { face: target_face, count: faces.len() });
        }

        let incident: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains_edge(e))
            .map(|(i, _)| i)
            .collect();
        if incident.contains(&target_face) {
            return Err(EmbeddingError::FaceIncidentToEdge);
        }
        if incident.len() < 2 {
            return Err(EmbeddingError::EdgeOnSingleFace);
        }

        let walk = &faces[target_face];
        let len = walk.len();
        let check = |idx: usize, want: Vertex| -> Result<(), EmbeddingError> {
            if idx >= len || walk.steps[idx].vertex != want {
                return Err(EmbeddingError::BadCorner { index: idx, expected: want });
            }
            Ok(())
        };
        check(corner_u, u)?;
        check(corner_v, v)?;

        let corner = |idx: usize| {
            let prev = &walk.steps[(idx + len - 1) % len];
            (prev.edge, prev.sign)
        };
        let (in_u, sign_u) = corner(corner_u);
        let (in_v, sign_v) = corner(corner_v);

        let mut rotation = self.rotations().to_vec();
        for (vert, anchor, sign) in [(u, in_u, sign_u), (v, in_v, sign_v)] {
            let rot = &mut rotation[vert];
            rot.retain(|&x| x != e);
            let pos = rot.iter().position(|&x| x == anchor).expect("anchor edge lies on the face");
            // sign +1: the walk picked the rotation successor of the anchor,
            // so the new edge goes right after it; sign -1 mirrors this
            let at = if sign == 1 { pos + 1 } else { pos };
            rot.insert(at, e);
        }
        let mut signature = (0..self.graph().edge_count()).map(|i| self.signature(i)).collect::<Vec<_>>();
        signature[e] = sign_u * sign_v;

        let out = RotationEmbedding::new(self.graph().clone(), rotation, signature)?;
        debug_assert_eq!(out.trace_faces().len(), faces.len(), "flip must preserve the face count");
        Ok(out)
    }

    /// Returns an embedding of the same graph on the same surface with a
    /// face of length exactly 4, when the embedding has any non-triangular
    /// face. Already-present 4-faces make this the identity. Implements the
    /// scheme: on a face of size >= 5, four consecutive distinct vertices
    /// `u v w x` admit flipping `ux` into the face, splitting off a 4-face.
    pub fn ensure_4face(&self) -> Result<RotationEmbedding, EmbeddingError> {
        let faces = self.trace_faces();
        if faces.iter().any(|f| f.len() == 4) {
            return Ok(self.clone());
        }
        if faces.iter().all(|f| f.len() <= 3) {
            return Err(EmbeddingError::AlreadyTriangulation);
        }
        for (idx, walk) in faces.iter().enumerate() {
            let len = walk.len();
            if len < 5 {
                continue;
            }
            for i in 0..len {
                if let Some(result) = self.try_corner_flip(walk, idx, i) {
                    debug_assert!(result.trace_faces().iter().any(|f| f.len() == 4));
                    return Ok(result);
                }
            }
        }
        Err(EmbeddingError::DegenerateWalk)
    }

    fn try_corner_flip(&self, walk: &FaceWalk, face_idx: usize, i: usize) -> Option<RotationEmbedding> {
        let len = walk.len();
        let vs: Vec<Vertex> = (0..4).map(|k| walk.steps[(i + k) % len].vertex).collect();
        let mut distinct = vs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 4 {
            return None;
        }
        let (u, x) = (vs[0], vs[3]);
        if !self.graph().has_edge(u, x) {
            return None;
        }
        self.flip_edge((u, x), face_idx, i, (i + 3) % len).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, Graph};

    /// K4 on the projective plane with the 4-face `a b c d`: the classical
    /// one-crosscap picture.
    fn k4_projective() -> RotationEmbedding {
        // brute-force a K4 embedding with euler genus 1 and a 4-face over
        // all sign patterns
        let g = complete_graph(4);
        let m = g.edge_count();
        for mask in 1u32..(1 << m) {
            let neg: Vec<(usize, usize)> = (0..m)
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| g.endpoints(i))
                .collect();
            for emb in all_rotation_embeddings(&g, &neg) {
                // the classical picture has three quadrilateral faces
                if emb.euler_genus().unwrap() == 1 && emb.face_size_multiset().get(&4) == Some(&3) {
                    return emb;
                }
            }
        }
        panic!("no projective K4 embedding with a 4-face found");
    }

    fn permutations(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permutations(items, k + 1, f);
            items.swap(k, i);
        }
    }

    /// All rotation systems of `g` with the given negative edges; test helper.
    fn all_rotation_embeddings(g: &Graph, negative: &[(usize, usize)]) -> Vec<RotationEmbedding> {
        let mut out = Vec::new();
        let rots: Vec<Vec<Vec<usize>>> = (0..g.vertex_count())
            .map(|v| {
                let inc = g.incident_edges(v);
                // fix the first incident edge, permute the rest
                let mut perms = Vec::new();
                if inc.len() <= 1 {
                    perms.push(inc.clone());
                } else {
                    let mut rest: Vec<usize> = inc[1..].to_vec();
                    permutations(&mut rest, 0, &mut |p| {
                        let mut r = vec![inc[0]];
                        r.extend_from_slice(p);
                        perms.push(r);
                    });
                }
                perms
            })
            .collect();
        let mut sig = vec![1i8; g.edge_count()];
        for &(u, v) in negative {
            sig[g.edge_id(u, v).unwrap()] = -1;
        }
        let mut pick = vec![0usize; g.vertex_count()];
        loop {
            let rotation: Vec<Vec<usize>> = pick.iter().enumerate().map(|(v, &i)| rots[v][i].clone()).collect();
            out.push(RotationEmbedding::new(g.clone(), rotation, sig.clone()).unwrap());
            let mut k = 0;
            loop {
                if k == pick.len() {
                    return out;
                }
                pick[k] += 1;
                if pick[k] < rots[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn flip_diagonal_into_quad_splits_it() {
        let emb = k4_projective();
        let faces = emb.trace_faces();
        let (quad_idx, quad) = faces.iter().enumerate().find(|(_, f)| f.len() == 4).unwrap();
        let vs = quad.vertices();
        // flip the diagonal joining walk positions 1 and 3
        let (b, d) = (vs[1], vs[3]);
        let flipped = emb.flip_edge((b, d), quad_idx, 1, 3).unwrap();
        assert_eq!(flipped.trace_faces().len(), faces.len());
        assert_eq!(flipped.euler_genus().unwrap(), 1);
        // the quad is gone: it split into two triangles while the edge's old
        // faces merged into the new 4-face
        let new_faces = flipped.trace_faces();
        assert!(new_faces.iter().any(|f| {
            f.len() == 3 && {
                let mut v = f.vertices();
                v.sort_unstable();
                v == {
                    let mut w = vec![vs[0], b, d];
                    w.sort_unstable();
                    w
                }
            }
        }));
    }

    #[test]
    fn flip_then_flip_back_is_identity() {
        let emb = k4_projective();
        let faces = emb.trace_faces();
        let (quad_idx, quad) = faces.iter().enumerate().find(|(_, f)| f.len() == 4).unwrap();
        let vs = quad.vertices();
        let (b, d) = (vs[1], vs[3]);
        let flipped = emb.flip_edge((b, d), quad_idx, 1, 3).unwrap();

        // find the merged face in the flipped embedding: the face containing
        // b and d that is not incident to bd
        let new_faces = flipped.trace_faces();
        let e = flipped.graph().edge_id(b, d).unwrap();
        let (back_idx, back_face) = new_faces
            .iter()
            .enumerate()
            .find(|(_, f)| !f.contains_edge(e) && !f.corners_of(b).is_empty() && !f.corners_of(d).is_empty())
            .expect("merged face exists");
        let cb = back_face.corners_of(b)[0];
        let cd = back_face.corners_of(d)[0];
        let restored = flipped.flip_edge((b, d), back_idx, cb, cd).unwrap();
        assert_eq!(restored, emb);
    }

    #[test]
    fn flip_rejections() {
        let emb = k4_projective();
        let faces = emb.trace_faces();
        let (quad_idx, quad) = faces.iter().enumerate().find(|(_, f)| f.len() == 4).unwrap();
        let vs = quad.vertices();
        // boundary edges of the quad are incident to it
        assert!(matches!(
            emb.flip_edge((vs[0], vs[1]), quad_idx, 0, 1),
            Err(EmbeddingError::FaceIncidentToEdge)
        ));
        // non-edges are rejected
        let g5 = complete_graph(5).without_edges(&[(0, 1)]).unwrap();
        let e5 = RotationEmbedding::with_sorted_rotations(g5);
        assert!(matches!(
            e5.flip_edge((0, 1), 0, 0, 0),
            Err(EmbeddingError::NoSuchEdge { u: 0, v: 1 })
        ));
        // bad corner index
        assert!(matches!(
            emb.flip_edge((vs[1], vs[3]), quad_idx, 0, 3),
            Err(EmbeddingError::BadCorner { .. })
        ));
    }

    #[test]
    fn ensure_4face_identity_when_quad_present() {
        let emb = k4_projective();
        let out = emb.ensure_4face().unwrap();
        assert_eq!(out, emb);
    }

    #[test]
    fn ensure_4face_on_triangulation_errors() {
        // tetrahedron has only triangles
        let g = complete_graph(4);
        let emb = RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
            &[],
        )
        .unwrap();
        assert!(matches!(emb.ensure_4face(), Err(EmbeddingError::AlreadyTriangulation)));
    }

    #[test]
    fn ensure_4face_degenerate_triangle_walk() {
        // K3 embedded with a single hexagonal face: every run of four
        // consecutive vertices repeats, so no flip applies
        let g = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let emb = RotationEmbedding::from_neighbor_orders(
            g,
            &[vec![1, 2], vec![0, 2], vec![0, 1]],
            &[(1, 2)],
        )
        .unwrap();
        assert_eq!(emb.trace_faces().len(), 1);
        assert!(matches!(emb.ensure_4face(), Err(EmbeddingError::DegenerateWalk)));
    }
}
