//! Canonical labeling for small graphs via equitable partition refinement
//! with individualization backtracking. Isomorphic graphs map to the same
//! canonical form; intended for deduplication in small censuses, not for
//! large-scale isomorphism work.

use super::{Edge, Graph, Vertex};
use crate::error::GraphError;

/// Default vertex bound for canonical labeling.
pub const DEFAULT_CANON_BOUND: usize = 10;

/// The canonical representative of an isomorphism class: the relabeled,
/// sorted edge list. Two graphs are isomorphic iff their forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<Edge>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("canonical form is a valid graph")
    }

    /// Canonical graph6 string, usable as a census line key.
    pub fn to_graph6(&self) -> String {
        super::to_graph6(&self.to_graph())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm, GraphError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(GraphError::CanonicalBoundExceeded { n, max: bound });
    }
    if n == 0 {
        return Ok(CanonicalForm { n: 0, edges: vec![] });
    }
    let mut searcher = Searcher { g, n, best: None };
    let initial = refine(g, degree_partition(g));
    searcher.descend(initial, &[]);
    let perm = searcher.best.expect("search always reaches a leaf").1;
    // perm[i] = original vertex placed at canonical position i
    let mut new_id = vec![0usize; n];
    for (pos, &v) in perm.iter().enumerate() {
        new_id[v] = pos;
    }
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (new_id[u], new_id[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Ok(CanonicalForm { n, edges })
}

type Partition = Vec<Vec<Vertex>>;

fn degree_partition(g: &Graph) -> Partition {
    let n = g.vertex_count();
    let mut by_deg: std::collections::BTreeMap<usize, Vec<Vertex>> = Default::default();
    for v in 0..n {
        by_deg.entry(g.degree(v)).or_default().push(v);
    }
    by_deg.into_values().collect()
}

/// Refines to an equitable partition: every vertex in a cell has the same
/// number of neighbors in every cell. Cell order is deterministic.
fn refine(g: &Graph, mut part: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature: neighbor counts towards every current cell
            let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<Vertex>> = Default::default();
            for &v in cell {
                let sig: Vec<usize> = part
                    .iter()
                    .map(|c| c.iter().filter(|&&u| g.has_edge(u, v)).count())
                    .collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        part = next;
        if !changed {
            return part;
        }
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    /// best (rows, permutation) found so far; rows are compared
    /// lexicographically and minimized
    best: Option<(Vec<u64>, Vec<Vertex>)>,
}

impl Searcher<'_> {
    /// `prefix_rows` are the adjacency rows of the leading singleton run,
    /// already verified to be no worse than the best.
    fn descend(&mut self, part: Partition, prefix_rows: &[u64]) {
        // extend the fixed prefix as far as the leading singletons go
        let placed: Vec<Vertex> = part.iter().take_while(|c| c.len() == 1).map(|c| c[0]).collect();
        let mut rows: Vec<u64> = prefix_rows.to_vec();
        for i in rows.len()..placed.len() {
            let mut row = 0u64;
            for (j, &u) in placed[..i].iter().enumerate() {
                if self.g.has_edge(placed[i], u) {
                    row |= 1 << j;
                }
            }
            rows.push(row);
        }
        if let Some((best_rows, _)) = &self.best {
            match rows.as_slice().cmp(&best_rows[..rows.len()]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less | std::cmp::Ordering::Equal => {}
            }
        }
        if placed.len() == self.n {
            match &self.best {
                Some((best_rows, _)) if rows >= *best_rows => {}
                _ => self.best = Some((rows, placed)),
            }
            return;
        }
        // branch on each vertex of the first non-singleton cell, which sits
        // right after the leading singleton run
        let target = placed.len();
        let cell = part[target].clone();
        debug_assert!(cell.len() > 1);
        for &v in &cell {
            let mut split: Partition = Vec::with_capacity(part.len() + 1);
            for (i, c) in part.iter().enumerate() {
                if i == target {
                    split.push(vec![v]);
                    split.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    split.push(c.clone());
                }
            }
            self.descend(refine(self.g, split), &rows);
        }
    }
}
