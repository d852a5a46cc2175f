//! Exhaustive, budgeted genus search.
//!
//! Decisions are three-valued: embeddable with a re-verified witness,
//! not-embeddable backed by an exhausted search tree, or unknown when a
//! budget ran out. Timeouts are never promoted to negative answers.

mod engine;

use crate::embedding::{RotationEmbedding, SurfaceSpec};
use crate::error::SearchError;
use crate::graph::Graph;
use engine::{Engine, EngineSpec, Goal, LeafFlow, LeafView, RunStatus, Shared};
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Limits for one search call.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Duration,
    pub workers: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 100_000_000, time_limit: Duration::from_secs(60), workers: 1 }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, time_limit: Duration, workers: usize) -> Self {
        assert!(max_nodes > 0 && workers > 0 && time_limit > Duration::ZERO);
        SearchBudget { max_nodes, time_limit, workers }
    }

    /// A budget large enough that small fixture searches never hit it.
    pub fn generous() -> Self {
        SearchBudget { max_nodes: u64::MAX / 2, time_limit: Duration::from_secs(6 * 3600), workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// Evidence that a search ran to completion without finding anything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustionProof {
    pub nodes_expanded: u64,
}

/// Outcome of an embeddability decision.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Embeddable { witness: Box<RotationEmbedding>, nodes_expanded: u64 },
    NotEmbeddable { proof: ExhaustionProof },
    Unknown { nodes_expanded: u64 },
}

impl SearchOutcome {
    pub fn is_embeddable(&self) -> bool {
        matches!(self, SearchOutcome::Embeddable { .. })
    }

    pub fn is_not_embeddable(&self) -> bool {
        matches!(self, SearchOutcome::NotEmbeddable { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, SearchOutcome::Unknown { .. })
    }

    pub fn witness(&self) -> Option<&RotationEmbedding> {
        match self {
            SearchOutcome::Embeddable { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Outcome of a minimum-genus sweep.
#[derive(Debug, Clone)]
pub enum GenusOutcome {
    Known { genus: usize, witness: Box<RotationEmbedding>, nodes_expanded: u64 },
    /// the budget ran out; the genus is at least `lower_bound`
    Unknown { lower_bound: usize, nodes_expanded: u64 },
}

impl GenusOutcome {
    pub fn genus(&self) -> Option<usize> {
        match self {
            GenusOutcome::Known { genus, .. } => Some(*genus),
            GenusOutcome::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&RotationEmbedding> {
        match self {
            GenusOutcome::Known { witness, .. } => Some(witness),
            GenusOutcome::Unknown { .. } => None,
        }
    }
}

/// Outcome of a minimum-Euler-genus computation.
#[derive(Debug, Clone)]
pub enum EulerGenusOutcome {
    Known { euler_genus: usize, witness: Box<RotationEmbedding> },
    Unknown { lower_bound: usize },
}

impl EulerGenusOutcome {
    pub fn euler_genus(&self) -> Option<usize> {
        match self {
            EulerGenusOutcome::Known { euler_genus, .. } => Some(*euler_genus),
            EulerGenusOutcome::Unknown { .. } => None,
        }
    }
}

/// Result of enumerating all embeddings on an exact surface.
#[derive(Debug, Clone, Copy)]
pub struct EnumerationOutcome {
    pub visited: u64,
    /// false when the budget stopped the enumeration early
    pub complete: bool,
}

/// Result of checking a predicate over all embeddings on a surface.
#[derive(Debug)]
pub enum Satisfaction {
    Holds { embeddings_checked: u64 },
    Counterexample(Box<RotationEmbedding>),
    Unknown { embeddings_checked: u64 },
}

fn check_searchable(g: &Graph) -> Result<(), SearchError> {
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    if g.vertex_count() > 12 || g.edge_count() > 36 {
        return Err(SearchError::TooLarge {
            reason: format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
        });
    }
    Ok(())
}

/// Lower bound on the Euler genus from the triangulation edge count.
pub fn euler_genus_lower_bound(g: &Graph) -> usize {
    if g.vertex_count() < 3 {
        return 0;
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let raw = m - 3 * n + 6;
    if raw <= 0 {
        0
    } else {
        ((raw + 2) / 3) as usize
    }
}

struct DecideResult {
    found: Option<RotationEmbedding>,
    complete: bool,
    nodes: u64,
}

/// Runs the engine over the whole tree, splitting the root-rotation choices
/// across workers. The first witness in root-choice order wins, so a
/// one-worker run is fully deterministic.
fn run_decide(g: &Graph, spec: EngineSpec, budget: SearchBudget) -> DecideResult {
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let deadline = Instant::now() + budget.time_limit;
    let shared = Shared { nodes: &nodes, abort: &abort, max_nodes: budget.max_nodes, deadline };

    let workers = budget.workers.min(Engine::root_choices(g).max(1) as usize).max(1);
    if workers == 1 {
        let mut found = None;
        let mut engine = Engine::new(g, spec);
        let status = engine.run(&shared, 0, 1, &mut |leaf: LeafView<'_>| {
            found = Some(build_embedding(g, &leaf));
            LeafFlow::Stop
        });
        let complete = status == RunStatus::Complete || (found.is_some() && status == RunStatus::Stopped);
        return DecideResult { found, complete, nodes: nodes.load(Ordering::Relaxed) };
    }

    let results: Mutex<Vec<(usize, RotationEmbedding)>> = Mutex::new(Vec::new());
    let statuses: Mutex<Vec<RunStatus>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for w in 0..workers {
            let shared = &shared;
            let results = &results;
            let statuses = &statuses;
            let abort = &abort;
            scope.spawn(move || {
                let mut engine = Engine::new(g, spec);
                let mut local: Option<RotationEmbedding> = None;
                let status = engine.run(shared, w as u64, workers as u64, &mut |leaf: LeafView<'_>| {
                    local = Some(build_embedding(g, &leaf));
                    LeafFlow::Stop
                });
                if let Some(emb) = local {
                    results.lock().unwrap().push((w, emb));
                    abort.store(true, Ordering::Relaxed);
                }
                statuses.lock().unwrap().push(status);
            });
        }
    });
    let mut found_list = results.into_inner().unwrap();
    found_list.sort_by_key(|(w, _)| *w);
    let found = found_list.into_iter().next().map(|(_, e)| e);
    let statuses = statuses.into_inner().unwrap();
    let complete = found.is_some() || statuses.iter().all(|&s| s == RunStatus::Complete);
    DecideResult { found, complete, nodes: nodes.load(Ordering::Relaxed) }
}

fn build_embedding(g: &Graph, leaf: &LeafView<'_>) -> RotationEmbedding {
    let signature: Vec<i8> = leaf.lambda.to_vec();
    RotationEmbedding::new(g.clone(), leaf.rotations.to_vec(), signature)
        .expect("engine leaves are valid embeddings")
}

/// Trivial embedding for graphs the engine does not handle (no edges).
fn trivial_embedding(g: &Graph) -> RotationEmbedding {
    RotationEmbedding::with_sorted_rotations(g.clone())
}

/// Decides whether `g` embeds on the surface `s`.
///
/// Orientable targets search all-positive rotation systems; nonorientable
/// targets additionally branch on signatures and accept only witnesses with
/// an essential negative cycle. Witnesses are re-validated by the reference
/// face tracer before being returned.
pub fn embeds_on(g: &Graph, s: SurfaceSpec, budget: SearchBudget) -> Result<SearchOutcome, SearchError> {
    check_searchable(g)?;
    let target = s.euler_genus();

    if g.edge_count() == 0 || (!s.is_orientable() && g.is_forest()) {
        // forests have no unbalanced rotation system; they embed in every
        // surface, albeit not 2-cellularly, so return the planar witness
        let witness = trivial_embedding(g);
        return Ok(SearchOutcome::Embeddable { witness: Box::new(witness), nodes_expanded: 0 });
    }
    if euler_genus_lower_bound(g) > target {
        return Ok(SearchOutcome::NotEmbeddable { proof: ExhaustionProof { nodes_expanded: 0 } });
    }

    let spec = EngineSpec {
        signed: !s.is_orientable(),
        require_negative: !s.is_orientable(),
        goal: Goal::AtMost(target as i64),
    };
    let res = run_decide(g, spec, budget);
    if let Some(witness) = res.found {
        let surf = witness.surface()?;
        assert!(
            surf.euler_genus() <= target && (!s.is_orientable() || surf.is_orientable()),
            "witness re-validation failed: engine and tracer disagree"
        );
        return Ok(SearchOutcome::Embeddable { witness: Box::new(witness), nodes_expanded: res.nodes });
    }
    if res.complete {
        Ok(SearchOutcome::NotEmbeddable { proof: ExhaustionProof { nodes_expanded: res.nodes } })
    } else {
        Ok(SearchOutcome::Unknown { nodes_expanded: res.nodes })
    }
}

/// Minimum orientable genus by an increasing sweep of [`embeds_on`].
pub fn min_orientable_genus(g: &Graph, budget: SearchBudget) -> Result<GenusOutcome, SearchError> {
    check_searchable(g)?;
    let mut total_nodes = 0;
    let mut genus = euler_genus_lower_bound(g).div_ceil(2);
    loop {
        match embeds_on(g, SurfaceSpec::orientable(genus), budget)? {
            SearchOutcome::Embeddable { witness, nodes_expanded } => {
                return Ok(GenusOutcome::Known { genus, witness, nodes_expanded: total_nodes + nodes_expanded });
            }
            SearchOutcome::NotEmbeddable { proof } => {
                total_nodes += proof.nodes_expanded;
                genus += 1;
            }
            SearchOutcome::Unknown { nodes_expanded } => {
                return Ok(GenusOutcome::Unknown { lower_bound: genus, nodes_expanded: total_nodes + nodes_expanded });
            }
        }
    }
}

/// Minimum nonorientable genus. For forests this is 1 by convention (the
/// embedding in the projective plane is not 2-cell); the witness returned
/// is the planar one.
pub fn min_nonorientable_genus(g: &Graph, budget: SearchBudget) -> Result<GenusOutcome, SearchError> {
    check_searchable(g)?;
    if g.is_forest() {
        return Ok(GenusOutcome::Known { genus: 1, witness: Box::new(trivial_embedding(g)), nodes_expanded: 0 });
    }
    let mut total_nodes = 0;
    let mut genus = euler_genus_lower_bound(g).max(1);
    loop {
        let s = SurfaceSpec::nonorientable(genus).expect("genus >= 1");
        match embeds_on(g, s, budget)? {
            SearchOutcome::Embeddable { witness, nodes_expanded } => {
                return Ok(GenusOutcome::Known { genus, witness, nodes_expanded: total_nodes + nodes_expanded });
            }
            SearchOutcome::NotEmbeddable { proof } => {
                total_nodes += proof.nodes_expanded;
                genus += 1;
            }
            SearchOutcome::Unknown { nodes_expanded } => {
                return Ok(GenusOutcome::Unknown { lower_bound: genus, nodes_expanded: total_nodes + nodes_expanded });
            }
        }
    }
}

/// Minimum Euler genus: `min(2 * orientable genus, nonorientable genus)`.
pub fn min_euler_genus(g: &Graph, budget: SearchBudget) -> Result<EulerGenusOutcome, SearchError> {
    let orient = min_orientable_genus(g, budget)?;
    if let GenusOutcome::Known { genus: 0, witness, .. } = orient {
        // planar graphs have Euler genus 0; no nonorientable sweep needed
        return Ok(EulerGenusOutcome::Known { euler_genus: 0, witness });
    }
    let nonorient = min_nonorientable_genus(g, budget)?;
    match (orient, nonorient) {
        (GenusOutcome::Known { genus: go, witness: wo, .. }, GenusOutcome::Known { genus: gn, witness: wn, .. }) => {
            if 2 * go <= gn {
                Ok(EulerGenusOutcome::Known { euler_genus: 2 * go, witness: wo })
            } else {
                Ok(EulerGenusOutcome::Known { euler_genus: gn, witness: wn })
            }
        }
        (GenusOutcome::Known { genus: go, witness, .. }, GenusOutcome::Unknown { lower_bound, .. }) => {
            if 2 * go <= lower_bound {
                Ok(EulerGenusOutcome::Known { euler_genus: 2 * go, witness })
            } else {
                Ok(EulerGenusOutcome::Unknown { lower_bound })
            }
        }
        (GenusOutcome::Unknown { lower_bound, .. }, GenusOutcome::Known { genus: gn, witness, .. }) => {
            if gn <= 2 * lower_bound {
                Ok(EulerGenusOutcome::Known { euler_genus: gn, witness })
            } else {
                Ok(EulerGenusOutcome::Unknown { lower_bound: (2 * lower_bound).min(gn) })
            }
        }
        (GenusOutcome::Unknown { lower_bound: lo, .. }, GenusOutcome::Unknown { lower_bound: ln, .. }) => {
            Ok(EulerGenusOutcome::Unknown { lower_bound: (2 * lo).min(ln) })
        }
    }
}

/// Sum of component Euler genera; the Euler genus is additive over
/// components, so this doubles as an independent lower-bound oracle for
/// graphs built by gluing disjoint parts.
pub fn min_euler_genus_of_components(g: &Graph, budget: SearchBudget) -> Result<EulerGenusOutcome, SearchError> {
    let mut total = 0usize;
    let mut lower = 0usize;
    let mut unknown = false;
    let mut witness: Option<Box<RotationEmbedding>> = None;
    for comp in g.components() {
        let sub = g.induced(&comp)?;
        match min_euler_genus(&sub, budget)? {
            EulerGenusOutcome::Known { euler_genus, witness: w } => {
                total += euler_genus;
                lower += euler_genus;
                if witness.is_none() {
                    witness = Some(w);
                }
            }
            EulerGenusOutcome::Unknown { lower_bound } => {
                unknown = true;
                lower += lower_bound;
            }
        }
    }
    if unknown {
        Ok(EulerGenusOutcome::Unknown { lower_bound: lower })
    } else {
        let w = witness.unwrap_or_else(|| Box::new(trivial_embedding(g)));
        Ok(EulerGenusOutcome::Known { euler_genus: total, witness: w })
    }
}

impl From<crate::error::GraphError> for SearchError {
    fn from(e: crate::error::GraphError) -> Self {
        SearchError::TooLarge { reason: e.to_string() }
    }
}

/// Visits every normalized rotation/signature tuple whose surface is
/// exactly `s`. Normalization fixes the root rotation up to reflection and
/// spanning-tree signatures to +1, so a homeomorphism class may be visited
/// through more than one tuple; coverage is what matters for the
/// all-embeddings checks. Single-threaded for reproducible visit order.
pub fn enumerate_embeddings(
    g: &Graph,
    s: SurfaceSpec,
    mut visitor: impl FnMut(&RotationEmbedding) -> ControlFlow<()>,
    budget: SearchBudget,
) -> Result<EnumerationOutcome, SearchError> {
    check_searchable(g)?;
    if g.edge_count() == 0 {
        // a single vertex: only the spherical embedding exists
        let mut visited = 0;
        if s == SurfaceSpec::sphere() {
            visited = 1;
            let _ = visitor(&trivial_embedding(g));
        }
        return Ok(EnumerationOutcome { visited, complete: true });
    }
    if !s.is_orientable() && g.is_forest() {
        // no unbalanced rotation systems exist: nothing 2-cell to visit
        return Ok(EnumerationOutcome { visited: 0, complete: true });
    }
    let target = s.euler_genus();
    if euler_genus_lower_bound(g) > target {
        return Ok(EnumerationOutcome { visited: 0, complete: true });
    }
    let spec = EngineSpec {
        signed: !s.is_orientable(),
        require_negative: !s.is_orientable(),
        goal: Goal::Exactly(target as i64),
    };
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let deadline = Instant::now() + budget.time_limit;
    let shared = Shared { nodes: &nodes, abort: &abort, max_nodes: budget.max_nodes, deadline };
    let mut engine = Engine::new(g, spec);
    let mut visited = 0u64;
    let mut stopped_by_visitor = false;
    let status = engine.run(&shared, 0, 1, &mut |leaf: LeafView<'_>| {
        let emb = build_embedding(g, &leaf);
        debug_assert_eq!(emb.euler_genus().expect("connected") as i64, leaf.eg);
        visited += 1;
        match visitor(&emb) {
            ControlFlow::Continue(()) => LeafFlow::Continue,
            ControlFlow::Break(()) => {
                stopped_by_visitor = true;
                LeafFlow::Stop
            }
        }
    });
    Ok(EnumerationOutcome {
        visited,
        complete: status == RunStatus::Complete || stopped_by_visitor,
    })
}

/// Checks `predicate` on every embedding of `g` whose surface is exactly
/// `s`, stopping at the first counterexample.
pub fn all_embeddings_satisfy(
    g: &Graph,
    s: SurfaceSpec,
    mut predicate: impl FnMut(&RotationEmbedding) -> bool,
    budget: SearchBudget,
) -> Result<Satisfaction, SearchError> {
    let mut counterexample: Option<RotationEmbedding> = None;
    let outcome = enumerate_embeddings(
        g,
        s,
        |emb| {
            if predicate(emb) {
                ControlFlow::Continue(())
            } else {
                counterexample = Some(emb.clone());
                ControlFlow::Break(())
            }
        },
        budget,
    )?;
    if let Some(c) = counterexample {
        return Ok(Satisfaction::Counterexample(Box::new(c)));
    }
    if outcome.complete {
        Ok(Satisfaction::Holds { embeddings_checked: outcome.visited })
    } else {
        Ok(Satisfaction::Unknown { embeddings_checked: outcome.visited })
    }
}

/// Convenience wrapper: does any embedding of `g` land exactly on `s`?
pub fn exists_embedding_on_exact_surface(
    g: &Graph,
    s: SurfaceSpec,
    budget: SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    let mut witness: Option<RotationEmbedding> = None;
    let outcome = enumerate_embeddings(
        g,
        s,
        |emb| {
            witness = Some(emb.clone());
            ControlFlow::Break(())
        },
        budget,
    )?;
    if let Some(w) = witness {
        return Ok(SearchOutcome::Embeddable { witness: Box::new(w), nodes_expanded: 0 });
    }
    if outcome.complete {
        Ok(SearchOutcome::NotEmbeddable { proof: ExhaustionProof { nodes_expanded: 0 } })
    } else {
        Ok(SearchOutcome::Unknown { nodes_expanded: 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, Graph};

    fn quick() -> SearchBudget {
        SearchBudget::new(50_000_000, Duration::from_secs(120), 1)
    }

    #[test]
    fn k5_not_planar_but_toroidal() {
        let k5 = complete_graph(5);
        assert!(embeds_on(&k5, SurfaceSpec::sphere(), quick()).unwrap().is_not_embeddable());
        let out = embeds_on(&k5, SurfaceSpec::torus(), quick()).unwrap();
        let w = out.witness().expect("K5 embeds on the torus");
        assert_eq!(w.surface().unwrap(), SurfaceSpec::torus());
        assert!(matches!(
            min_orientable_genus(&k5, quick()).unwrap(),
            GenusOutcome::Known { genus: 1, .. }
        ));
    }

    #[test]
    fn k4_planar_and_k33_genus() {
        let k4 = complete_graph(4);
        let out = embeds_on(&k4, SurfaceSpec::sphere(), quick()).unwrap();
        assert!(out.is_embeddable());
        let k33 = Graph::new(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(matches!(
            min_orientable_genus(&k33, quick()).unwrap(),
            GenusOutcome::Known { genus: 1, .. }
        ));
        assert!(matches!(
            min_nonorientable_genus(&k33, quick()).unwrap(),
            GenusOutcome::Known { genus: 1, .. }
        ));
    }

    #[test]
    fn k6_genera() {
        let k6 = complete_graph(6);
        assert_eq!(min_orientable_genus(&k6, quick()).unwrap().genus(), Some(1));
        assert_eq!(min_nonorientable_genus(&k6, quick()).unwrap().genus(), Some(1));
        match min_euler_genus(&k6, quick()).unwrap() {
            EulerGenusOutcome::Known { euler_genus, .. } => assert_eq!(euler_genus, 1),
            other => panic!("expected known genus, got {other:?}"),
        }
    }

    #[test]
    fn trees_and_cycles() {
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(min_orientable_genus(&tree, quick()).unwrap().genus(), Some(0));
        assert_eq!(min_nonorientable_genus(&tree, quick()).unwrap().genus(), Some(1));
        assert_eq!(
            min_euler_genus(&tree, quick()).unwrap().euler_genus(),
            Some(0)
        );
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(min_orientable_genus(&c5, quick()).unwrap().genus(), Some(0));
        assert_eq!(min_nonorientable_genus(&c5, quick()).unwrap().genus(), Some(1));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(embeds_on(&g, SurfaceSpec::sphere(), quick()), Err(SearchError::Disconnected)));
        let comp = min_euler_genus_of_components(&g, quick()).unwrap();
        assert_eq!(comp.euler_genus(), Some(0));
    }

    #[test]
    fn k4_sphere_enumeration_is_all_triangles() {
        let k4 = complete_graph(4);
        let mut count = 0u64;
        let out = enumerate_embeddings(
            &k4,
            SurfaceSpec::sphere(),
            |emb| {
                count += 1;
                assert_eq!(emb.face_size_multiset().get(&3), Some(&4));
                ControlFlow::Continue(())
            },
            quick(),
        )
        .unwrap();
        assert!(out.complete);
        assert_eq!(out.visited, count);
        assert!(count > 0);
        // tetrahedron counterexample for "has a 4-face"
        match all_embeddings_satisfy(&k4, SurfaceSpec::sphere(), |e| e.face_size_multiset().contains_key(&4), quick()).unwrap() {
            Satisfaction::Counterexample(_) => {}
            other => panic!("expected counterexample, got {other:?}"),
        }
    }

    #[test]
    fn k5_torus_enumeration_euler_formula() {
        let k5 = complete_graph(5);
        let out = all_embeddings_satisfy(
            &k5,
            SurfaceSpec::torus(),
            |emb| emb.trace_faces().len() == 5,
            quick(),
        )
        .unwrap();
        match out {
            Satisfaction::Holds { embeddings_checked } => assert!(embeddings_checked > 0),
            other => panic!("expected holds, got {other:?}"),
        }
    }

    #[test]
    fn unknown_on_tiny_budget() {
        let k7 = complete_graph(7);
        let tiny = SearchBudget::new(50, Duration::from_secs(60), 1);
        let out = embeds_on(&k7, SurfaceSpec::torus(), tiny).unwrap();
        assert!(out.is_unknown(), "a 50-node budget cannot settle K7 on the torus");
    }

    #[test]
    fn single_worker_determinism() {
        let k5 = complete_graph(5);
        let a = embeds_on(&k5, SurfaceSpec::torus(), quick()).unwrap();
        let b = embeds_on(&k5, SurfaceSpec::torus(), quick()).unwrap();
        match (a, b) {
            (SearchOutcome::Embeddable { witness: wa, .. }, SearchOutcome::Embeddable { witness: wb, .. }) => {
                assert_eq!(wa, wb);
            }
            _ => panic!("expected embeddable twice"),
        }
    }

    #[test]
    fn multi_worker_agrees_on_decision() {
        let k5 = complete_graph(5);
        let multi = quick().with_workers(4);
        assert!(embeds_on(&k5, SurfaceSpec::torus(), multi).unwrap().is_embeddable());
        assert!(embeds_on(&k5, SurfaceSpec::sphere(), multi).unwrap().is_not_embeddable());
    }

    #[test]
    fn monotone_in_genus() {
        let k5 = complete_graph(5);
        for g in 1..3 {
            assert!(embeds_on(&k5, SurfaceSpec::orientable(g), quick()).unwrap().is_embeddable());
        }
        for k in 1..3 {
            assert!(embeds_on(&k5, SurfaceSpec::nonorientable(k).unwrap(), quick())
                .unwrap()
                .is_embeddable());
        }
    }
}
