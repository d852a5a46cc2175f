//! Backtracking core for exhaustive embedding search.
//!
//! Rotations are assigned vertex by vertex. Face tracing runs incrementally:
//! every tracing state whose transition is fully determined gets linked to
//! its successor, chains of linked states merge, and chains closing into
//! orbits count as faces. The branch bound combines the closed-orbit count
//! with a cap on how many faces the remaining states can still form; a
//! branch dies as soon as the implied Euler genus exceeds the target.
//!
//! Symmetry reduction: the rotation of the first (maximum-degree) vertex is
//! enumerated up to cyclic rotation and reflection, and spanning-tree edges
//! carry signature +1. Signatures of the remaining edges are branched on
//! lazily, at the moment the first tracing state needs them.

use crate::graph::{EdgeId, Graph, Vertex};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

const INVALID: u16 = u16::MAX;

/// Search acceptance condition on the Euler genus of completed embeddings.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Goal {
    AtMost(i64),
    Exactly(i64),
}

impl Goal {
    fn limit(self) -> i64 {
        match self {
            Goal::AtMost(x) | Goal::Exactly(x) => x,
        }
    }

    fn accepts(self, eg: i64) -> bool {
        match self {
            Goal::AtMost(x) => eg <= x,
            Goal::Exactly(x) => eg == x,
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) struct EngineSpec {
    /// enumerate signatures (nonorientable search) instead of all-positive
    pub signed: bool,
    /// completed embeddings must have a negative edge (unbalanced signature)
    pub require_negative: bool,
    pub goal: Goal,
}

/// Budget and cross-worker coordination handles.
pub(crate) struct Shared<'a> {
    pub nodes: &'a AtomicU64,
    pub abort: &'a AtomicBool,
    pub max_nodes: u64,
    pub deadline: Instant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RunStatus {
    /// subtree fully explored
    Complete,
    /// a sink asked to stop, or another worker aborted the search
    Stopped,
    /// node or time budget ran out
    OutOfBudget,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Budget,
}

pub(crate) enum LeafFlow {
    Continue,
    Stop,
}

/// A completed assignment, exposed to the leaf sink.
pub(crate) struct LeafView<'a> {
    pub eg: i64,
    pub rotations: &'a [Vec<EdgeId>],
    pub lambda: &'a [i8],
}

#[derive(Clone, Copy)]
enum Task {
    /// link the given tracing state (a state whose head is the vertex being
    /// assigned)
    Link { state: u16 },
    /// decide the signature of a co-tree back edge and link the two states
    /// at its earlier endpoint that were stalled on it
    BackEdge { edge: u16 },
}

enum TrailOp {
    Lambda(u16),
    Close { a: u16, len: u16 },
    Merge { a: u16, h: u16, t_b: u16, l_a: u16, l_b: u16 },
}

pub(crate) struct Engine<'a> {
    g: &'a Graph,
    spec: EngineSpec,
    nv: i64,
    ne: i64,
    states: usize,
    den: u32,

    order: Vec<Vertex>,
    inc: Vec<Vec<EdgeId>>,
    local: Vec<Vec<u8>>,
    tasks: Vec<Vec<Task>>,

    assigned: Vec<bool>,
    rot_order: Vec<Vec<EdgeId>>,
    rot_succ: Vec<Vec<EdgeId>>,
    rot_pred: Vec<Vec<EdgeId>>,
    lambda: Vec<i8>,
    perm_scratch: Vec<Vec<EdgeId>>,

    succ: Vec<u16>,
    chain_head: Vec<u16>,
    chain_tail: Vec<u16>,
    chain_len: Vec<u16>,
    closed: u32,
    closed_states: u32,
    cnt_big: u32,
    small_states: u32,
    trail: Vec<TrailOp>,

    v0_offset: u64,
    v0_stride: u64,
    local_nodes: u64,
}

impl<'a> Engine<'a> {
    pub fn new(g: &'a Graph, spec: EngineSpec) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        assert!(n >= 2 && m >= 1, "engine expects a graph with an edge");
        assert!(m <= 36, "exhaustive search is limited to 36 edges");

        // assignment order: max degree first, then most assigned neighbors
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let first = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        order.push(first);
        placed[first] = true;
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = g.neighbors(v).filter(|&u| placed[u]).count();
                    (back, g.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            order.push(next);
            placed[next] = true;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }

        // spanning tree: each vertex after the first hooks to its earliest
        // assigned neighbor; tree edges are signature +1 from the start
        let mut is_tree = vec![false; m];
        for (i, &v) in order.iter().enumerate().skip(1) {
            let parent = g
                .neighbors(v)
                .filter(|&u| pos[u] < i)
                .min_by_key(|&u| pos[u])
                .expect("connected graph");
            is_tree[g.edge_id(v, parent).unwrap()] = true;
        }

        let inc: Vec<Vec<EdgeId>> = (0..n).map(|v| g.incident_edges(v)).collect();
        let mut local = vec![vec![u8::MAX; m]; n];
        for v in 0..n {
            for (i, &e) in inc[v].iter().enumerate() {
                local[v][e] = i as u8;
            }
        }

        // per-step task lists
        let signed = spec.signed;
        let mut tasks: Vec<Vec<Task>> = Vec::with_capacity(n);
        for (i, &v) in order.iter().enumerate() {
            let mut list = Vec::new();
            for &e in &inc[v] {
                let (lo, _) = g.endpoints(e);
                let arc = (e << 1) | usize::from(v == lo);
                if signed {
                    list.push(Task::Link { state: (arc << 1) as u16 });
                    list.push(Task::Link { state: ((arc << 1) | 1) as u16 });
                } else {
                    list.push(Task::Link { state: arc as u16 });
                }
            }
            if signed {
                for &e in &inc[v] {
                    let w = g.other_endpoint(e, v);
                    if !is_tree[e] && pos[w] < i {
                        list.push(Task::BackEdge { edge: e as u16 });
                    }
                }
            }
            tasks.push(list);
        }

        let states = if signed { 4 * m } else { 2 * m };
        let den = if g.min_degree() >= 2 { 3 } else { 2 };
        let mut lambda = vec![0i8; m];
        if !signed {
            lambda.fill(1);
        } else {
            for e in 0..m {
                if is_tree[e] {
                    lambda[e] = 1;
                }
            }
        }

        Engine {
            g,
            spec,
            nv: n as i64,
            ne: m as i64,
            states,
            den,
            perm_scratch: inc.iter().map(|i| i[1..].to_vec()).collect(),
            inc,
            local,
            tasks,
            assigned: vec![false; n],
            rot_order: vec![Vec::new(); n],
            rot_succ: vec![Vec::new(); n],
            rot_pred: vec![Vec::new(); n],
            lambda,
            order,
            succ: vec![INVALID; states],
            chain_head: (0..states as u16).collect(),
            chain_tail: (0..states as u16).collect(),
            chain_len: vec![1; states],
            closed: 0,
            closed_states: 0,
            cnt_big: 0,
            small_states: states as u32,
            trail: Vec::with_capacity(4 * states),
            v0_offset: 0,
            v0_stride: 1,
            local_nodes: 0,
        }
    }

    /// Number of rotation choices at the root vertex after symmetry
    /// reduction; used to size worker partitions.
    pub fn root_choices(g: &Graph) -> u64 {
        let d = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0);
        if d <= 2 {
            1
        } else {
            let fact: u64 = (1..=(d as u64 - 1)).product();
            fact / 2
        }
    }

    /// Runs the search over the subtree of root-rotation indices congruent
    /// to `offset` mod `stride`.
    pub fn run(
        &mut self,
        shared: &Shared<'_>,
        offset: u64,
        stride: u64,
        sink: &mut dyn FnMut(LeafView<'_>) -> LeafFlow,
    ) -> RunStatus {
        self.v0_offset = offset;
        self.v0_stride = stride.max(1);
        if self.prune() {
            return RunStatus::Complete;
        }
        match self.step(0, shared, sink) {
            Flow::Continue => RunStatus::Complete,
            Flow::Stop => RunStatus::Stopped,
            Flow::Budget => RunStatus::OutOfBudget,
        }
    }

    fn charge(&mut self, shared: &Shared<'_>) -> bool {
        self.local_nodes += 1;
        let total = shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if total > shared.max_nodes {
            return false;
        }
        if self.local_nodes % 4096 == 0 {
            if Instant::now() > shared.deadline {
                return false;
            }
        }
        true
    }

    fn aborted(&self, shared: &Shared<'_>) -> bool {
        self.local_nodes % 512 == 0 && shared.abort.load(Ordering::Relaxed)
    }

    fn step(&mut self, t: usize, shared: &Shared<'_>, sink: &mut dyn FnMut(LeafView<'_>) -> LeafFlow) -> Flow {
        let v = self.order[t];
        let anchor = self.inc[v][0];
        let d = self.inc[v].len();
        // reset the scratch to the lexicographically first permutation
        let mut rest = std::mem::take(&mut self.perm_scratch[v]);
        rest.copy_from_slice(&self.inc[v][1..]);
        let mut accepted: u64 = 0;
        let mut flow = Flow::Continue;
        loop {
            // the root rotation is taken up to reflection: keep one of each
            // reversed pair
            let skip = t == 0 && d >= 3 && rest[0] > rest[d - 2];
            if !skip {
                let mine = t != 0 || accepted % self.v0_stride == self.v0_offset;
                accepted += 1;
                if mine {
                    if !self.charge(shared) {
                        flow = Flow::Budget;
                        break;
                    }
                    if self.aborted(shared) {
                        flow = Flow::Stop;
                        break;
                    }
                    self.apply_rotation(v, anchor, &rest);
                    self.assigned[v] = true;
                    let mark = self.trail.len();
                    let f = self.process(t, 0, shared, sink);
                    self.rewind(mark);
                    self.assigned[v] = false;
                    if !matches!(f, Flow::Continue) {
                        flow = f;
                        break;
                    }
                }
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
        self.perm_scratch[v] = rest;
        flow
    }

    fn apply_rotation(&mut self, v: Vertex, anchor: EdgeId, rest: &[EdgeId]) {
        let d = rest.len() + 1;
        let order = &mut self.rot_order[v];
        order.clear();
        order.push(anchor);
        order.extend_from_slice(rest);
        let succ = &mut self.rot_succ[v];
        let pred = &mut self.rot_pred[v];
        succ.clear();
        succ.resize(d, 0);
        pred.clear();
        pred.resize(d, 0);
        for i in 0..d {
            let e = order[i];
            let li = self.local[v][e] as usize;
            succ[li] = order[(i + 1) % d];
            pred[li] = order[(i + d - 1) % d];
        }
    }

    /// Where the walk goes from `state`: the next edge, or None while the
    /// signature it needs is still undecidable (stalled on a forward edge).
    /// A target of `INVALID` means the next edge's signature must be
    /// branched on first.
    fn transition(&self, state: u16) -> Option<(EdgeId, u16)> {
        let (arc, sgn_neg) = if self.spec.signed {
            ((state >> 1) as usize, state & 1 == 1)
        } else {
            (state as usize, false)
        };
        let e = arc >> 1;
        let (lo, hi) = self.g.endpoints(e);
        let head = if arc & 1 == 0 { hi } else { lo };
        let li = self.local[head][e] as usize;
        let next_e = if sgn_neg { self.rot_pred[head][li] } else { self.rot_succ[head][li] };
        let w = self.g.other_endpoint(next_e, head);
        if self.spec.signed && self.lambda[next_e] == 0 {
            if !self.assigned[w] {
                return None; // stalled; resolved at w's step
            }
            // decidable but undecided: caller branches on the signature
            return Some((next_e, INVALID));
        }
        // the walk leaves `head`, so `head` is the tail of the next arc
        let next_arc = (next_e << 1) | usize::from(head == self.g.endpoints(next_e).1);
        let target = if self.spec.signed {
            let new_neg = sgn_neg ^ (self.lambda[next_e] == -1);
            ((next_arc << 1) | usize::from(new_neg)) as u16
        } else {
            next_arc as u16
        };
        Some((next_e, target))
    }

    fn process(&mut self, t: usize, ti: usize, shared: &Shared<'_>, sink: &mut dyn FnMut(LeafView<'_>) -> LeafFlow) -> Flow {
        if ti == self.tasks[t].len() {
            if t + 1 == self.order.len() {
                return self.leaf(sink);
            }
            return self.step(t + 1, shared, sink);
        }
        match self.tasks[t][ti] {
            Task::Link { state } => {
                match self.transition(state) {
                    None => self.process(t, ti + 1, shared, sink),
                    Some((next_e, INVALID)) => self.branch_lambda(next_e, t, ti, shared, sink),
                    Some((_, target)) => {
                        if self.link(state, target) {
                            return Flow::Continue; // pruned; caller rewinds
                        }
                        self.process(t, ti + 1, shared, sink)
                    }
                }
            }
            Task::BackEdge { edge } => {
                let e = edge as usize;
                if self.lambda[e] == 0 {
                    return self.branch_lambda(e, t, ti, shared, sink);
                }
                // link the two states at the earlier endpoint that were
                // waiting for this signature
                let (lo, hi) = self.g.endpoints(e);
                let v = self.order[t];
                let u = if lo == v { hi } else { lo };
                debug_assert!(self.assigned[u]);
                let li = self.local[u][e] as usize;
                let neg = self.lambda[e] == -1;
                for (upstream, sgn_neg) in [(self.rot_pred[u][li], false), (self.rot_succ[u][li], true)] {
                    let z = self.g.other_endpoint(upstream, u);
                    // the stalled state runs z -> u and now crosses e to v
                    let src_arc = (upstream << 1) | usize::from(z == self.g.endpoints(upstream).1);
                    let src = ((src_arc << 1) | usize::from(sgn_neg)) as u16;
                    let tgt_arc = (e << 1) | usize::from(u == self.g.endpoints(e).1);
                    let tgt = ((tgt_arc << 1) | usize::from(sgn_neg ^ neg)) as u16;
                    if self.link(src, tgt) {
                        return Flow::Continue;
                    }
                }
                self.process(t, ti + 1, shared, sink)
            }
        }
    }

    fn branch_lambda(
        &mut self,
        e: EdgeId,
        t: usize,
        ti: usize,
        shared: &Shared<'_>,
        sink: &mut dyn FnMut(LeafView<'_>) -> LeafFlow,
    ) -> Flow {
        debug_assert_eq!(self.lambda[e], 0);
        for sign in [1i8, -1] {
            if !self.charge(shared) {
                return Flow::Budget;
            }
            if self.aborted(shared) {
                return Flow::Stop;
            }
            let mark = self.trail.len();
            self.lambda[e] = sign;
            self.trail.push(TrailOp::Lambda(e as u16));
            let f = self.process(t, ti, shared, sink);
            self.rewind(mark);
            if !matches!(f, Flow::Continue) {
                return f;
            }
        }
        Flow::Continue
    }

    /// Links `a -> b`; returns true when the branch became hopeless.
    fn link(&mut self, a: u16, b: u16) -> bool {
        debug_assert_eq!(self.succ[a as usize], INVALID);
        self.succ[a as usize] = b;
        let h = self.chain_head[a as usize];
        if h == b {
            // orbit closed
            let len = self.chain_len[b as usize];
            self.closed += 1;
            self.closed_states += len as u32;
            self.declassify(len);
            self.trail.push(TrailOp::Close { a, len });
        } else {
            let t_b = self.chain_tail[b as usize];
            let l_a = self.chain_len[h as usize];
            let l_b = self.chain_len[b as usize];
            self.chain_head[t_b as usize] = h;
            self.chain_tail[h as usize] = t_b;
            self.chain_len[h as usize] = l_a + l_b;
            self.declassify(l_a);
            self.declassify(l_b);
            self.classify(l_a + l_b);
            self.trail.push(TrailOp::Merge { a, h, t_b, l_a, l_b });
        }
        self.prune()
    }

    fn classify(&mut self, len: u16) {
        if len as u32 >= self.den {
            self.cnt_big += 1;
        } else {
            self.small_states += len as u32;
        }
    }

    fn declassify(&mut self, len: u16) {
        if len as u32 >= self.den {
            self.cnt_big -= 1;
        } else {
            self.small_states -= len as u32;
        }
    }

    /// True when even the most optimistic completion overshoots the target
    /// genus: open chains can close into at most one face each, loose states
    /// can bundle into faces of at least `den` sides.
    fn prune(&self) -> bool {
        let cap_orbits = self.closed as i64 + self.cnt_big as i64 + (self.small_states / self.den) as i64;
        let f_cap = if self.spec.signed { cap_orbits / 2 } else { cap_orbits };
        let eg_min = 2 - self.nv + self.ne - f_cap;
        eg_min > self.spec.goal.limit()
    }

    fn rewind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailOp::Lambda(e) => self.lambda[e as usize] = 0,
                TrailOp::Close { a, len } => {
                    self.succ[a as usize] = INVALID;
                    self.closed -= 1;
                    self.closed_states -= len as u32;
                    self.classify(len);
                }
                TrailOp::Merge { a, h, t_b, l_a, l_b } => {
                    let b = self.succ[a as usize];
                    self.succ[a as usize] = INVALID;
                    self.chain_head[t_b as usize] = b;
                    self.chain_tail[h as usize] = a;
                    self.chain_len[h as usize] = l_a;
                    self.declassify(l_a + l_b);
                    self.classify(l_a);
                    self.classify(l_b);
                }
            }
        }
    }

    fn leaf(&mut self, sink: &mut dyn FnMut(LeafView<'_>) -> LeafFlow) -> Flow {
        debug_assert_eq!(self.closed_states as usize, self.states, "all states must close at a leaf");
        let orbits = self.closed as i64;
        let f = if self.spec.signed { orbits / 2 } else { orbits };
        let eg = 2 - self.nv + self.ne - f;
        debug_assert!(!self.spec.signed || orbits % 2 == 0);
        let has_negative = self.spec.signed && self.lambda.iter().any(|&s| s == -1);
        if !self.spec.goal.accepts(eg) {
            return Flow::Continue;
        }
        if self.spec.require_negative && !has_negative {
            return Flow::Continue;
        }
        let view = LeafView { eg, rotations: &self.rot_order, lambda: &self.lambda };
        match sink(view) {
            LeafFlow::Continue => Flow::Continue,
            LeafFlow::Stop => Flow::Stop,
        }
    }
}

/// Lexicographic next permutation; false once the order wraps around.
fn next_permutation(items: &mut [EdgeId]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_order() {
        let mut v = vec![1, 2, 3];
        let mut all = vec![v.clone()];
        while next_permutation(&mut v) {
            all.push(v.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 2, 3]);
        assert_eq!(all[5], vec![3, 2, 1]);
    }
}
