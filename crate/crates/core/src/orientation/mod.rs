//! Round-by-round growth of an oriented core with a paying witness set.
//!
//! Each round takes a geodesic out of the core whose length is a multiple of
//! three, returns to the core along a shortest path that respects it, and
//! ties every third vertex of one path to a nearby marked vertex of the
//! other with a pair of short connector paths. The out-path, the return path
//! and the connectors join the core; the larger of the two marked sides joins
//! the witness set. The loop stops once every vertex is within distance `L`
//! of the core.

pub mod arcs;
pub mod claims;
pub mod connector;
pub mod overlap;
pub mod paths;

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::bridges::find_bridges;
use crate::distance::{arc_diameter, bfs_distance, Mode};
use crate::epsilon::Epsilon;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::mixed::MixedGraph;

use arcs::{ArcState, RoundArcs};
pub use claims::ClaimCheck;
use connector::{orient_connector, ConnectorOutcome, LocalTargets};
pub use overlap::{Connector, Owner};
use overlap::{choose_connectors, second_order_sets, RoundSets};
use paths::{back_marks, out_marks, select_path_p, select_path_q};

/// Graphs up to this many vertices are checked every round unless the
/// caller says otherwise.
pub const INSTRUMENT_THRESHOLD: usize = 2000;

#[derive(Debug, Clone, Copy)]
pub struct CoreConfig {
    pub epsilon: Epsilon,
    /// First core vertex; vertex 0 when unset.
    pub start: Option<usize>,
    /// Run the per-round checks and record them on each round.
    pub instrument: bool,
}

impl CoreConfig {
    pub fn new(epsilon: Epsilon) -> Self {
        CoreConfig { epsilon, start: None, instrument: true }
    }

    /// Instrumentation on for graphs up to [`INSTRUMENT_THRESHOLD`] vertices.
    pub fn auto(epsilon: Epsilon, n: usize) -> Self {
        CoreConfig { epsilon, start: None, instrument: n <= INSTRUMENT_THRESHOLD }
    }
}

/// Which marked side became the round's witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Out,
    Back,
}

/// Everything one round selected and oriented.
#[derive(Debug, Clone, Serialize)]
pub struct RoundRecord {
    pub index: usize,
    /// `u_0 .. u_p`, starting in the core.
    pub out_path: Path,
    /// `w_0 .. w_{q+1}`, from `u_p` back into the core.
    pub back_path: Path,
    /// Every third vertex of the out-path after `u_0`.
    pub out_marks: Vec<usize>,
    /// Every third vertex of the return path up to `w_{q-2}`.
    pub back_marks: Vec<usize>,
    /// Return-path marks not overlapping any out-path mark.
    pub out_extra: Vec<usize>,
    /// Out-path marks not overlapping any return-path mark.
    pub back_extra: Vec<usize>,
    pub connectors: Vec<Connector>,
    pub outcomes: Vec<ConnectorOutcome>,
    /// Connector middles outside both paths and the previous core.
    pub new_vertices: Vec<usize>,
    /// Arcs assigned this round, in assignment order.
    pub new_arcs: Vec<(usize, usize)>,
    pub witness_side: Side,
    pub witness: Vec<usize>,
    pub checks: Vec<ClaimCheck>,
    pub contracted_diameter: Option<usize>,
}

impl RoundRecord {
    /// `p`
    pub fn out_len(&self) -> usize {
        self.out_path.len()
    }

    /// `q`, one less than the number of return-path edges.
    pub fn back_len(&self) -> usize {
        self.back_path.len().saturating_sub(1)
    }

    /// `out_marks ∪ out_extra`
    pub fn out_side(&self) -> Vec<usize> {
        self.out_marks.iter().chain(&self.out_extra).copied().collect()
    }

    /// `back_marks ∪ back_extra`
    pub fn back_side(&self) -> Vec<usize> {
        self.back_marks.iter().chain(&self.back_extra).copied().collect()
    }

    /// Vertices entering the core this round.
    pub fn added_vertices(&self, in_core: &[bool]) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        self.out_path
            .vertices
            .iter()
            .chain(&self.back_path.vertices)
            .chain(&self.new_vertices)
            .copied()
            .filter(|&v| !in_core[v] && seen.insert(v))
            .collect()
    }

    /// One JSON object for the per-round trace.
    pub fn trace_line(&self) -> String {
        json!({
            "kind": "round",
            "round": self.index,
            "p": self.out_len(),
            "q": self.back_len(),
            "out_marks": self.out_marks.len(),
            "back_marks": self.back_marks.len(),
            "out_extra": self.out_extra.len(),
            "back_extra": self.back_extra.len(),
            "connectors": self.connectors.len(),
            "fallbacks": self.outcomes.iter().filter(|o| o.fallback).count(),
            "contracted_diameter": self.contracted_diameter,
            "checks": self.checks,
        })
        .to_string()
    }
}

/// The loop state: oriented core, witness set and round history.
#[derive(Debug, Clone)]
pub struct CoreState {
    pub epsilon: Epsilon,
    /// Termination radius `L`.
    pub cap: usize,
    pub start: usize,
    pub min_degree: usize,
    pub in_core: Vec<bool>,
    /// Core vertices in order of arrival.
    pub core_vertices: Vec<usize>,
    pub arcs: ArcState,
    pub witness: Vec<usize>,
    pub rounds: Vec<RoundRecord>,
    pub instrument: bool,
}

impl CoreState {
    /// State before the first round: the single vertex `start`.
    pub fn initial(g: &Graph, config: &CoreConfig) -> Result<Self> {
        let n = g.vertex_count();
        let start = config.start.unwrap_or(0);
        if start >= n {
            return Err(Error::IndexOutOfRange { vertex: start, n });
        }
        let mut in_core = vec![false; n];
        in_core[start] = true;
        Ok(CoreState {
            epsilon: config.epsilon,
            cap: config.epsilon.cap_l(),
            start,
            min_degree: g.min_degree()?,
            in_core,
            core_vertices: vec![start],
            arcs: ArcState::new(g),
            witness: vec![start],
            rounds: Vec::new(),
            instrument: config.instrument,
        })
    }

    pub fn core_arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.arcs.arcs(g).collect()
    }

    /// The core as a mixed graph on the host's vertex ids.
    pub fn core(&self, g: &Graph) -> MixedGraph {
        MixedGraph::from_arcs(g.vertex_count(), self.core_arcs(g)).expect("core arcs are graph edges")
    }

    /// Directed diameter of the core on its own vertex set.
    pub fn core_diameter(&self, g: &Graph) -> Option<usize> {
        core_diameter(g.vertex_count(), &self.core_vertices, &self.core_arcs(g))
    }

    /// `|∪ N[v]|` over the witness set.
    pub fn witness_coverage(&self, g: &Graph) -> usize {
        let mut seen = vec![false; g.vertex_count()];
        let mut count = 0;
        for &w in &self.witness {
            for v in std::iter::once(w).chain(g.neighbors(w)) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                }
            }
        }
        count
    }

    /// Witness sets per round, the start vertex first.
    pub fn witness_rounds(&self) -> Vec<Vec<usize>> {
        std::iter::once(vec![self.start]).chain(self.rounds.iter().map(|r| r.witness.clone())).collect()
    }

    /// `(round index, check)` for every failed round check.
    pub fn failed_checks(&self) -> Vec<(usize, &ClaimCheck)> {
        self.rounds.iter().flat_map(|r| r.checks.iter().filter(|c| !c.passed).map(move |c| (r.index, c))).collect()
    }
}

/// Directed diameter of the arcs restricted to `vertices`, after relabelling.
pub(crate) fn core_diameter(n: usize, vertices: &[usize], arcs: &[(usize, usize)]) -> Option<usize> {
    let mut id = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        id[v] = i;
    }
    let local: Vec<(usize, usize)> = arcs.iter().map(|&(u, v)| (id[u], id[v])).collect();
    arc_diameter(vertices.len(), &local)
}

/// Rejects inputs outside the construction's preconditions: empty,
/// disconnected, bridged or minimum degree below 3, checked in that order.
pub fn check_input(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridges = find_bridges(g);
    if let Some(&example) = bridges.first() {
        return Err(Error::NotBridgeless { count: bridges.len(), example });
    }
    let found = g.min_degree()?;
    if found < 3 {
        return Err(Error::MinDegreeTooSmall { found, required: 3 });
    }
    Ok(())
}

/// Runs rounds until every vertex is within distance `L` of the core.
///
/// Failed round checks do not stop the loop; they stay in each
/// [`RoundRecord::checks`] and are listed by [`CoreState::failed_checks`].
pub fn run_core(g: &Graph, config: &CoreConfig) -> Result<CoreState> {
    check_input(g)?;
    run_core_unchecked(g, config)
}

/// [`run_core`] without the input checks; the caller guarantees a connected
/// bridgeless graph.
pub fn run_core_unchecked(g: &Graph, config: &CoreConfig) -> Result<CoreState> {
    let mut state = CoreState::initial(g, config)?;
    while let Some(record) = build_round(g, &state)? {
        match commit_round(g, &mut state, record) {
            Ok(()) | Err(Error::InvariantViolation { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(state)
}

/// Plans and orients the next round against a scratch copy of the arcs, or
/// `None` when every vertex is within distance `L` of the core.
pub fn build_round(g: &Graph, state: &CoreState) -> Result<Option<RoundRecord>> {
    let n = g.vertex_count();
    let p = match select_path_p(g, &state.core_vertices, state.cap) {
        Ok(p) => p,
        Err(Error::NoFarVertex { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let a_marks = out_marks(&p);
    let q = select_path_q(g, &p, &state.in_core, &a_marks)?;
    let b_marks = back_marks(&q);
    let (a_extra, b_extra) = second_order_sets(g, &a_marks, &b_marks);

    let mut a_all = vec![false; n];
    let mut b_all = vec![false; n];
    a_marks.iter().chain(&a_extra).for_each(|&v| a_all[v] = true);
    b_marks.iter().chain(&b_extra).for_each(|&v| b_all[v] = true);
    let sets = RoundSets {
        p: &p,
        q: &q,
        a_side: a_marks.iter().copied().filter(|&v| !b_all[v]).collect(),
        b_side: b_marks.iter().copied().filter(|&v| !a_all[v]).collect(),
    };
    let connectors = choose_connectors(g, &sets)?;

    let mut scratch = state.arcs.clone();
    let mut round = RoundArcs::default();
    for (u, v) in p.steps().chain(q.steps()) {
        scratch.set(g, u, v)?;
        round.add(u, v);
    }

    let mut on_frame = state.in_core.clone();
    p.vertices.iter().chain(&q.vertices).for_each(|&v| on_frame[v] = true);
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    a_marks.iter().for_each(|&v| in_a[v] = true);
    b_marks.iter().for_each(|&v| in_b[v] = true);
    let targets = LocalTargets { in_core: &state.in_core, in_out_marks: &in_a, in_back_marks: &in_b, on_frame: &on_frame };
    let mut outcomes = Vec::with_capacity(connectors.len());
    for c in &connectors {
        outcomes.push(orient_connector(g, &mut scratch, &mut round, c, &targets)?);
    }

    let mut new_vertices = Vec::new();
    for c in &connectors {
        for m in c.middles() {
            if !on_frame[m] && !new_vertices.contains(&m) {
                new_vertices.push(m);
            }
        }
    }
    new_vertices.sort_unstable();

    // arcs the round actually adds, in assignment order
    let mut new_arcs = Vec::new();
    let mut added = BTreeSet::new();
    for &(u, v) in round.list() {
        if state.arcs.get(g, u, v)?.is_none() && added.insert((u, v)) {
            new_arcs.push((u, v));
        }
    }

    let a_size = a_marks.len() + a_extra.len();
    let b_size = b_marks.len() + b_extra.len();
    let (witness_side, witness) = if a_size >= b_size {
        (Side::Out, a_marks.iter().chain(&a_extra).copied().collect())
    } else {
        (Side::Back, b_marks.iter().chain(&b_extra).copied().collect())
    };

    Ok(Some(RoundRecord {
        index: state.rounds.len() + 1,
        out_path: p,
        back_path: q,
        out_marks: a_marks,
        back_marks: b_marks,
        out_extra: a_extra,
        back_extra: b_extra,
        connectors,
        outcomes,
        new_vertices,
        new_arcs,
        witness_side,
        witness,
        checks: Vec::new(),
        contracted_diameter: None,
    }))
}

/// Adds the round's vertices, arcs and witnesses to the state. With
/// instrumentation on, the round checks run against the pre-round state and
/// the first failure is returned as [`Error::InvariantViolation`] (the record
/// is kept either way).
pub fn commit_round(g: &Graph, state: &mut CoreState, mut record: RoundRecord) -> Result<()> {
    if state.instrument {
        let ctx = claims::RoundContext::from_state(g, state);
        let (checks, diam) = claims::check_round(&ctx, &record);
        record.checks = checks;
        record.contracted_diameter = diam;
    }
    for v in record.added_vertices(&state.in_core) {
        state.in_core[v] = true;
        state.core_vertices.push(v);
    }
    for &(u, v) in &record.new_arcs {
        state.arcs.set(g, u, v)?;
    }
    state.witness.extend(record.witness.iter().copied());
    let failure = record.checks.iter().find(|c| !c.passed).cloned();
    state.rounds.push(record);
    match failure {
        Some(c) => Err(Error::InvariantViolation { claim: c.claim, detail: c.detail }),
        None => Ok(()),
    }
}

/// BFS distance of every vertex from the core.
pub fn distance_to_core(g: &Graph, state: &CoreState) -> Result<Vec<Option<usize>>> {
    Ok(bfs_distance(g, &state.core_vertices, Mode::Undirected)?.as_slice().to_vec())
}
