//! Ground truth and verification: exhaustive oriented diameter on small
//! graphs, orientation validation, round-claim replay and the final bound
//! certificate.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::bridges::find_bridges;
use crate::distance::{arc_diameter, undirected_diameter};
use crate::epsilon::{extension_constant, Epsilon};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::claims::{check_round, RoundContext};
use crate::orientation::{ClaimCheck, CoreState};

/// Default edge limit of the exhaustive search.
pub const DEFAULT_MAX_EDGES: usize = 18;

/// Exact oriented diameter with one optimal orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub arcs: Vec<(usize, usize)>,
}

/// Bitset BFS over at most 64 vertices. `out[v]` and `inn[v]` hold the arc
/// neighbours; undirected edges appear in both.
struct Bits {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Bits {
    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn ecc(&self, s: usize, adj: &[u64]) -> Option<usize> {
        let full = self.full();
        let mut reached = 1u64 << s;
        let mut frontier = reached;
        let mut depth = 0;
        while reached != full {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= !reached;
            if next == 0 {
                return None;
            }
            reached |= next;
            frontier = next;
            depth += 1;
        }
        Some(depth)
    }

    /// Diameter with undirected edges usable both ways; `None` if some pair
    /// is disconnected.
    fn diameter(&self) -> Option<usize> {
        self.ecc(0, &self.inn)?;
        (0..self.n).try_fold(0, |m, s| Some(m.max(self.ecc(s, &self.out)?)))
    }
}

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    floor: usize,
    global: &'a AtomicUsize,
}

impl Search<'_> {
    fn bits(&self, assigned: usize, key: u64) -> Bits {
        let m = self.edges.len();
        let mut out = vec![0u64; self.n];
        let mut inn = vec![0u64; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (fwd, bwd) = if i < assigned {
                let reversed = key >> (m - 1 - i) & 1 == 1;
                (!reversed, reversed)
            } else {
                (true, true)
            };
            if fwd {
                out[u] |= 1 << v;
                inn[v] |= 1 << u;
            }
            if bwd {
                out[v] |= 1 << u;
                inn[u] |= 1 << v;
            }
        }
        Bits { n: self.n, out, inn }
    }

    /// Depth-first search below a prefix of `assigned` edges; returns the
    /// best `(value, key)` found, keys ordered as the search visits them.
    fn run(&self, assigned: usize, key: u64, best: &mut Option<(usize, u64)>) {
        let Some(lb) = self.bits(assigned, key).diameter() else {
            return;
        };
        if best.is_some_and(|(b, _)| lb >= b) || lb > self.global.load(Ordering::Relaxed) {
            return;
        }
        let m = self.edges.len();
        if assigned == m {
            *best = Some((lb, key));
            self.global.fetch_min(lb, Ordering::Relaxed);
            return;
        }
        for bit in 0..2u64 {
            if best.is_some_and(|(b, _)| b == self.floor) {
                return;
            }
            self.run(assigned + 1, key | bit << (m - 1 - assigned), best);
        }
    }
}

/// Minimum diameter over all strongly connected orientations of `g`.
///
/// Edge 0 is fixed in its low-to-high direction (reversing every arc keeps
/// the diameter). Partial assignments are pruned by the diameter with the
/// free edges usable both ways, a lower bound for every completion. Subtrees
/// below a fixed prefix run in parallel and the minimum `(value, order)` wins,
/// so the witness does not depend on scheduling.
pub fn brute_force_oriented_diameter(g: &Graph, max_edges: usize) -> Result<OracleResult> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m > max_edges || m > 63 || n > 64 {
        return Err(Error::TooManyEdges { m, max: max_edges.min(63) });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        return Ok(OracleResult { value: 0, arcs: Vec::new() });
    }
    if !g.is_connected() || !find_bridges(g).is_empty() {
        return Err(Error::NoStrongOrientation);
    }
    let floor = undirected_diameter(g).unwrap_or(0).max(2);
    let global = AtomicUsize::new(usize::MAX);
    let search = Search { n, edges: g.edges(), floor, global: &global };
    let depth = (m - 1).min(10);
    let prefixes: Vec<u64> = (0..1u64 << depth).map(|p| p << (m - 1 - depth)).collect();
    let best = prefixes
        .into_par_iter()
        .filter_map(|prefix| {
            let mut best = None;
            search.run(1 + depth, prefix, &mut best);
            best
        })
        .min()
        .ok_or(Error::NoStrongOrientation)?;
    let (value, key) = best;
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if key >> (m - 1 - i) & 1 == 1 { (v, u) } else { (u, v) })
        .collect();
    Ok(OracleResult { value, arcs })
}

/// One problem found by [`validate_orientation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValidationFailure {
    MissingEdge { u: usize, v: usize },
    DoubleOrientation { u: usize, v: usize },
    DuplicateArc { u: usize, v: usize },
    ExtraArc { u: usize, v: usize },
    NotStronglyConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
    pub diameter: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `arcs` orient every edge of `g` exactly once and form a
/// strongly connected digraph, and measures its diameter.
pub fn validate_orientation(g: &Graph, arcs: &[(usize, usize)]) -> ValidationReport {
    let n = g.vertex_count();
    let mut failures = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut count = vec![0usize; g.edge_count()];
    for &(u, v) in arcs {
        let Some(id) = (u < n && v < n).then(|| g.edge_id(u, v)).flatten() else {
            failures.push(ValidationFailure::ExtraArc { u, v });
            continue;
        };
        if !seen.insert((u, v)) {
            failures.push(ValidationFailure::DuplicateArc { u, v });
            continue;
        }
        count[id] += 1;
        if count[id] == 2 {
            let (a, b) = g.edge(id);
            failures.push(ValidationFailure::DoubleOrientation { u: a, v: b });
        }
    }
    for (id, &c) in count.iter().enumerate() {
        if c == 0 {
            let (u, v) = g.edge(id);
            failures.push(ValidationFailure::MissingEdge { u, v });
        }
    }
    let in_range: Vec<(usize, usize)> = arcs.iter().copied().filter(|&(u, v)| u < n && v < n).collect();
    let diameter = arc_diameter(n, &in_range);
    if diameter.is_none() {
        failures.push(ValidationFailure::NotStronglyConnected);
    }
    ValidationReport { failures, diameter }
}

/// Round checks recomputed from the recorded rounds alone.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub rounds: Vec<Vec<ClaimCheck>>,
    /// Replaying the recorded arcs reproduces the state's core.
    pub replay_matches: bool,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.replay_matches && self.rounds.iter().flatten().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<(usize, &ClaimCheck)> {
        self.rounds
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().filter(|c| !c.passed).map(move |c| (i + 1, c)))
            .collect()
    }
}

/// Replays every round of `state` from the start vertex and reruns all
/// round checks against the replayed core.
pub fn audit_core_state(g: &Graph, state: &CoreState) -> AuditReport {
    let n = g.vertex_count();
    let mut in_core = vec![false; n];
    in_core[state.start] = true;
    let mut ctx = RoundContext {
        g,
        epsilon: state.epsilon,
        min_degree: state.min_degree,
        core_vertices: vec![state.start],
        core_arcs: Vec::new(),
        witness_rounds: vec![vec![state.start]],
    };
    let mut rounds = Vec::with_capacity(state.rounds.len());
    for r in &state.rounds {
        rounds.push(check_round(&ctx, r).0);
        for v in r.added_vertices(&in_core) {
            in_core[v] = true;
            ctx.core_vertices.push(v);
        }
        ctx.core_arcs.extend(&r.new_arcs);
        ctx.witness_rounds.push(r.witness.clone());
    }
    let replayed: BTreeSet<_> = ctx.core_arcs.iter().copied().collect();
    let actual: BTreeSet<_> = state.core_arcs(g).into_iter().collect();
    let replay_matches = replayed == actual && ctx.core_vertices == state.core_vertices;
    AuditReport { rounds, replay_matches }
}

/// Pass/fail summary of one named check across all rounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub passed: bool,
    pub runs: usize,
    pub failures: usize,
    /// Detail of the first failure, or of the last run when all passed.
    pub detail: String,
}

/// Collapses per-round checks into one summary per check name.
pub fn summarize_checks<'a>(checks: impl IntoIterator<Item = &'a ClaimCheck>) -> BTreeMap<String, CheckSummary> {
    let mut out: BTreeMap<String, CheckSummary> = BTreeMap::new();
    for c in checks {
        let e = out.entry(c.claim.clone()).or_insert(CheckSummary {
            passed: true,
            runs: 0,
            failures: 0,
            detail: String::new(),
        });
        e.runs += 1;
        if !c.passed {
            if e.passed {
                e.detail = c.detail.clone();
            }
            e.passed = false;
            e.failures += 1;
        } else if e.passed {
            e.detail = c.detail.clone();
        }
    }
    out
}

/// Everything the final certificate is computed from.
#[derive(Debug, Clone)]
pub struct BoundInputs<'a> {
    pub arcs: &'a [(usize, usize)],
    pub epsilon: Epsilon,
    pub cap: usize,
    pub witness_size: usize,
    pub witness_coverage: usize,
    pub core_vertices: usize,
    pub core_diameter: Option<usize>,
    pub rounds: usize,
    pub checks: BTreeMap<String, CheckSummary>,
    /// Ear orientation without a diameter guarantee.
    pub fallback: bool,
}

/// The final orientation with its measured diameter and both bound forms.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationCertificate {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub epsilon: Epsilon,
    pub epsilon_exact: String,
    pub cap_l: usize,
    /// `2 L (L + 1)`
    pub additive_constant: usize,
    pub rounds: usize,
    pub core_vertices: usize,
    pub core_diameter: Option<usize>,
    pub witness_size: usize,
    pub witness_coverage: usize,
    pub measured_diameter: Option<usize>,
    pub undirected_diameter: Option<usize>,
    /// `(3 + epsilon) |S| + 2 L (L + 1)`
    pub witness_bound: f64,
    pub within_witness_bound: bool,
    /// `(3 + epsilon) n / (delta - 2) + 2 L (L + 1)`; absent when `delta <= 2`.
    pub bound_value: Option<f64>,
    pub within_bound: bool,
    pub valid: bool,
    pub validation_failures: Vec<ValidationFailure>,
    pub claim_checks: BTreeMap<String, CheckSummary>,
    pub fallback: bool,
    pub arcs: Vec<(usize, usize)>,
}

/// Checks whose failure means the orientation itself breaks its guarantee,
/// as opposed to a round-level diagnostic.
pub const GUARANTEE_CHECKS: [&str; 2] = ["core_preserved", "extension_bound"];

impl OrientationCertificate {
    /// Valid, strongly connected, within both bounds, and the core arcs and
    /// extension bound hold. Round checks are not consulted.
    pub fn guarantee_holds(&self) -> bool {
        self.valid
            && self.within_bound
            && self.within_witness_bound
            && self.measured_diameter >= self.undirected_diameter
            && GUARANTEE_CHECKS.iter().all(|k| self.claim_checks.get(*k).is_none_or(|c| c.passed))
    }

    /// Names of failed checks, round-level ones included.
    pub fn failed_checks(&self) -> Vec<&str> {
        self.claim_checks.iter().filter(|(_, c)| !c.passed).map(|(k, _)| k.as_str()).collect()
    }

    /// [`Self::guarantee_holds`] and every round check passed.
    pub fn passed(&self) -> bool {
        self.valid
            && self.within_bound
            && self.within_witness_bound
            && self.claim_checks.values().all(|c| c.passed)
            && self.measured_diameter >= self.undirected_diameter
    }
}

/// `d <= (3 + p/q) * count / div + c`, compared exactly.
fn within(d: usize, eps: Epsilon, count: usize, div: usize, c: usize) -> bool {
    let r = eps.ratio();
    let (p, q) = (*r.numer() as u128, *r.denom() as u128);
    let (d, count, div, c) = (d as u128, count as u128, div as u128, c as u128);
    d * q * div <= (3 * q + p) * count + c * q * div
}

/// Validates `inputs.arcs` against `g` and fills in the certificate.
pub fn bound_report(g: &Graph, inputs: BoundInputs<'_>) -> OrientationCertificate {
    let n = g.vertex_count();
    let min_degree = g.min_degree().unwrap_or(0);
    let report = validate_orientation(g, inputs.arcs);
    let constant = extension_constant(inputs.cap);
    let eps = inputs.epsilon.as_f64();
    let measured = report.diameter;
    let witness_bound = (3.0 + eps) * inputs.witness_size as f64 + constant as f64;
    let within_witness_bound =
        inputs.fallback || measured.is_some_and(|d| within(d, inputs.epsilon, inputs.witness_size, 1, constant));
    let bound_value = (min_degree > 2).then(|| (3.0 + eps) * n as f64 / (min_degree - 2) as f64 + constant as f64);
    let within_bound = if inputs.fallback {
        true
    } else {
        min_degree > 2 && measured.is_some_and(|d| within(d, inputs.epsilon, n, min_degree - 2, constant))
    };
    OrientationCertificate {
        n,
        m: g.edge_count(),
        min_degree,
        epsilon: inputs.epsilon,
        epsilon_exact: inputs.epsilon.to_string(),
        cap_l: inputs.cap,
        additive_constant: constant,
        rounds: inputs.rounds,
        core_vertices: inputs.core_vertices,
        core_diameter: inputs.core_diameter,
        witness_size: inputs.witness_size,
        witness_coverage: inputs.witness_coverage,
        measured_diameter: measured,
        undirected_diameter: undirected_diameter(g),
        witness_bound,
        within_witness_bound,
        bound_value,
        within_bound,
        valid: report.is_valid(),
        validation_failures: report.failures,
        claim_checks: inputs.checks,
        fallback: inputs.fallback,
        arcs: inputs.arcs.to_vec(),
    }
}
