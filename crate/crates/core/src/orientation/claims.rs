//! Per-round checks of the guarantees each round is meant to provide.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Ratio;
use serde::Serialize;

use super::connector::LOCAL_REACH;
use super::{core_diameter, CoreState, RoundRecord};
use crate::distance::{bfs_distance, diameter, Mode};
use crate::epsilon::Epsilon;
use crate::graph::Graph;
use crate::mixed::MixedGraph;

/// Additive slack in the per-round diameter bounds.
pub const DIAMETER_SLACK: usize = 32;
/// Largest degree allowed in the witness overlap multigraph.
pub const OVERLAP_DEGREE_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

impl ClaimCheck {
    fn new(claim: &str, passed: bool, detail: String) -> Self {
        ClaimCheck { claim: claim.to_string(), passed, detail }
    }
}

/// The core before a round.
pub struct RoundContext<'a> {
    pub g: &'a Graph,
    pub epsilon: Epsilon,
    pub min_degree: usize,
    pub core_vertices: Vec<usize>,
    pub core_arcs: Vec<(usize, usize)>,
    /// Witness sets of all earlier rounds, the start vertex first.
    pub witness_rounds: Vec<Vec<usize>>,
}

impl<'a> RoundContext<'a> {
    pub fn from_state(g: &'a Graph, state: &CoreState) -> Self {
        RoundContext {
            g,
            epsilon: state.epsilon,
            min_degree: state.min_degree,
            core_vertices: state.core_vertices.clone(),
            core_arcs: state.core_arcs(g),
            witness_rounds: state.witness_rounds(),
        }
    }
}

/// Runs every round check; also returns the diameter of the core after the
/// round with the old core contracted to one vertex.
pub fn check_round(ctx: &RoundContext<'_>, r: &RoundRecord) -> (Vec<ClaimCheck>, Option<usize>) {
    let g = ctx.g;
    let n = g.vertex_count();
    let mut in_core = vec![false; n];
    ctx.core_vertices.iter().for_each(|&v| in_core[v] = true);
    let mut checks = vec![
        path_geodesic(g, r, &in_core),
        path_consistent(g, r, &in_core),
        mark_spacing(g, &r.out_marks),
        mark_counts(r),
    ];

    // core after the round, and the contracted view
    let added = r.added_vertices(&in_core);
    let mut vertices = ctx.core_vertices.clone();
    vertices.extend(&added);
    let mut arcs = ctx.core_arcs.clone();
    arcs.extend(&r.new_arcs);
    let mut local = HashMap::with_capacity(vertices.len());
    for (i, &v) in vertices.iter().enumerate() {
        local.insert(v, i);
    }
    let mut mixed = MixedGraph::new(vertices.len());
    for &(u, v) in &arcs {
        mixed.add_arc(local[&u], local[&v]).expect("relabelled arcs are in range");
    }
    let old: Vec<usize> = ctx.core_vertices.iter().map(|v| local[v]).collect();
    let contraction = mixed.contract(&old).expect("core is nonempty");
    let view = contraction.graph.view();
    let to_hat = |v: usize| contraction.map[local[&v]];
    let merged = contraction.label;

    checks.push(local_reach(r, &view, merged, &to_hat, &in_core));
    let hat_diam = diameter(&view, Mode::Forward);
    let side = r.out_side().len().max(r.back_side().len());
    checks.push(ClaimCheck::new("contracted_strong", hat_diam.is_some(), format!("diameter {hat_diam:?}")));
    checks.push(match hat_diam {
        Some(d) => ClaimCheck::new(
            "contracted_diameter",
            d <= 3 * side + DIAMETER_SLACK,
            format!("diameter {d}, bound 3*{side}+{DIAMETER_SLACK}"),
        ),
        None => ClaimCheck::new("contracted_diameter", false, "not strongly connected".into()),
    });

    let witness_total: usize = ctx.witness_rounds.iter().map(Vec::len).sum::<usize>() + r.witness.len();
    let core_diam = core_diameter(n, &vertices, &arcs);
    checks.push(match core_diam {
        Some(d) => ClaimCheck::new(
            "core_diameter",
            d <= 3 * witness_total + DIAMETER_SLACK,
            format!("diameter {d}, bound 3*{witness_total}+{DIAMETER_SLACK}"),
        ),
        None => ClaimCheck::new("core_diameter", false, "core not strongly connected".into()),
    });
    checks.push(match core_diam {
        Some(d) => {
            let bound = (Ratio::from_integer(3u64) + ctx.epsilon.ratio()) * Ratio::from_integer(witness_total as u64);
            ClaimCheck::new(
                "core_ratio",
                Ratio::from_integer(d as u64) <= bound,
                format!("diameter {d}, bound (3+{})*{witness_total}", ctx.epsilon),
            )
        }
        None => ClaimCheck::new("core_ratio", false, "core not strongly connected".into()),
    });

    checks.extend(witness_checks(ctx, r));
    (checks, hat_diam)
}

fn path_geodesic(g: &Graph, r: &RoundRecord, in_core: &[bool]) -> ClaimCheck {
    let p = &r.out_path;
    let Some(u0) = p.first() else {
        return ClaimCheck::new("path_geodesic", false, "empty out-path".into());
    };
    let from_start = bfs_distance(g, &[u0], Mode::Undirected).expect("start is a vertex");
    let bad = p.vertices.iter().enumerate().find(|&(j, &v)| from_start.get(v) != Some(j));
    let ok = in_core[u0] && p.len().is_multiple_of(3) && p.is_valid_in(g) && bad.is_none();
    ClaimCheck::new("path_geodesic", ok, format!("p = {}, first mismatch {bad:?}", p.len()))
}

fn path_consistent(g: &Graph, r: &RoundRecord, in_core: &[bool]) -> ClaimCheck {
    let (p, q) = (&r.out_path, &r.back_path);
    let mut reversed = BTreeSet::new();
    for (u, v) in p.steps() {
        reversed.insert((v, u));
    }
    let backwards = q.steps().find(|s| reversed.contains(s));
    let ends = q.first() == p.last() && q.last().is_some_and(|v| in_core[v]);
    let interior_outside = q.vertices[..q.vertices.len().saturating_sub(1)].iter().all(|&v| !in_core[v]);
    let ok = q.is_valid_in(g) && ends && interior_outside && backwards.is_none();
    ClaimCheck::new("path_consistent", ok, format!("q = {}, backward step {backwards:?}", r.back_len()))
}

fn mark_spacing(g: &Graph, marks: &[usize]) -> ClaimCheck {
    let mut within_two: HashMap<usize, usize> = HashMap::new();
    for (i, &a) in marks.iter().enumerate() {
        for v in std::iter::once(a).chain(g.neighbors(a)) {
            if let Some(&j) = within_two.get(&v) {
                if j != i {
                    return ClaimCheck::new("mark_spacing", false, format!("{a} within distance 2 of {}", marks[j]));
                }
            }
            within_two.insert(v, i);
        }
    }
    ClaimCheck::new("mark_spacing", true, format!("{} marks", marks.len()))
}

fn mark_counts(r: &RoundRecord) -> ClaimCheck {
    let (p, q) = (r.out_len(), r.back_len());
    let (a, b) = (r.out_marks.len(), r.back_marks.len());
    let ok = p == 3 * a && q <= 3 * b + 1;
    ClaimCheck::new("mark_counts", ok, format!("p = {p}, |out| = {a}, q + 1 = {}, |back| = {b}", q + 1))
}

fn local_reach(
    r: &RoundRecord,
    view: &crate::mixed::MixedView,
    merged: usize,
    to_hat: &dyn Fn(usize) -> usize,
    in_core: &[bool],
) -> ClaimCheck {
    let n_hat = view.out.len();
    let mark = |set: &[usize]| {
        let mut m = vec![false; n_hat];
        set.iter().for_each(|&v| m[to_hat(v)] = true);
        m[merged] = true;
        m
    };
    let a_target = mark(&r.back_marks);
    let b_target = mark(&r.out_marks);
    let within = |v: usize, target: &[bool], mode: Mode| {
        let d = bfs_distance(view, &[v], mode).expect("vertex in range");
        (0..n_hat).any(|w| target[w] && d.get(w).is_some_and(|x| x <= LOCAL_REACH))
    };
    let mut failures = Vec::new();
    let checks = [(&r.out_marks, &r.back_extra, &a_target), (&r.back_marks, &r.out_extra, &b_target)];
    for (side, excluded, target) in checks {
        for &v in side.iter().filter(|v| !excluded.contains(v) && !in_core[**v]) {
            let h = to_hat(v);
            if !(within(h, target, Mode::Forward) && within(h, target, Mode::Backward)) {
                failures.push(v);
            }
        }
    }
    ClaimCheck::new("local_reach", failures.is_empty(), format!("vertices beyond {LOCAL_REACH}: {failures:?}"))
}

/// Overlap multigraph on `set`: pairs with intersecting closed
/// neighbourhoods, doubled when adjacent. Returns degree per member and the
/// total edge count.
pub fn overlap_multigraph(g: &Graph, set: &[usize]) -> (Vec<usize>, usize) {
    let mut owners: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &x) in set.iter().enumerate() {
        for v in std::iter::once(x).chain(g.neighbors(x)) {
            owners.entry(v).or_default().push(i);
        }
    }
    let mut pairs = BTreeSet::new();
    for list in owners.values() {
        for (k, &i) in list.iter().enumerate() {
            for &j in &list[k + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    let mut degree = vec![0; set.len()];
    let mut edges = 0;
    for (i, j) in pairs {
        let mult = if g.has_edge(set[i], set[j]) { 2 } else { 1 };
        degree[i] += mult;
        degree[j] += mult;
        edges += mult;
    }
    (degree, edges)
}

fn coverage(g: &Graph, set: &[usize]) -> usize {
    set.iter().flat_map(|&x| std::iter::once(x).chain(g.neighbors(x))).collect::<BTreeSet<_>>().len()
}

fn witness_checks(ctx: &RoundContext<'_>, r: &RoundRecord) -> Vec<ClaimCheck> {
    let g = ctx.g;
    let delta = ctx.min_degree;
    let s = &r.witness;
    let (degree, edges) = overlap_multigraph(g, s);
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let cover = coverage(g, s);
    let lower = ((delta + 1) * s.len()).saturating_sub(edges);
    let mut out = vec![
        ClaimCheck::new(
            "overlap_degree",
            max_deg <= OVERLAP_DEGREE_CAP,
            format!("max degree {max_deg}, {edges} edges on {} witnesses", s.len()),
        ),
        ClaimCheck::new(
            "witness_coverage",
            cover >= lower && cover >= delta.saturating_sub(2) * s.len(),
            format!("coverage {cover}, (d+1)|S'|-|E| = {lower}, (d-2)|S'| = {}", delta.saturating_sub(2) * s.len()),
        ),
    ];

    let mut earlier = vec![false; g.vertex_count()];
    for x in ctx.witness_rounds.iter().flatten() {
        earlier[*x] = true;
        g.neighbors(*x).for_each(|v| earlier[v] = true);
    }
    let clash: Vec<usize> =
        s.iter().copied().filter(|&x| earlier[x] || g.neighbors(x).any(|v| earlier[v])).collect();
    out.push(ClaimCheck::new("witness_disjoint", clash.is_empty(), format!("witnesses touching earlier rounds: {clash:?}")));

    let mut all: Vec<usize> = ctx.witness_rounds.iter().flatten().copied().collect();
    all.extend(s);
    let total = coverage(g, &all);
    let need = delta.saturating_sub(2) * all.len();
    out.push(ClaimCheck::new("coverage_total", total >= need, format!("coverage {total}, (d-2)|S| = {need}")));
    out
}
