//! Test and benchmark graph families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bridges::find_bridges;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters of a generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    /// The sequential-join lower-bound family with parameters `(delta, k)`.
    Gdk { delta: usize, k: usize },
    Random { n: usize, delta: usize, seed: u64 },
    Cycle { n: usize },
    Complete { n: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Gdk { delta, k } => lower_bound_family(delta, k),
            FamilySpec::Random { n, delta, seed } => random_min_degree_bridgeless(n, delta, seed),
            FamilySpec::Cycle { n } => Ok(cycle(n)),
            FamilySpec::Complete { n } => Ok(complete(n)),
        }
    }

    /// One-line description used as a file header.
    pub fn describe(&self) -> String {
        match *self {
            FamilySpec::Gdk { delta, k } => format!("family=gdk delta={delta} k={k}"),
            FamilySpec::Random { n, delta, seed } => format!("family=random n={n} delta={delta} seed={seed}"),
            FamilySpec::Cycle { n } => format!("family=cycle n={n}"),
            FamilySpec::Complete { n } => format!("family=complete n={n}"),
        }
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid pairs")
}

/// The cycle `C_n`; for `n < 3` this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let pairs = (0..n).map(|i| (i, (i + 1) % n)).filter(|&(u, v)| u != v);
    Graph::from_edges(n, pairs).expect("valid pairs")
}

/// Disjoint union of `parts` (relabelled consecutively in order) with every
/// vertex of each part joined to every vertex of the next.
pub fn sequential_join(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut n = 0;
    for p in parts {
        offsets.push(n);
        n += p.vertex_count();
    }
    let mut pairs = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let off = offsets[i];
        pairs.extend(p.edges().iter().map(|&(u, v)| (u + off, v + off)));
        if let Some(next) = parts.get(i + 1) {
            let noff = offsets[i + 1];
            for u in 0..p.vertex_count() {
                for v in 0..next.vertex_count() {
                    pairs.push((u + off, v + noff));
                }
            }
        }
    }
    Graph::from_edges(n, pairs)
}

/// `K_{d-1} + (K_2 + K_2 + K_{d-3}) x k + K_2 + K_2 + K_{d-1}`.
///
/// It has `(d + 1)(k + 2)` vertices, minimum degree `d` and diameter `3k + 3`.
pub fn lower_bound_family(delta: usize, k: usize) -> Result<Graph> {
    if delta < 4 {
        return Err(Error::DeltaTooSmall { got: delta, min: 4 });
    }
    if k < 1 {
        return Err(Error::KTooSmall(k));
    }
    let mut parts = vec![complete(delta - 1)];
    for _ in 0..k {
        parts.extend([complete(2), complete(2), complete(delta - 3)]);
    }
    parts.extend([complete(2), complete(2), complete(delta - 1)]);
    sequential_join(&parts)
}

const MAX_REPAIR_PASSES: usize = 64;

/// A connected bridgeless graph with minimum degree at least `delta`,
/// reproducible from `seed`.
///
/// Edges are added at random until every vertex reaches degree `delta`
/// (partners drawn from the still-deficient vertices first), then components
/// are linked and every bridge is covered by an extra edge across it.
pub fn random_min_degree_bridgeless(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if delta < 2 {
        return Err(Error::DeltaTooSmall { got: delta, min: 2 });
    }
    if n < delta + 1 {
        return Err(Error::TooFewVertices { n, delta });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let add = |adj: &mut Vec<BTreeSet<usize>>, u: usize, v: usize| {
        adj[u].insert(v);
        adj[v].insert(u);
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut deficient = order.clone();
    for &v in &order {
        while adj[v].len() < delta {
            let mut picked = None;
            for _ in 0..32 {
                if deficient.is_empty() {
                    break;
                }
                let i = rng.gen_range(0..deficient.len());
                let u = deficient[i];
                if adj[u].len() >= delta {
                    deficient.swap_remove(i);
                } else if u != v && !adj[v].contains(&u) {
                    picked = Some(u);
                    break;
                }
            }
            let u = match picked {
                Some(u) => u,
                None => {
                    let exact: Vec<usize> = deficient
                        .iter()
                        .copied()
                        .filter(|&u| u != v && adj[u].len() < delta && !adj[v].contains(&u))
                        .collect();
                    let pool = if exact.is_empty() {
                        (0..n).filter(|&u| u != v && !adj[v].contains(&u)).collect()
                    } else {
                        exact
                    };
                    pool[rng.gen_range(0..pool.len())]
                }
            };
            add(&mut adj, u, v);
        }
    }

    let build = |adj: &Vec<BTreeSet<usize>>| {
        Graph::from_edges(n, adj.iter().enumerate().flat_map(|(u, s)| s.iter().filter(move |&&v| u < v).map(move |&v| (u, v))))
    };

    for _ in 0..MAX_REPAIR_PASSES {
        let g = build(&adj)?;
        let (count, comp) = g.components();
        if count > 1 {
            for c in 1..count {
                let a: Vec<_> = (0..n).filter(|&v| comp[v] == c - 1).collect();
                let b: Vec<_> = (0..n).filter(|&v| comp[v] == c).collect();
                let (x, y) = (a[rng.gen_range(0..a.len())], b[rng.gen_range(0..b.len())]);
                add(&mut adj, x, y);
            }
            continue;
        }
        let bridges = find_bridges(&g);
        let Some(&(u, v)) = bridges.first() else {
            return Ok(g);
        };
        // side of u once the bridge is gone
        let mut side = vec![false; n];
        side[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if !side[y] && !(x == u && y == v) {
                    side[y] = true;
                    stack.push(y);
                }
            }
        }
        let a: Vec<_> = (0..n).filter(|&x| side[x]).collect();
        let b: Vec<_> = (0..n).filter(|&x| !side[x]).collect();
        let candidates: Vec<(usize, usize)> =
            a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).filter(|&p| p != (u, v) && p != (v, u)).collect();
        if candidates.is_empty() {
            return Err(Error::ConstructionFailed(MAX_REPAIR_PASSES));
        }
        let (x, y) = candidates[rng.gen_range(0..candidates.len())];
        add(&mut adj, x, y);
    }
    Err(Error::ConstructionFailed(MAX_REPAIR_PASSES))
}
