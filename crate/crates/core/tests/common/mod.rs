//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use strong_orient::Graph;

pub const INF: usize = usize::MAX / 4;

/// All-pairs distances by Floyd-Warshall over weighted directed steps.
pub fn floyd(n: usize, steps: &[(usize, usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v, w) in steps {
        d[u][v] = d[u][v].min(w);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn undirected_steps(g: &Graph) -> Vec<(usize, usize, usize)> {
    g.edges().iter().flat_map(|&(u, v)| [(u, v, 1), (v, u, 1)]).collect()
}

/// Diameter of a digraph by Floyd-Warshall; `None` if not strongly connected.
pub fn arc_diameter(n: usize, arcs: &[(usize, usize)]) -> Option<usize> {
    let steps: Vec<_> = arcs.iter().map(|&(u, v)| (u, v, 1)).collect();
    let d = floyd(n, &steps);
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

pub fn undirected_diameter(g: &Graph) -> Option<usize> {
    let d = floyd(g.vertex_count(), &undirected_steps(g));
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

pub fn connected_without(g: &Graph, skip: usize) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if i == skip {
                continue;
            }
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Bridges of a connected graph by deleting each edge in turn.
pub fn bridges_by_deletion(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.edge_count()).filter(|&i| !connected_without(g, i)).map(|i| g.edge(i)).collect()
}

/// Minimum diameter over all `2^m` orientations, no pruning.
pub fn naive_oriented_diameter(g: &Graph) -> Option<usize> {
    let m = g.edge_count();
    assert!(m <= 16, "naive oracle is for tiny graphs");
    (0u32..1 << m)
        .filter_map(|mask| {
            let arcs: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            arc_diameter(g.vertex_count(), &arcs)
        })
        .min()
}

/// Random simple graph from a seed and an edge-probability per mille.
pub fn random_graph(n: usize, per_mille: u32, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if ((state >> 33) % 1000) < per_mille as u64 {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, pairs).unwrap()
}

/// `blocks` random bridgeless blocks of `size` vertices and minimum degree
/// `delta`, consecutive blocks joined by two random edges. Long and thin, so
/// the round loop runs many times; may contain a bridge when both joining
/// edges coincide.
pub fn block_chain(blocks: usize, size: usize, delta: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for b in 0..blocks {
        let g = strong_orient::generators::random_min_degree_bridgeless(size, delta, seed * 100 + b as u64).unwrap();
        pairs.extend(g.edges().iter().map(|&(u, v)| (b * size + u, b * size + v)));
        if b + 1 < blocks {
            for _ in 0..2 {
                let (u, v) = (rng.gen_range(0..size), rng.gen_range(0..size));
                pairs.push((b * size + u, (b + 1) * size + v));
            }
        }
    }
    Graph::from_edges(blocks * size, pairs).unwrap()
}

/// Diameter of the arcs on the vertex subset `vertices`, relabelled.
pub fn arc_diameter_on(vertices: &[usize], arcs: &[(usize, usize)]) -> Option<usize> {
    let index = |v: usize| vertices.iter().position(|&w| w == v).expect("arc inside the vertex set");
    let local: Vec<_> = arcs.iter().map(|&(u, v)| (index(u), index(v))).collect();
    arc_diameter(vertices.len(), &local)
}
