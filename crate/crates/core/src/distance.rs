//! Breadth-first distances, diameters and strong connectivity.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mixed::{MixedGraph, MixedView};

/// How edges may be traversed.
///
/// In the `Forward`/`Backward` modes arcs are followed only along/against
/// their direction, while undirected edges work both ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Undirected,
    Forward,
    Backward,
}

pub trait Traverse {
    fn vertex_count(&self) -> usize;
    fn for_each_step<F: FnMut(usize)>(&self, v: usize, mode: Mode, f: F);
}

impl Traverse for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }

    fn for_each_step<F: FnMut(usize)>(&self, v: usize, _mode: Mode, f: F) {
        self.neighbors(v).for_each(f)
    }
}

impl Traverse for MixedView {
    fn vertex_count(&self) -> usize {
        self.out.len()
    }

    fn for_each_step<F: FnMut(usize)>(&self, v: usize, mode: Mode, mut f: F) {
        if mode != Mode::Backward {
            self.out[v].iter().for_each(|&w| f(w));
        }
        if mode != Mode::Forward {
            self.inn[v].iter().for_each(|&w| f(w));
        }
        self.und[v].iter().for_each(|&w| f(w));
    }
}

/// Compact directed graph for repeated traversals.
#[derive(Debug, Clone)]
pub struct Digraph {
    out_start: Vec<usize>,
    out_list: Vec<usize>,
    in_start: Vec<usize>,
    in_list: Vec<usize>,
}

fn csr(n: usize, pairs: impl Iterator<Item = (usize, usize)> + Clone) -> (Vec<usize>, Vec<usize>) {
    let mut start = vec![0; n + 1];
    for (u, _) in pairs.clone() {
        start[u + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut list = vec![0; start[n]];
    for (u, v) in pairs {
        list[fill[u]] = v;
        fill[u] += 1;
    }
    for u in 0..n {
        list[start[u]..start[u + 1]].sort_unstable();
    }
    (start, list)
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let (out_start, out_list) = csr(n, arcs.iter().copied());
        let (in_start, in_list) = csr(n, arcs.iter().map(|&(u, v)| (v, u)));
        Digraph { out_start, out_list, in_start, in_list }
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out_list[self.out_start[v]..self.out_start[v + 1]]
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        &self.in_list[self.in_start[v]..self.in_start[v + 1]]
    }
}

impl Traverse for Digraph {
    fn vertex_count(&self) -> usize {
        self.out_start.len() - 1
    }

    fn for_each_step<F: FnMut(usize)>(&self, v: usize, mode: Mode, mut f: F) {
        if mode != Mode::Backward {
            self.out(v).iter().for_each(|&w| f(w));
        }
        if mode != Mode::Forward {
            self.inn(v).iter().for_each(|&w| f(w));
        }
    }
}

/// BFS distances; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap(Vec<Option<usize>>);

impl DistanceMap {
    pub fn get(&self, v: usize) -> Option<usize> {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.0
    }

    pub fn all_reachable(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    /// Largest finite distance, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<usize> {
        self.0.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

const UNSEEN: u32 = u32::MAX;

fn bfs_raw<T: Traverse>(g: &T, sources: &[usize], mode: Mode, dist: &mut [u32], queue: &mut Vec<usize>) {
    dist.fill(UNSEEN);
    queue.clear();
    for &s in sources {
        if dist[s] == UNSEEN {
            dist[s] = 0;
            queue.push(s);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let next = dist[v] + 1;
        g.for_each_step(v, mode, |w| {
            if dist[w] == UNSEEN {
                dist[w] = next;
                queue.push(w);
            }
        });
    }
}

/// Multi-source BFS under the given traversal mode.
pub fn bfs_distance<T: Traverse>(g: &T, sources: &[usize], mode: Mode) -> Result<DistanceMap> {
    if sources.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    let n = g.vertex_count();
    if let Some(&s) = sources.iter().find(|&&s| s >= n) {
        return Err(Error::IndexOutOfRange { vertex: s, n });
    }
    let mut dist = vec![UNSEEN; n];
    let mut queue = Vec::with_capacity(n);
    bfs_raw(g, sources, mode, &mut dist, &mut queue);
    Ok(DistanceMap(dist.into_iter().map(|d| (d != UNSEEN).then_some(d as usize)).collect()))
}

/// True if every vertex reaches and is reached from vertex 0.
pub fn is_strongly_connected<T: Traverse>(g: &T, mode_pair: (Mode, Mode)) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut dist = vec![UNSEEN; n];
    let mut queue = Vec::with_capacity(n);
    for mode in [mode_pair.0, mode_pair.1] {
        bfs_raw(g, &[0], mode, &mut dist, &mut queue);
        if queue.len() != n {
            return false;
        }
    }
    true
}

/// Maximum BFS distance over all ordered pairs, `None` if some pair is
/// disconnected. Sources are processed in parallel.
pub fn diameter<T: Traverse + Sync>(g: &T, mode: Mode) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(0);
    }
    let back = match mode {
        Mode::Forward => Mode::Backward,
        Mode::Backward => Mode::Forward,
        Mode::Undirected => Mode::Undirected,
    };
    if !is_strongly_connected(g, (mode, back)) {
        return None;
    }
    (0..n)
        .into_par_iter()
        .map_init(
            || (vec![UNSEEN; n], Vec::with_capacity(n)),
            |(dist, queue), s| {
                bfs_raw(g, &[s], mode, dist, queue);
                dist.iter().copied().max().unwrap_or(0) as usize
            },
        )
        .max()
}

/// Diameter of the underlying undirected graph.
pub fn undirected_diameter(g: &Graph) -> Option<usize> {
    diameter(g, Mode::Undirected)
}

/// Directed diameter of a fully oriented graph; `Ok(None)` means some
/// ordered pair has no directed path.
pub fn directed_diameter(d: &MixedGraph) -> Result<Option<usize>> {
    if !d.is_fully_oriented() {
        return Err(Error::UnorientedEdgesPresent(d.undirected_count()));
    }
    let arcs: Vec<_> = d.arcs().map(|(a, _)| a).collect();
    Ok(arc_diameter(d.vertex_count(), &arcs))
}

/// Directed diameter of an arc list on `n` vertices.
pub fn arc_diameter(n: usize, arcs: &[(usize, usize)]) -> Option<usize> {
    diameter(&Digraph::from_arcs(n, arcs), Mode::Forward)
}
