//! Extension of an oriented core to the whole graph by ears.
//!
//! Vertices outside the core are visited by BFS layer from the core, lowest
//! id first within a layer. A visited vertex that is still outside the
//! oriented region is attached to its best absorbed neighbour and closed off
//! by a shortest path through unabsorbed vertices back into the region; the
//! resulting ear is oriented as a directed path in whichever direction keeps
//! its interior closer to the core. Edges left over at the end join absorbed
//! vertices and are oriented from lower to higher id.

use serde::Serialize;

use crate::distance::{arc_diameter, bfs_distance, Digraph, Mode};
use crate::epsilon::extension_constant;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::mixed::MixedGraph;
use crate::orientation::core_diameter;

/// One absorbed ear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EarRecord {
    /// The ear in its chosen traversal direction; both ends were absorbed
    /// before, the interior was not.
    pub path: Path,
    /// BFS layer of the vertex that triggered the ear.
    pub layer: usize,
    /// Deepest layer among interior vertices.
    pub deepest: usize,
}

/// Full orientation built around a core, with what it cost.
#[derive(Debug, Clone, Serialize)]
pub struct Extension {
    pub arcs: Vec<(usize, usize)>,
    pub ears: Vec<EarRecord>,
    /// Single edges between absorbed vertices oriented at the end.
    pub chords: usize,
    pub core_diameter: usize,
    pub diameter: Option<usize>,
    /// `diam(core) + 2 L (L + 1)`, absent when no radius was given.
    pub bound: Option<usize>,
    /// Largest directed distance from or to the core over all vertices.
    pub max_core_distance: Option<usize>,
    /// Ears longer than `2 layer + 1`.
    pub long_ears: usize,
}

impl Extension {
    pub fn within_bound(&self) -> bool {
        match (self.diameter, self.bound) {
            (Some(d), Some(b)) => d <= b,
            (Some(_), None) => true,
            (None, _) => false,
        }
    }

    /// Whether every vertex is within `L (L + 1)` of the core in both
    /// directions, the per-vertex form of the bound.
    pub fn per_vertex_ok(&self, cap: usize) -> bool {
        self.max_core_distance.is_some_and(|d| d <= cap * (cap + 1))
    }
}

/// Reusable BFS scratch space with timestamped visits.
struct Search {
    stamp: Vec<u32>,
    now: u32,
    parent: Vec<usize>,
    queue: Vec<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search { stamp: vec![0; n], now: 0, parent: vec![usize::MAX; n], queue: Vec::new() }
    }

    /// Shortest ear `anchor, v, ..., end` whose interior avoids `absorbed`
    /// and which does not return over the edge `v anchor`. `end` may equal
    /// `anchor`.
    fn ear(&mut self, g: &Graph, absorbed: &[bool], v: usize, anchor: usize) -> Result<Vec<usize>> {
        self.now += 1;
        let now = self.now;
        self.queue.clear();
        self.queue.push(v);
        self.stamp[v] = now;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for w in g.neighbors(u) {
                if absorbed[w] {
                    if u == v && w == anchor {
                        continue;
                    }
                    let mut walk = vec![w];
                    let mut x = u;
                    while x != v {
                        walk.push(x);
                        x = self.parent[x];
                    }
                    walk.push(v);
                    walk.push(anchor);
                    walk.reverse();
                    return Ok(walk);
                }
                if self.stamp[w] != now {
                    self.stamp[w] = now;
                    self.parent[w] = u;
                    self.queue.push(w);
                }
            }
        }
        Err(Error::NoEar(v))
    }
}

/// Shortest ear through the unabsorbed vertex `v` starting at its absorbed
/// neighbour `anchor`.
pub fn find_ear(g: &Graph, absorbed: &[bool], v: usize, anchor: usize) -> Result<Path> {
    if absorbed[v] || !absorbed[anchor] || !g.has_edge(v, anchor) {
        return Err(Error::NoEar(v));
    }
    Ok(Path::new(Search::new(g.vertex_count()).ear(g, absorbed, v, anchor)?))
}

/// Extends the fully oriented `core` (spanning `core_vertices`) to every
/// edge of `g` and checks the diameter against `diam(core) + 2 L (L + 1)`.
pub fn extend(g: &Graph, core_vertices: &[usize], core: &MixedGraph, cap: usize) -> Result<Extension> {
    let ext = extend_unchecked(g, core_vertices, core, cap)?;
    match (ext.diameter, ext.bound) {
        (Some(d), Some(b)) if d <= b => Ok(ext),
        (d, b) => Err(Error::BoundViolated {
            measured: d.map_or("unreachable".into(), |d| d.to_string()),
            bound: b.unwrap_or(0),
        }),
    }
}

/// [`extend`] without failing on the diameter bound; the result records it.
pub fn extend_unchecked(g: &Graph, core_vertices: &[usize], core: &MixedGraph, cap: usize) -> Result<Extension> {
    if cap < 2 {
        return Err(Error::CapTooSmall(cap));
    }
    absorb(g, core_vertices, core, Some(cap))
}

/// Ear orientation from a single start vertex with no radius limit and no
/// diameter guarantee; usable for any connected bridgeless graph.
pub fn plain_ear_orientation(g: &Graph, start: usize) -> Result<Extension> {
    absorb(g, &[start], &MixedGraph::new(g.vertex_count()), None)
}

fn absorb(g: &Graph, core_vertices: &[usize], core: &MixedGraph, cap: Option<usize>) -> Result<Extension> {
    let n = g.vertex_count();
    if core_vertices.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    if !core.is_fully_oriented() {
        return Err(Error::UnorientedEdgesPresent(core.undirected_count()));
    }
    let core_arcs: Vec<(usize, usize)> = core.arcs().map(|(a, _)| a).collect();
    let core_diam = core_diameter(n, core_vertices, &core_arcs).ok_or(Error::CoreNotStrong)?;

    let layer = bfs_distance(g, core_vertices, Mode::Undirected)?;
    for v in 0..n {
        match (layer.get(v), cap) {
            (None, _) => return Err(Error::VertexTooFar { vertex: v, distance: "unreachable".into(), cap: cap.unwrap_or(0) }),
            (Some(d), Some(c)) if d > c => {
                return Err(Error::VertexTooFar { vertex: v, distance: d.to_string(), cap: c });
            }
            _ => {}
        }
    }

    let mut absorbed = vec![false; n];
    let mut from_core = vec![usize::MAX; n];
    let mut to_core = vec![usize::MAX; n];
    for &v in core_vertices {
        absorbed[v] = true;
        from_core[v] = 0;
        to_core[v] = 0;
    }
    let mut oriented = vec![false; g.edge_count()];
    let mut arcs = Vec::with_capacity(g.edge_count());
    for &(u, v) in &core_arcs {
        let id = g.edge_id(u, v).ok_or(Error::NoSuchEdge { u, v })?;
        oriented[id] = true;
        arcs.push((u, v));
    }

    let mut order: Vec<usize> = (0..n).filter(|&v| !absorbed[v]).collect();
    order.sort_by_key(|&v| (layer.get(v), v));
    let mut search = Search::new(n);
    let mut ears = Vec::new();
    let mut long_ears = 0;
    for &v in &order {
        if absorbed[v] {
            continue;
        }
        let anchor = g
            .neighbors(v)
            .filter(|&w| absorbed[w])
            .min_by_key(|&w| (from_core[w].max(to_core[w]), w))
            .ok_or(Error::NoEar(v))?;
        let mut walk = search.ear(g, &absorbed, v, anchor)?;
        let (x, y) = (walk[0], walk[walk.len() - 1]);
        let k = walk.len() - 2;
        // worst interior eccentricity w.r.t. the core for each direction
        let cost = |head: usize, tail: usize| {
            (1..=k).map(|i| (from_core[head] + i).max(k + 1 - i + to_core[tail])).max().unwrap_or(0)
        };
        let forward = cost(x, y);
        let backward = cost(y, x);
        if backward < forward || (backward == forward && y < x) {
            walk.reverse();
        }
        let (x, y) = (walk[0], walk[walk.len() - 1]);
        for (i, &w) in walk.iter().enumerate().take(k + 1).skip(1) {
            absorbed[w] = true;
            from_core[w] = from_core[x] + i;
            to_core[w] = k + 1 - i + to_core[y];
        }
        for pair in walk.windows(2) {
            let id = g.edge_id(pair[0], pair[1]).expect("ear steps are edges");
            oriented[id] = true;
            arcs.push((pair[0], pair[1]));
        }
        let ear_layer = layer.get(v).unwrap_or(0);
        let deepest = walk[1..=k].iter().filter_map(|&w| layer.get(w)).max().unwrap_or(0);
        if walk.len() - 1 > 2 * ear_layer + 1 {
            long_ears += 1;
        }
        ears.push(EarRecord { path: Path::new(walk), layer: ear_layer, deepest });
    }

    let mut chords = 0;
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if !oriented[id] {
            oriented[id] = true;
            arcs.push((u, v));
            chords += 1;
        }
    }

    let diameter = arc_diameter(n, &arcs);
    let digraph = Digraph::from_arcs(n, &arcs);
    let out = bfs_distance(&digraph, core_vertices, Mode::Forward)?;
    let back = bfs_distance(&digraph, core_vertices, Mode::Backward)?;
    let max_core_distance = (0..n).try_fold(0usize, |m, v| Some(m.max(out.get(v)?).max(back.get(v)?)));
    Ok(Extension {
        arcs,
        ears,
        chords,
        core_diameter: core_diam,
        diameter,
        bound: cap.map(|c| core_diam + extension_constant(c)),
        max_core_distance,
        long_ears,
    })
}
