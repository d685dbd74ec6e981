//! Partially oriented multigraphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph whose edges are either undirected or carry one direction.
///
/// Undirected edges are keyed by `(min, max)`; arcs by `(tail, head)`. Counts
/// above one only appear after [`MixedGraph::contract`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MixedGraph {
    n: usize,
    undirected: BTreeMap<(usize, usize), usize>,
    arcs: BTreeMap<(usize, usize), usize>,
}

/// Result of contracting a vertex set.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: MixedGraph,
    /// Old vertex id to new vertex id.
    pub map: Vec<usize>,
    /// Id of the merged vertex in `graph`.
    pub label: usize,
    /// Edges and arcs (with multiplicity) that became loops and were removed.
    pub dropped: usize,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn bump(map: &mut BTreeMap<(usize, usize), usize>, k: (usize, usize), by: usize) {
    *map.entry(k).or_insert(0) += by;
}

fn take_one(map: &mut BTreeMap<(usize, usize), usize>, k: (usize, usize)) -> bool {
    match map.get_mut(&k) {
        Some(c) if *c > 1 => {
            *c -= 1;
            true
        }
        Some(_) => {
            map.remove(&k);
            true
        }
        None => false,
    }
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph { n, ..Default::default() }
    }

    /// All edges of `g`, none oriented.
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = MixedGraph::new(g.vertex_count());
        for &(u, v) in g.edges() {
            m.undirected.insert((u, v), 1);
        }
        m
    }

    /// A fully oriented graph from an arc list.
    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        let mut m = MixedGraph::new(n);
        for (u, v) in arcs {
            m.add_arc(u, v)?;
        }
        Ok(m)
    }

    fn check(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::IndexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u, v)?;
        bump(&mut self.undirected, key(u, v), 1);
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u, v)?;
        bump(&mut self.arcs, (u, v), 1);
        Ok(())
    }

    /// Turns one copy of the undirected edge `{u, v}` into the arc `u -> v`.
    pub fn orient(&mut self, u: usize, v: usize) -> Result<()> {
        if !take_one(&mut self.undirected, key(u, v)) {
            return Err(Error::NoSuchEdge { u, v });
        }
        bump(&mut self.arcs, (u, v), 1);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn undirected_count(&self) -> usize {
        self.undirected.values().sum()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().sum()
    }

    /// Edges plus arcs, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.undirected_count() + self.arc_count()
    }

    pub fn is_fully_oriented(&self) -> bool {
        self.undirected.is_empty()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains_key(&(u, v))
    }

    pub fn has_undirected(&self, u: usize, v: usize) -> bool {
        self.undirected.contains_key(&key(u, v))
    }

    /// Distinct arcs with their multiplicity.
    pub fn arcs(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.arcs.iter().map(|(&k, &c)| (k, c))
    }

    /// Distinct undirected edges with their multiplicity.
    pub fn undirected_edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.undirected.iter().map(|(&k, &c)| (k, c))
    }

    /// Merges `set` into one vertex. Remaining vertices keep their relative
    /// order and are renumbered `0..k`; the merged vertex gets id `k`. Edges
    /// and arcs between merged vertices are deleted, parallel copies are
    /// kept as multiplicities, and arc directions are preserved.
    pub fn contract(&self, set: &[usize]) -> Result<Contraction> {
        if set.is_empty() {
            return Err(Error::EmptyContractionSet);
        }
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { vertex: v, n: self.n });
            }
            inside[v] = true;
        }
        let mut map = vec![0; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !inside[v] {
                map[v] = next;
                next += 1;
            }
        }
        let label = next;
        for v in 0..self.n {
            if inside[v] {
                map[v] = label;
            }
        }
        let mut graph = MixedGraph::new(label + 1);
        let mut dropped = 0;
        for (&(u, v), &c) in &self.undirected {
            let (a, b) = (map[u], map[v]);
            if a == b {
                dropped += c;
            } else {
                bump(&mut graph.undirected, key(a, b), c);
            }
        }
        for (&(u, v), &c) in &self.arcs {
            let (a, b) = (map[u], map[v]);
            if a == b {
                dropped += c;
            } else {
                bump(&mut graph.arcs, (a, b), c);
            }
        }
        Ok(Contraction { graph, map, label, dropped })
    }

    /// Sorted, deduplicated adjacency lists for traversal.
    pub fn view(&self) -> MixedView {
        let mut out = vec![Vec::new(); self.n];
        let mut inn = vec![Vec::new(); self.n];
        let mut und = vec![Vec::new(); self.n];
        for &(u, v) in self.arcs.keys() {
            out[u].push(v);
            inn[v].push(u);
        }
        for &(u, v) in self.undirected.keys() {
            und[u].push(v);
            und[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()).chain(und.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        MixedView { out, inn, und }
    }
}

/// Adjacency snapshot of a [`MixedGraph`].
#[derive(Debug, Clone)]
pub struct MixedView {
    pub out: Vec<Vec<usize>>,
    pub inn: Vec<Vec<usize>>,
    pub und: Vec<Vec<usize>>,
}
