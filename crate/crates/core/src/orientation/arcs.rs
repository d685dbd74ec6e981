//! Edge directions assigned so far, and the arcs added in the current round.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Direction per edge id of the host graph.
#[derive(Debug, Clone)]
pub struct ArcState {
    /// `Some(true)` means low id to high id.
    dir: Vec<Option<bool>>,
    assigned: usize,
}

impl ArcState {
    pub fn new(g: &Graph) -> Self {
        ArcState { dir: vec![None; g.edge_count()], assigned: 0 }
    }

    /// `Some(true)` if `u -> v` is assigned, `Some(false)` for `v -> u`.
    pub fn get(&self, g: &Graph, u: usize, v: usize) -> Result<Option<bool>> {
        let id = g.edge_id(u, v).ok_or(Error::NoSuchEdge { u, v })?;
        Ok(self.dir[id].map(|low_to_high| low_to_high == (u < v)))
    }

    /// Assigns `u -> v`. Returns whether the edge was unassigned before;
    /// assigning the opposite direction of an existing arc is an error.
    pub fn set(&mut self, g: &Graph, u: usize, v: usize) -> Result<bool> {
        let id = g.edge_id(u, v).ok_or(Error::NoSuchEdge { u, v })?;
        match self.dir[id] {
            None => {
                self.dir[id] = Some(u < v);
                self.assigned += 1;
                Ok(true)
            }
            Some(d) if d == (u < v) => Ok(false),
            Some(_) => Err(Error::InvariantViolation {
                claim: "arc_stability".into(),
                detail: format!("arc {v}->{u} would be reversed"),
            }),
        }
    }

    pub fn clear(&mut self, g: &Graph, u: usize, v: usize) {
        if let Some(id) = g.edge_id(u, v) {
            if self.dir[id].take().is_some() {
                self.assigned -= 1;
            }
        }
    }

    pub fn assigned(&self) -> usize {
        self.assigned
    }

    /// All assigned arcs as `(tail, head)`, in edge-id order.
    pub fn arcs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.dir.iter().enumerate().filter_map(move |(id, d)| {
            let (u, v) = g.edge(id);
            d.map(|low_to_high| if low_to_high { (u, v) } else { (v, u) })
        })
    }
}

/// Sparse adjacency of the arcs placed during one round.
#[derive(Debug, Clone, Default)]
pub struct RoundArcs {
    out: HashMap<usize, Vec<usize>>,
    inn: HashMap<usize, Vec<usize>>,
    list: Vec<(usize, usize)>,
}

impl RoundArcs {
    pub fn add(&mut self, u: usize, v: usize) {
        if self.out.get(&u).is_some_and(|l| l.contains(&v)) {
            return;
        }
        self.out.entry(u).or_default().push(v);
        self.inn.entry(v).or_default().push(u);
        self.list.push((u, v));
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        if let Some(l) = self.out.get_mut(&u) {
            l.retain(|&w| w != v);
        }
        if let Some(l) = self.inn.get_mut(&v) {
            l.retain(|&w| w != u);
        }
        self.list.retain(|&a| a != (u, v));
    }

    pub fn out(&self, v: usize) -> &[usize] {
        self.out.get(&v).map_or(&[], |l| l.as_slice())
    }

    pub fn inn(&self, v: usize) -> &[usize] {
        self.inn.get(&v).map_or(&[], |l| l.as_slice())
    }

    pub fn list(&self) -> &[(usize, usize)] {
        &self.list
    }

    /// Whether `from` reaches a vertex accepted by `hit` within `depth` arcs,
    /// following arcs forwards (or backwards when `reverse`).
    pub fn reaches(&self, from: usize, depth: usize, reverse: bool, hit: impl Fn(usize) -> bool) -> bool {
        let mut frontier = vec![from];
        let mut seen = vec![from];
        for _ in 0..depth {
            let mut next = Vec::new();
            for &v in &frontier {
                let step = if reverse { self.inn(v) } else { self.out(v) };
                for &w in step {
                    if hit(w) {
                        return true;
                    }
                    if !seen.contains(&w) {
                        seen.push(w);
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        false
    }
}
