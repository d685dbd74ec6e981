//! Local orientation of one connector.
//!
//! A connector is viewed from its center `x` (the vertex whose reachability
//! it serves) towards its partner `y`. Each of the two paths has a first edge
//! at `x` and a last edge at `y`; for a single-edge path both are the same
//! edge. Every edge status is read relative to the `x -> y` traversal.

use serde::Serialize;

use super::arcs::{ArcState, RoundArcs};
use super::overlap::Connector;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Direction of one connector edge relative to the `x -> y` traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Unset,
    Along,
    Against,
}

use Status::{Against, Along, Unset};

/// Which local pattern of pre-existing arcs decided the orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// The two paths can be completed to a directed cycle.
    Cycle,
    /// Both first edges point into the center.
    CenterSink,
    /// One first edge points into the center, the other path's last edge
    /// leaves the partner.
    CrossInward,
    /// A middle vertex points at both the center and the partner.
    MiddleSource,
    /// Both first edges leave the center.
    CenterSource,
    /// Both last edges point into the partner.
    PartnerSink,
    /// Both last edges leave the partner.
    PartnerSource,
    /// One first edge leaves the center, the other path's last edge enters
    /// the partner.
    CrossOutward,
    /// Both the center and the partner point at a middle vertex.
    MiddleSink,
}

/// Statuses as `[path][slot]` with slot 0 the first edge and slot 1 the last.
pub type Slots = [[Status; 2]; 2];

struct Plan {
    s: Slots,
    single: [bool; 2],
}

impl Plan {
    fn get(&self, k: usize, slot: usize) -> Status {
        self.s[k][slot]
    }

    fn fill(&mut self, k: usize, slot: usize, st: Status) {
        if self.s[k][slot] == Unset {
            self.s[k][slot] = st;
            if self.single[k] {
                self.s[k][1 - slot] = st;
            }
        }
    }

    fn path_fits(&self, k: usize, st: Status) -> bool {
        self.s[k].iter().all(|&x| x == Unset || x == st)
    }

    /// Direction of path `k` when all its set edges agree.
    fn path_dir(&self, k: usize) -> Option<Status> {
        match (self.s[k][0], self.s[k][1]) {
            (Unset, Unset) => None,
            (a, Unset) | (Unset, a) => Some(a),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

fn flip(st: Status) -> Status {
    match st {
        Along => Against,
        Against => Along,
        Unset => Unset,
    }
}

/// Decides every connector edge from the pre-assigned ones.
///
/// `single[k]` marks a single-edge path, whose two slots must agree. Set
/// slots never change.
pub fn plan_orientation(slots: Slots, single: [bool; 2]) -> Result<(Case, Slots)> {
    let mut p = Plan { s: slots, single };
    let (f1, l1, f2, l2) = (p.get(0, 0), p.get(0, 1), p.get(1, 0), p.get(1, 1));
    let case = if p.path_fits(0, Along) && p.path_fits(1, Against) {
        p.fill(0, 0, Along);
        p.fill(0, 1, Along);
        p.fill(1, 0, Against);
        p.fill(1, 1, Against);
        Case::Cycle
    } else if p.path_fits(0, Against) && p.path_fits(1, Along) {
        p.fill(0, 0, Against);
        p.fill(0, 1, Against);
        p.fill(1, 0, Along);
        p.fill(1, 1, Along);
        Case::Cycle
    } else if f1 == Against && f2 == Against {
        p.fill(0, 1, Against);
        p.fill(1, 1, Against);
        Case::CenterSink
    } else if f1 == Against && l2 == Against {
        p.fill(1, 0, Along);
        p.fill(0, 1, Against);
        Case::CrossInward
    } else if f2 == Against && l1 == Against {
        p.fill(0, 0, Along);
        p.fill(1, 1, Against);
        Case::CrossInward
    } else if f1 == Against && l1 == Along {
        p.fill(1, 0, Along);
        p.fill(1, 1, Along);
        Case::MiddleSource
    } else if f2 == Against && l2 == Along {
        p.fill(0, 0, Along);
        p.fill(0, 1, Along);
        Case::MiddleSource
    } else if f1 == Along && f2 == Along {
        p.fill(0, 1, Along);
        p.fill(1, 1, Against);
        Case::CenterSource
    } else if l1 == Along && l2 == Along {
        p.fill(0, 0, Along);
        p.fill(1, 0, Against);
        Case::PartnerSink
    } else if l1 == Against && l2 == Against {
        p.fill(0, 0, Against);
        p.fill(1, 0, Along);
        Case::PartnerSource
    } else if f1 == Along && l2 == Along {
        p.fill(1, 0, Against);
        p.fill(0, 1, Along);
        Case::CrossOutward
    } else if f2 == Along && l1 == Along {
        p.fill(0, 0, Against);
        p.fill(1, 1, Along);
        Case::CrossOutward
    } else if f1 == Along && l1 == Against {
        p.fill(1, 0, Against);
        p.fill(1, 1, Against);
        Case::MiddleSink
    } else if f2 == Along && l2 == Against {
        p.fill(0, 0, Against);
        p.fill(0, 1, Against);
        Case::MiddleSink
    } else {
        return Err(Error::CaseFallthrough { a: 0, b: 0 });
    };

    // leftovers: middles pass through, untouched paths close the cycle
    for k in 0..2 {
        match (p.get(k, 0), p.get(k, 1)) {
            (Unset, Unset) => {
                let st = p.path_dir(1 - k).map_or(Along, flip);
                p.fill(k, 0, st);
                p.fill(k, 1, st);
            }
            (Unset, st) => p.fill(k, 0, st),
            (st, Unset) => p.fill(k, 1, st),
            _ => {}
        }
    }
    Ok((case, p.s))
}

/// What happened while orienting one connector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectorOutcome {
    pub case: Case,
    /// The case rule failed the local reachability check and another
    /// completion of the free edges was used.
    pub fallback: bool,
    /// The local reachability check holds after orientation.
    pub verified: bool,
    pub new_arcs: Vec<(usize, usize)>,
}

/// Round context the local check needs.
pub struct LocalTargets<'a> {
    pub in_core: &'a [bool],
    pub in_out_marks: &'a [bool],
    pub in_back_marks: &'a [bool],
    /// Vertices of the out-path, the return path or the previous core.
    pub on_frame: &'a [bool],
}

/// Maximum local distance between a connector endpoint and the opposite side.
pub const LOCAL_REACH: usize = 5;

fn endpoints(path: &[usize]) -> [(usize, usize); 2] {
    let n = path.len();
    [(path[0], path[1]), (path[n - 2], path[n - 1])]
}

/// Tail and head of slot `slot` of path `k` for a given status.
fn arc_of(path: &[usize], slot: usize, st: Status) -> (usize, usize) {
    let (u, v) = endpoints(path)[slot];
    if st == Along {
        (u, v)
    } else {
        (v, u)
    }
}

fn local_ok(c: &Connector, round: &RoundArcs, t: &LocalTargets<'_>) -> bool {
    let side_ok = |v: usize, target: &[bool]| {
        let hit = |w: usize| t.in_core[w] || target[w];
        round.reaches(v, LOCAL_REACH, false, hit) && round.reaches(v, LOCAL_REACH, true, hit)
    };
    if c.owner.serves_a() && !side_ok(c.a, t.in_back_marks) {
        return false;
    }
    if c.owner.serves_b() && !side_ok(c.b, t.in_out_marks) {
        return false;
    }
    c.middles().filter(|&m| !t.on_frame[m]).all(|m| !round.out(m).is_empty() && !round.inn(m).is_empty())
}

/// Orients the free edges of `c`, never touching an assigned arc.
///
/// The case rule is tried first. If the result fails the local check (the
/// served endpoint reaches and is reached from the opposite side or the old
/// core within [`LOCAL_REACH`] round arcs, and every new middle vertex has an
/// in-arc and an out-arc), every completion of the free edges is tried in a
/// fixed order and the first passing one is kept.
#[allow(clippy::needless_range_loop)]
pub fn orient_connector(
    g: &Graph,
    state: &mut ArcState,
    round: &mut RoundArcs,
    c: &Connector,
    targets: &LocalTargets<'_>,
) -> Result<ConnectorOutcome> {
    let x = if c.owner.serves_a() { c.a } else { c.b };
    let paths: [Vec<usize>; 2] = c.paths.clone().map(|p| {
        let mut v = p.vertices;
        if v[0] != x {
            v.reverse();
        }
        v
    });
    let mut slots: Slots = [[Unset; 2]; 2];
    for k in 0..2 {
        for slot in 0..2 {
            let (u, v) = endpoints(&paths[k])[slot];
            slots[k][slot] = match state.get(g, u, v)? {
                None => Unset,
                Some(true) => Along,
                Some(false) => Against,
            };
        }
    }
    let single = [paths[0].len() == 2, paths[1].len() == 2];
    let (case, plan) = plan_orientation(slots, single).map_err(|_| Error::CaseFallthrough { a: c.a, b: c.b })?;

    // existing arcs of this connector count as round arcs for the check
    for k in 0..2 {
        for slot in 0..2 {
            if slots[k][slot] != Unset {
                let (u, v) = arc_of(&paths[k], slot, slots[k][slot]);
                round.add(u, v);
            }
        }
    }

    let mut free: Vec<(usize, usize)> = Vec::new();
    for k in 0..2 {
        for slot in 0..2 {
            if slots[k][slot] == Unset {
                let e = endpoints(&paths[k])[slot];
                if !free.contains(&e) {
                    free.push(e);
                }
            }
        }
    }
    let planned: Vec<(usize, usize)> = free
        .iter()
        .map(|&(u, v)| {
            let (k, slot) = (0..2)
                .flat_map(|k| (0..2).map(move |s| (k, s)))
                .find(|&(k, s)| endpoints(&paths[k])[s] == (u, v))
                .expect("free edge belongs to a slot");
            arc_of(&paths[k], slot, plan[k][slot])
        })
        .collect();

    let apply = |state: &mut ArcState, round: &mut RoundArcs, arcs: &[(usize, usize)]| -> Result<()> {
        for &(u, v) in arcs {
            state.set(g, u, v)?;
            round.add(u, v);
        }
        Ok(())
    };
    let undo = |state: &mut ArcState, round: &mut RoundArcs, arcs: &[(usize, usize)]| {
        for &(u, v) in arcs {
            state.clear(g, u, v);
            round.remove(u, v);
        }
    };

    apply(state, round, &planned)?;
    if local_ok(c, round, targets) {
        return Ok(ConnectorOutcome { case, fallback: false, verified: true, new_arcs: planned });
    }
    undo(state, round, &planned);
    for mask in 0u32..(1 << free.len()) {
        let trial: Vec<(usize, usize)> =
            free.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) }).collect();
        apply(state, round, &trial)?;
        if local_ok(c, round, targets) {
            return Ok(ConnectorOutcome { case, fallback: true, verified: true, new_arcs: trial });
        }
        undo(state, round, &trial);
    }
    apply(state, round, &planned)?;
    Ok(ConnectorOutcome { case, fallback: false, verified: false, new_arcs: planned })
}
