//! Overlap predicate, second-order index sets and connector selection.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Whether `u` and `w` are joined by two internally disjoint paths of length
/// at most two.
pub fn overlapping(g: &Graph, u: usize, w: usize) -> Result<bool> {
    if u == w {
        return Err(Error::SameVertex(u, w));
    }
    let common = common_count(g, u, w, 2);
    Ok(common >= 2 || (common >= 1 && g.has_edge(u, w)))
}

fn common_count(g: &Graph, u: usize, w: usize, stop: usize) -> usize {
    let (mut a, mut b) = (g.neighbors(u).peekable(), g.neighbors(w).peekable());
    let mut count = 0;
    while let (Some(&x), Some(&y)) = (a.peek(), b.peek()) {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => {
                a.next();
            }
            std::cmp::Ordering::Greater => {
                b.next();
            }
            std::cmp::Ordering::Equal => {
                count += 1;
                if count == stop {
                    return count;
                }
                a.next();
                b.next();
            }
        }
    }
    count
}

fn overlaps(g: &Graph, u: usize, w: usize) -> bool {
    u != w && overlapping(g, u, w).unwrap_or(false)
}

/// `(A'', B'')`: members of `back_marks \ out_marks` almost non-overlapping with all
/// of `out_marks`, and members of `out_marks \ back_marks` almost non-overlapping with
/// all of `back_marks`. Both keep the order of their source set.
pub fn second_order_sets(g: &Graph, out_marks: &[usize], back_marks: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let pick = |from: &[usize], against: &[usize]| -> Vec<usize> {
        from.iter()
            .copied()
            .filter(|v| !against.contains(v))
            .filter(|&v| against.iter().all(|&x| !overlaps(g, v, x)))
            .collect()
    };
    (pick(back_marks, out_marks), pick(out_marks, back_marks))
}

/// Which side's reachability requirement a connector serves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Owner {
    ForA,
    ForB,
    Both,
}

impl Owner {
    pub fn serves_a(self) -> bool {
        matches!(self, Owner::ForA | Owner::Both)
    }

    pub fn serves_b(self) -> bool {
        matches!(self, Owner::ForB | Owner::Both)
    }
}

/// Two internally disjoint short paths between an out-path vertex `a` and a
/// return-path vertex `b`, each written from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connector {
    pub a: usize,
    pub b: usize,
    pub paths: [Path; 2],
    pub owner: Owner,
}

impl Connector {
    /// Interior vertices of both paths.
    pub fn middles(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().filter(|p| p.len() == 2).map(|p| p.vertices[1])
    }

    /// Edges of both paths in path order, oriented from `a` towards `b`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.paths.iter().flat_map(|p| p.steps())
    }
}

/// The two shortest internally disjoint paths of length at most two between
/// `u` and `w`: the edge plus the smallest common neighbour when adjacent,
/// otherwise the two smallest common neighbours.
pub fn two_paths(g: &Graph, u: usize, w: usize) -> Option<[Path; 2]> {
    let common = g.common_neighbors(u, w);
    if g.has_edge(u, w) {
        let &c = common.first()?;
        Some([Path::new(vec![u, w]), Path::new(vec![u, c, w])])
    } else if common.len() >= 2 {
        Some([Path::new(vec![u, common[0], w]), Path::new(vec![u, common[1], w])])
    } else {
        None
    }
}

/// Index data the partner choice needs.
pub struct RoundSets<'a> {
    pub p: &'a Path,
    pub q: &'a Path,
    /// `A' \ B`
    pub a_side: Vec<usize>,
    /// `B' \ A`
    pub b_side: Vec<usize>,
}

impl RoundSets<'_> {
    /// Position along the out-path direction; a return-path vertex `w_j` sits
    /// roughly at out-path height `q + 1 - j`.
    fn height_p(&self, a: usize) -> usize {
        self.p.index_of(a).expect("a_side lies on the out-path")
    }

    fn height_q(&self, b: usize) -> usize {
        self.q.len() - self.q.index_of(b).expect("b_side lies on the return path")
    }
}

/// Picks one overlapping partner for every vertex of `A' \ B` and of
/// `B' \ A`. Partners minimise the height difference, then the id. A pair
/// picked from both sides yields a single connector owned by both.
pub fn choose_connectors(g: &Graph, sets: &RoundSets<'_>) -> Result<Vec<Connector>> {
    let mut out: Vec<Connector> = Vec::new();
    for &a in &sets.a_side {
        let ha = sets.height_p(a);
        let b = sets
            .b_side
            .iter()
            .copied()
            .filter(|&b| overlaps(g, a, b))
            .min_by_key(|&b| (ha.abs_diff(sets.height_q(b)), b))
            .ok_or(Error::NoPartner { vertex: a, side: "a" })?;
        let paths = two_paths(g, a, b).expect("overlapping pairs have two short paths");
        out.push(Connector { a, b, paths, owner: Owner::ForA });
    }
    for &b in &sets.b_side {
        let hb = sets.height_q(b);
        let a = sets
            .a_side
            .iter()
            .copied()
            .filter(|&a| overlaps(g, a, b))
            .min_by_key(|&a| (hb.abs_diff(sets.height_p(a)), a))
            .ok_or(Error::NoPartner { vertex: b, side: "b" })?;
        if let Some(c) = out.iter_mut().find(|c| c.a == a && c.b == b) {
            c.owner = Owner::Both;
            continue;
        }
        let paths = two_paths(g, a, b).expect("overlapping pairs have two short paths");
        out.push(Connector { a, b, paths, owner: Owner::ForB });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn overlap_examples() {
        let k3 = complete(3);
        assert!(overlapping(&k3, 0, 1).unwrap());
        let c6 = cycle(6);
        assert!(!overlapping(&c6, 0, 3).unwrap());
        let c4 = cycle(4);
        assert!(overlapping(&c4, 0, 2).unwrap());
        assert!(!overlapping(&c4, 0, 1).unwrap());
        assert_eq!(overlapping(&c4, 1, 1), Err(Error::SameVertex(1, 1)));
    }

    #[test]
    fn second_order_empty_when_b_inside_a() {
        let g = cycle(9);
        let (a2, _) = second_order_sets(&g, &[0, 3, 6], &[3, 6]);
        assert!(a2.is_empty());
    }

    #[test]
    fn overlapping_candidate_is_excluded() {
        // 1 adjacent to 0 with common neighbour 2
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 2)]).unwrap();
        let (a2, b2) = second_order_sets(&g, &[0], &[1, 3]);
        assert_eq!(a2, vec![3]);
        assert!(b2.is_empty());
    }

    #[test]
    fn two_paths_shapes() {
        let k3 = complete(3);
        let [p1, p2] = two_paths(&k3, 0, 1).unwrap();
        assert_eq!(p1.vertices, vec![0, 1]);
        assert_eq!(p2.vertices, vec![0, 2, 1]);
        let c4 = cycle(4);
        let [p1, p2] = two_paths(&c4, 0, 2).unwrap();
        assert_eq!((p1.vertices, p2.vertices), (vec![0, 1, 2], vec![0, 3, 2]));
        assert!(two_paths(&cycle(6), 0, 3).is_none());
    }
}
