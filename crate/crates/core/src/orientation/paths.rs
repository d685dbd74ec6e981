//! Selection of the out-path and the consistent return path of a round.

use std::collections::VecDeque;

use crate::distance::{bfs_distance, Mode};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Longest geodesic out of the core whose length is a multiple of 3.
///
/// The path starts at a core vertex `u_0`, ends at the first `3 * floor(D / 3)`
/// steps towards a vertex at maximum distance `D` from the core, and satisfies
/// `d(u_j, core) = d(u_j, u_0) = j`. Ties go to the smallest vertex id, both
/// for the far vertex and for every BFS parent.
pub fn select_path_p(g: &Graph, core: &[usize], cap: usize) -> Result<Path> {
    let dist = bfs_distance(g, core, Mode::Undirected)?;
    let (far, depth) = (0..g.vertex_count())
        .filter_map(|v| dist.get(v).map(|d| (v, d)))
        .fold((usize::MAX, 0), |best, (v, d)| if d > best.1 { (v, d) } else { best });
    if depth <= cap {
        return Err(Error::NoFarVertex { cap });
    }
    let mut walk = vec![far];
    let mut v = far;
    while let Some(d) = dist.get(v).filter(|&d| d > 0) {
        v = g.neighbors(v).find(|&w| dist.get(w) == Some(d - 1)).expect("bfs parent exists");
        walk.push(v);
    }
    walk.reverse();
    walk.truncate(3 * (depth / 3) + 1);
    Ok(Path::new(walk))
}

/// `{u_j : 1 <= j <= p, j = 0 mod 3}`, in path order.
pub fn out_marks(p: &Path) -> Vec<usize> {
    p.vertices.iter().enumerate().skip(1).filter(|(j, _)| j % 3 == 0).map(|(_, &v)| v).collect()
}

/// `{w_j : 0 <= j <= q - 2, j = 0 mod 3}` where `Q = w_0 .. w_{q+1}`, in path order.
pub fn back_marks(q: &Path) -> Vec<usize> {
    let qq = q.len().saturating_sub(1);
    if qq < 2 {
        return Vec::new();
    }
    q.vertices.iter().enumerate().take(qq - 1).filter(|(j, _)| j % 3 == 0).map(|(_, &v)| v).collect()
}

/// Both index sets of a round as `(A', B')`.
pub fn index_sets(p: &Path, q: &Path) -> (Vec<usize>, Vec<usize>) {
    (out_marks(p), back_marks(q))
}

/// Marks for each vertex whether it is `u_j` with the successor `u_{j+1}`,
/// i.e. the only direction in which a path edge may be used.
fn path_successor(g: &Graph, p: &Path) -> Vec<Option<usize>> {
    let mut next = vec![None; g.vertex_count()];
    for (u, v) in p.steps() {
        next[u] = Some(v);
    }
    next
}

/// Whether stepping `x -> y` respects the orientation of `p`.
fn consistent_step(next: &[Option<usize>], x: usize, y: usize) -> bool {
    // the edge is a path edge u_j u_{j+1} used backwards iff y is x's predecessor
    next[y] != Some(x)
}

/// Shortest path from the end of `p` back to the core that never uses an
/// edge of `p` against its orientation. Among all such shortest paths the one
/// through the most vertices of `out_marks` wins, ties going to smaller ids.
pub fn select_path_q(g: &Graph, p: &Path, in_core: &[bool], out_marks: &[usize]) -> Result<Path> {
    let n = g.vertex_count();
    let start = p.last().ok_or(Error::EmptySourceSet)?;
    let next = path_successor(g, p);

    // consistent distance to the core: reverse BFS from all core vertices
    let mut to_core: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if in_core[v] {
            to_core[v] = Some(0);
            queue.push_back(v);
        }
    }
    if queue.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    let mut order = Vec::new();
    while let Some(y) = queue.pop_front() {
        order.push(y);
        let d = to_core[y].expect("queued vertices have a distance");
        for x in g.neighbors(y) {
            if to_core[x].is_none() && consistent_step(&next, x, y) {
                to_core[x] = Some(d + 1);
                queue.push_back(x);
            }
        }
    }
    if to_core[start].is_none() {
        return Err(Error::NoConsistentPath { from: start });
    }

    let mut in_marks = vec![false; n];
    for &a in out_marks {
        in_marks[a] = true;
    }
    // best[x] = most A' vertices on a shortest consistent path from x
    let mut best = vec![0usize; n];
    let mut choice = vec![usize::MAX; n];
    for &x in &order {
        let d = to_core[x].expect("ordered vertices are reached");
        if d == 0 {
            continue;
        }
        let mut top: Option<(usize, usize)> = None;
        for y in g.neighbors(x) {
            if to_core[y] == Some(d - 1) && consistent_step(&next, x, y) {
                match top {
                    Some((b, _)) if b >= best[y] => {}
                    _ => top = Some((best[y], y)),
                }
            }
        }
        let (b, y) = top.expect("a shortest-path successor exists");
        best[x] = b + usize::from(in_marks[x]);
        choice[x] = y;
    }

    let mut walk = vec![start];
    let mut x = start;
    while !in_core[x] {
        x = choice[x];
        walk.push(x);
    }
    Ok(Path::new(walk))
}
