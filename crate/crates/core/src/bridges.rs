//! Bridge detection by a single low-link DFS.

use crate::graph::Graph;

/// Every edge whose removal disconnects its component, as `(u, v)` with
/// `u < v`, sorted.
pub fn find_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut ord = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut counter = 0;
    // (vertex, edge id used to enter it, next adjacency position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if ord[root] != usize::MAX {
            continue;
        }
        ord[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, via, pos) = *top;
            if let Some(&(w, eid)) = g.incident(v).get(pos) {
                top.2 += 1;
                if eid == via {
                    continue;
                }
                if ord[w] == usize::MAX {
                    ord[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push((w, eid, 0));
                } else {
                    low[v] = low[v].min(ord[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > ord[parent] {
                        bridges.push(g.edge(via));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> Vec<(usize, usize)> {
        let base = g.components().0;
        let mut out = Vec::new();
        for (i, &e) in g.edges().iter().enumerate() {
            let rest: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &p)| p)
                .collect();
            let h = Graph::from_edges(g.vertex_count(), rest).unwrap();
            if h.components().0 > base {
                out.push(e);
            }
        }
        out
    }

    #[test]
    fn tree_edges_are_bridges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_bridges(&g), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_has_none() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(find_bridges(&g).is_empty());
    }

    #[test]
    fn two_triangles_joined() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]).unwrap();
        assert_eq!(find_bridges(&g), brute_force(&g));
        assert_eq!(find_bridges(&g), vec![(2, 3)]);
    }

    #[test]
    fn matches_removal_check_on_small_graphs() {
        // all graphs on 5 labelled vertices
        let pairs: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            let g = Graph::from_edges(5, edges).unwrap();
            assert_eq!(find_bridges(&g), brute_force(&g), "mask {mask}");
        }
    }
}
