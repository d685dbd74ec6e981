mod common;

use common::{arc_diameter, bridges_by_deletion, floyd, naive_oriented_diameter, random_graph, undirected_steps, INF};
use proptest::prelude::*;
use strong_orient::distance::undirected_diameter;
use strong_orient::oracle::{brute_force_oriented_diameter, validate_orientation};
use strong_orient::pipeline::{orient, orient_fallback, PipelineConfig};
use strong_orient::{bfs_distance, find_bridges, Error, Graph, MixedGraph, Mode};

fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..=8, 250u32..800, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

fn robbins_ok(g: &Graph) -> bool {
    g.is_connected() && find_bridges(g).is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn undirected_bfs_is_symmetric(n in 2usize..40, p in 50u32..400, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let rows: Vec<_> = (0..n).map(|s| bfs_distance(&g, &[s], Mode::Undirected).unwrap()).collect();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(rows[u].get(v), rows[v].get(u));
            }
        }
    }

    #[test]
    fn bfs_matches_floyd(n in 2usize..25, p in 50u32..400, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let reference = floyd(n, &undirected_steps(&g));
        for s in 0..n {
            let d = bfs_distance(&g, &[s], Mode::Undirected).unwrap();
            for v in 0..n {
                prop_assert_eq!(d.get(v).unwrap_or(INF), reference[s][v]);
            }
        }
    }

    #[test]
    fn bridges_match_deletion(g in small_graph()) {
        prop_assume!(g.is_connected());
        prop_assert_eq!(find_bridges(&g), bridges_by_deletion(&g));
    }

    #[test]
    fn directed_diameter_dominates_undirected(g in small_graph(), flips in any::<u64>()) {
        let arcs: Vec<_> = g.edges().iter().enumerate()
            .map(|(i, &(u, v))| if flips >> (i % 64) & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        if let Some(d) = arc_diameter(g.vertex_count(), &arcs) {
            prop_assert!(Some(d) >= undirected_diameter(&g));
        }
    }

    #[test]
    fn contraction_conserves_edges(g in small_graph(), flips in any::<u64>(), members in any::<u64>()) {
        let n = g.vertex_count();
        let mut h = MixedGraph::new(n);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            match flips >> (2 * i % 64) & 3 {
                0 => h.add_arc(u, v).unwrap(),
                1 => h.add_arc(v, u).unwrap(),
                _ => h.add_edge(u, v).unwrap(),
            }
        }
        let set: Vec<usize> = (0..n).filter(|&v| members >> v & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let c = h.contract(&set).unwrap();
        prop_assert_eq!(c.graph.edge_count() + c.dropped, g.edge_count());
        prop_assert_eq!(c.graph.vertex_count(), n - set.len() + 1);
    }

    #[test]
    fn contraction_matches_free_interior(g in small_graph(), flips in any::<u64>(), members in any::<u64>()) {
        let n = g.vertex_count();
        let mut h = MixedGraph::new(n);
        let mut steps = Vec::new();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            match flips >> (2 * i % 64) & 3 {
                0 => { h.add_arc(u, v).unwrap(); steps.push((u, v, 1)); }
                1 => { h.add_arc(v, u).unwrap(); steps.push((v, u, 1)); }
                _ => { h.add_edge(u, v).unwrap(); steps.extend([(u, v, 1), (v, u, 1)]); }
            }
        }
        let set: Vec<usize> = (0..n).filter(|&v| members >> v & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        for &a in &set {
            for &b in &set {
                steps.push((a, b, 0));
            }
        }
        let reference = floyd(n, &steps);
        let c = h.contract(&set).unwrap();
        let view = c.graph.view();
        for u in 0..n {
            let d = bfs_distance(&view, &[c.map[u]], Mode::Forward).unwrap();
            for v in 0..n {
                prop_assert_eq!(d.get(c.map[v]).unwrap_or(INF), reference[u][v]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn oracle_finds_orientation_exactly_when_bridgeless(g in small_graph()) {
        prop_assume!(g.edge_count() <= 16);
        match brute_force_oriented_diameter(&g, 18) {
            Ok(r) => {
                prop_assert!(robbins_ok(&g));
                prop_assert!(validate_orientation(&g, &r.arcs).is_valid());
            }
            Err(e) => {
                prop_assert!(!robbins_ok(&g), "{}", e);
            }
        }
    }

    #[test]
    fn oracle_matches_naive_enumeration(g in small_graph()) {
        prop_assume!(g.edge_count() <= 12 && robbins_ok(&g));
        let fast = brute_force_oriented_diameter(&g, 18).unwrap().value;
        prop_assert_eq!(Some(fast), naive_oriented_diameter(&g));
    }

    #[test]
    fn oracle_sandwich(g in small_graph()) {
        prop_assume!(g.edge_count() <= 18 && robbins_ok(&g));
        let oracle = brute_force_oriented_diameter(&g, 18).unwrap().value;
        prop_assert!(Some(oracle) >= undirected_diameter(&g));
        let eps = "50".parse().unwrap();
        let measured = match orient(&g, &PipelineConfig::new(eps)) {
            Ok(out) => {
                prop_assert!(out.certificate.passed());
                out.certificate.measured_diameter
            }
            Err(Error::MinDegreeTooSmall { .. }) => orient_fallback(&g, eps).unwrap().1.measured_diameter,
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let measured = measured.expect("strongly connected");
        prop_assert!(oracle <= measured);
    }

    #[test]
    fn adding_an_edge_never_hurts_the_oracle(g in small_graph(), pick in any::<usize>()) {
        prop_assume!(g.edge_count() <= 15 && robbins_ok(&g));
        let n = g.vertex_count();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let extra = missing[pick % missing.len()];
        let bigger = Graph::from_edges(n, g.edges().iter().copied().chain([extra])).unwrap();
        let before = brute_force_oriented_diameter(&g, 18).unwrap().value;
        let after = brute_force_oriented_diameter(&bigger, 18).unwrap().value;
        prop_assert!(after <= before);
    }

    #[test]
    fn single_flip_is_valid_or_detected(g in small_graph(), pick in any::<usize>()) {
        prop_assume!(g.edge_count() <= 16 && robbins_ok(&g));
        let mut arcs = brute_force_oriented_diameter(&g, 18).unwrap().arcs;
        let i = pick % arcs.len();
        arcs[i] = (arcs[i].1, arcs[i].0);
        let report = validate_orientation(&g, &arcs);
        let reference = arc_diameter(g.vertex_count(), &arcs);
        prop_assert_eq!(report.is_valid(), reference.is_some());
        prop_assert_eq!(report.diameter, reference);
    }
}
