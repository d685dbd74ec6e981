mod common;

use proptest::prelude::*;
use strong_orient::distance::undirected_diameter;
use strong_orient::generators::{complete, cycle, lower_bound_family, random_min_degree_bridgeless, sequential_join, FamilySpec};
use strong_orient::io::{parse_arc_list, parse_edge_list, write_arc_list, write_edge_list};
use strong_orient::pipeline::{orient, PipelineConfig};
use strong_orient::{find_bridges, Error, Graph};

#[test]
fn sequential_join_examples() {
    let k1 = complete(1);
    assert_eq!(sequential_join(&[k1.clone(), k1.clone()]).unwrap(), complete(2));
    let p3 = sequential_join(&[k1.clone(), k1.clone(), k1]).unwrap();
    assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    assert_eq!(sequential_join(&[complete(2), complete(2)]).unwrap(), complete(4));
    assert_eq!(sequential_join(&[]), Err(Error::EmptyList));
}

#[test]
fn family_closed_forms() {
    for delta in 4..=8 {
        for k in 1..=5 {
            let g = lower_bound_family(delta, k).unwrap();
            assert_eq!(g.vertex_count(), (delta + 1) * (k + 2), "n for {delta},{k}");
            assert_eq!(g.min_degree().unwrap(), delta);
            assert!(find_bridges(&g).is_empty());
            assert_eq!(undirected_diameter(&g), Some(3 * k + 3));
            assert_eq!(common::undirected_diameter(&g), Some(3 * k + 3));
        }
    }
}

#[test]
fn family_small_cases() {
    assert_eq!(lower_bound_family(4, 1).unwrap().vertex_count(), 15);
    assert_eq!(undirected_diameter(&lower_bound_family(4, 1).unwrap()), Some(6));
    let g = lower_bound_family(5, 2).unwrap();
    assert_eq!((g.vertex_count(), g.min_degree().unwrap()), (24, 5));
    assert_eq!(lower_bound_family(3, 2), Err(Error::DeltaTooSmall { got: 3, min: 4 }));
    assert_eq!(lower_bound_family(4, 0), Err(Error::KTooSmall(0)));
}

#[test]
fn family_orientations_respect_the_lower_bound() {
    for delta in 4..=6 {
        for k in 1..=4 {
            let g = lower_bound_family(delta, k).unwrap();
            let out = orient(&g, &PipelineConfig::new("30".parse().unwrap())).unwrap();
            let n = g.vertex_count();
            let measured = out.certificate.measured_diameter.unwrap();
            // 3n / (delta + 1) - 3 = 3k + 3
            assert!(measured * (delta + 1) + 3 * (delta + 1) >= 3 * n);
            assert!(out.certificate.passed());
        }
    }
}

#[test]
fn random_generator_examples() {
    for seed in 0..20 {
        let g = random_min_degree_bridgeless(20, 3, seed).unwrap();
        assert!(g.min_degree().unwrap() >= 3);
        assert!(find_bridges(&g).is_empty() && g.is_connected());
    }
    assert_eq!(random_min_degree_bridgeless(7, 6, 3).unwrap(), complete(7));
    assert_eq!(random_min_degree_bridgeless(50, 4, 9).unwrap(), random_min_degree_bridgeless(50, 4, 9).unwrap());
    assert_eq!(random_min_degree_bridgeless(4, 4, 0), Err(Error::TooFewVertices { n: 4, delta: 4 }));
}

#[test]
fn family_spec_generates_and_describes() {
    let spec = FamilySpec::Gdk { delta: 4, k: 2 };
    assert_eq!(spec.generate().unwrap(), lower_bound_family(4, 2).unwrap());
    assert_eq!(spec.describe(), "family=gdk delta=4 k=2");
    assert_eq!(FamilySpec::Cycle { n: 5 }.generate().unwrap(), cycle(5));
    let json = serde_json::to_value(FamilySpec::Random { n: 30, delta: 3, seed: 7 }).unwrap();
    assert_eq!(json["kind"], "random");
}

#[test]
fn parser_errors() {
    assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("# c\n\n3 2\n0 1\n# c\n2 2\n"), Err(Error::Parse { line: 6, .. })));
    assert!(matches!(parse_edge_list("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("3 1\n-1 2\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("99999999999 0\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_arc_list("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
}

proptest! {
    #[test]
    fn edge_list_round_trip(n in 1usize..30, p in 0u32..700, seed in any::<u64>()) {
        let g = common::random_graph(n, p, seed);
        let text = write_edge_list(&g, &["note".into()]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn arc_list_round_trip(n in 2usize..30, arcs in prop::collection::vec((0usize..30, 0usize..30), 0..60)) {
        let arcs: Vec<_> = arcs.into_iter().filter(|&(u, v)| u < n && v < n).collect();
        let text = write_arc_list(n, &arcs, &[]);
        let back = parse_arc_list(&text).unwrap();
        prop_assert_eq!(back.n, n);
        prop_assert_eq!(back.arcs, arcs);
    }

    #[test]
    fn parser_never_panics(text in "[0-9 #\n-]{0,80}") {
        let _ = parse_edge_list(&text);
        let _ = parse_arc_list(&text);
    }
}
