use std::fs;
use std::path::Path;

use strong_orient::generators::lower_bound_family;
use strong_orient::io::{parse_arc_list, parse_edge_list, write_edge_list};
use strong_orient::oracle::validate_orientation;
use strong_orient_cli::run;
use tempfile::TempDir;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Out {
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("strong-orient").chain(args.iter().copied()), &mut o, &mut e);
    Out { code, stdout: String::from_utf8(o).unwrap(), stderr: String::from_utf8(e).unwrap() }
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn read(p: impl AsRef<Path>) -> String {
    fs::read_to_string(p).unwrap()
}

#[test]
fn orient_family_graph() {
    let dir = TempDir::new().unwrap();
    let g = lower_bound_family(4, 2).unwrap();
    let input = write(&dir, "g.txt", &write_edge_list(&g, &[]));
    let (arcs, stats, trace) = (path(&dir, "a.txt"), path(&dir, "s.json"), path(&dir, "t.jsonl"));
    let out = cli(&["orient", "--input", &input, "--epsilon", "30", "--output", &arcs, "--stats", &stats, "--trace", &trace]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stderr.contains("guarantee=ok"));

    let list = parse_arc_list(&read(&arcs)).unwrap();
    let rep = validate_orientation(&g, &list.arcs);
    assert!(rep.is_valid());
    assert!(rep.diameter.unwrap() >= 9);

    let v: serde_json::Value = serde_json::from_str(&read(&stats)).unwrap();
    assert_eq!(v["measured_diameter"].as_u64(), rep.diameter.map(|d| d as u64));
    assert_eq!(v["within_bound"], true);

    let lines: Vec<serde_json::Value> = read(&trace).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().any(|l| l["kind"] == "round"));
    assert!(lines.iter().all(|l| l["kind"] == "round" || l["kind"] == "ear"));
}

#[test]
fn orient_writes_arcs_to_stdout() {
    let dir = TempDir::new().unwrap();
    let g = lower_bound_family(5, 1).unwrap();
    let input = write(&dir, "g.txt", &write_edge_list(&g, &[]));
    let out = cli(&["orient", "--input", &input, "--no-instrument"]);
    assert_eq!(out.code, 0);
    assert!(validate_orientation(&g, &parse_arc_list(&out.stdout).unwrap().arcs).is_valid());
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let star = write(&dir, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let out = cli(&["orient", "--input", &star]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bridged input"), "{}", out.stderr);

    let k4 = write(&dir, "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = cli(&["orient", "--input", &k4, "--epsilon", "-1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("epsilon must be positive"));
    assert_eq!(cli(&["orient", "--input", &k4, "--epsilon", "0"]).code, 2);
    assert_eq!(cli(&["orient", "--input", &k4, "--epsilon", "x"]).code, 2);

    let bad = write(&dir, "bad.txt", "3 1\n0 7\n");
    let out = cli(&["orient", "--input", &bad]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    assert_eq!(cli(&["orient", "--input", &path(&dir, "missing.txt")]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
}

#[test]
fn minimum_degree_two_uses_the_fallback() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let stats = path(&dir, "s.json");
    let out = cli(&["orient", "--input", &c6, "--stats", &stats]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("fallback"));
    let v: serde_json::Value = serde_json::from_str(&read(&stats)).unwrap();
    assert_eq!(v["fallback"], true);
    assert_eq!(v["measured_diameter"], 5);
}

#[test]
fn oracle_prints_the_value() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let k4 = write(&dir, "k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let witness = path(&dir, "w.txt");
    for g in [&c4, &k4] {
        let out = cli(&["oracle", "--input", g, "--output", &witness]);
        assert_eq!((out.code, out.stdout.trim()), (0, "3"));
        let graph = parse_edge_list(&read(g)).unwrap();
        let rep = validate_orientation(&graph, &parse_arc_list(&read(&witness)).unwrap().arcs);
        assert_eq!(rep.diameter, Some(3));
    }

    let mut big = String::from("10 25\n");
    let mut count = 0;
    'outer: for u in 0..10 {
        for v in u + 1..10 {
            big.push_str(&format!("{u} {v}\n"));
            count += 1;
            if count == 25 {
                break 'outer;
            }
        }
    }
    let big = write(&dir, "big.txt", &big);
    let out = cli(&["oracle", "--input", &big]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("25"), "{}", out.stderr);
}

#[test]
fn orient_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "g.txt");
    assert_eq!(cli(&["gen", "--family", "random", "--n", "120", "--delta", "6", "--seed", "5", "--output", &input]).code, 0);
    assert!(read(&input).starts_with("# family=random"));
    let arcs = path(&dir, "a.txt");
    assert_eq!(cli(&["orient", "--input", &input, "--epsilon", "1/2", "--output", &arcs]).code, 0);

    let out = cli(&["verify", "--input", &input, "--arcs", &arcs, "--epsilon", "1/2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((v["valid"].clone(), v["within_bound"].clone()), (true.into(), true.into()));
    assert_eq!(v["epsilon"], "1/2");

    // one edge left unoriented
    let text = read(&arcs);
    let mut lines: Vec<&str> = text.lines().collect();
    let header = lines.iter().position(|l| !l.starts_with('#')).unwrap();
    let (n, m) = lines[header].split_once(' ').unwrap();
    let shorter = format!("{n} {}", m.parse::<usize>().unwrap() - 1);
    lines[header] = &shorter;
    lines.pop();
    let dropped = write(&dir, "dropped.txt", &(lines.join("\n") + "\n"));
    let out = cli(&["verify", "--input", &input, "--arcs", &dropped]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("missing_edge") || out.stdout.contains("MissingEdge"), "{}", out.stdout);
}

#[test]
fn gen_writes_each_family() {
    for args in [
        &["gen", "--family", "gdk", "--delta", "4", "--k", "1"][..],
        &["gen", "--family", "cycle", "--n", "7"],
        &["gen", "--family", "complete", "--n", "5"],
    ] {
        let out = cli(args);
        assert_eq!(out.code, 0);
        assert!(parse_edge_list(&out.stdout).is_ok());
    }
    assert_eq!(parse_edge_list(&cli(&["gen", "--family", "gdk", "--delta", "4", "--k", "1"]).stdout).unwrap().vertex_count(), 15);
    assert_eq!(cli(&["gen", "--family", "gdk", "--delta", "4"]).code, 2);
    assert_eq!(cli(&["gen", "--family", "gdk", "--delta", "3", "--k", "1"]).code, 2);
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes()).records().map(|r| r.unwrap()).collect()
}

#[test]
fn bench_family_sweep() {
    let out = cli(&["bench", "--family", "gdk", "--delta", "4,5", "--k", "1..3", "--epsilon", "30"]);
    assert_eq!(out.code, 0);
    let mut reader = csv::Reader::from_reader(out.stdout.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 6);
    for r in &rows {
        let k: usize = r[col("k")].parse().unwrap();
        assert_eq!(r[col("diam_g")].parse::<usize>().unwrap(), 3 * k + 3);
        assert_eq!(&r[col("within_bound")], "true");
    }
}

#[test]
fn bench_random_sweep_to_file() {
    let dir = TempDir::new().unwrap();
    let stats = path(&dir, "bench.csv");
    let out = cli(&["bench", "--family", "random", "--n", "100,200", "--delta", "10", "--seed", "0..2", "--stats", &stats]);
    assert_eq!(out.code, 0);
    let rows = csv_rows(&read(&stats));
    assert_eq!(rows.len(), 6);
    // cells are ordered by n, then seed
    assert_eq!(rows.iter().map(|r| r[5].to_string()).collect::<Vec<_>>(), ["100", "100", "100", "200", "200", "200"]);
}

#[test]
fn bench_rejects_bad_sweeps() {
    assert_eq!(cli(&["bench", "--family", "gdk", "--delta", "", "--k", "1"]).code, 2);
    assert_eq!(cli(&["bench", "--family", "gdk", "--delta", "5..4", "--k", "1"]).code, 2);
    assert_eq!(cli(&["bench", "--family", "gdk", "--k", "1"]).code, 2);
}
