mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use clap::Parser;
use common::TRIANGLE;
use dclique::cli::{self, Cli};
use dclique::LinkStream;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dclique"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_triangle() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "triangle.txt", TRIANGLE);
    let out = run(&["enumerate", s(&input), "--delta", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\t9\ta b\n1\t7\tb c\n2\t7\ta b c\n2\t8\ta c\n");
}

#[test]
fn enumerate_writes_analytics_files() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "triangle.txt", TRIANGLE);
    let p = |n: &str| dir.path().join(n);
    let out = run(&[
        "enumerate",
        s(&input),
        "--delta",
        "3",
        "--out",
        s(&p("cliques.tsv")),
        "--stats",
        s(&p("stats.json")),
        "--ccdf-sizes",
        s(&p("sizes.tsv")),
        "--ccdf-durations",
        s(&p("durations.tsv")),
        "--discovery-log",
        s(&p("discovery.tsv")),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let cliques = fs::read_to_string(p("cliques.tsv")).unwrap();
    let stats: serde_json::Value = serde_json::from_str(&fs::read_to_string(p("stats.json")).unwrap()).unwrap();
    assert_eq!(stats["result_count"].as_u64().unwrap() as usize, cliques.lines().count());
    assert_eq!(stats["max_nodes"], 3);
    assert_eq!(stats["max_duration"], 9);
    assert_eq!(stats["delta"], 3);
    assert_eq!(
        fs::read_to_string(p("durations.tsv")).unwrap(),
        "value\tccdf\n5\t1\n6\t0.75\n9\t0.25\n"
    );
    assert_eq!(fs::read_to_string(p("sizes.tsv")).unwrap(), "value\tccdf\n2\t1\n3\t0.25\n");
    let discovery = fs::read_to_string(p("discovery.tsv")).unwrap();
    let mut lines = discovery.lines();
    assert_eq!(lines.next(), Some("iteration\tmaximal_count\tmax_size"));
    let last: Vec<&str> = lines.last().unwrap().split('\t').collect();
    assert_eq!(last.len(), 3);
    assert_eq!(last[1], "4");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["enumerate", s(&missing), "--delta", "3"]).status.code(), Some(3));

    let looped = write(&dir, "loop.txt", "5 x x\n");
    let out = run(&["enumerate", s(&looped), "--delta", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let input_file = write(&dir, "triangle.txt", TRIANGLE);
    assert_eq!(run(&["enumerate", s(&input_file), "--delta", "-1"]).status.code(), Some(1));
    assert_eq!(
        run(&["enumerate", s(&input_file), "--delta", "3", "--max-states", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate", s(&input_file)]).status.code(), Some(1));
    assert_eq!(
        run(&["enumerate", s(&input_file), "--delta", "3", "--tmin", "0", "--tmax", "5"]).status.code(),
        Some(1)
    );
    let same = dir.path().join("same.tsv");
    assert_eq!(
        run(&["enumerate", s(&input_file), "--delta", "3", "--out", s(&same), "--stats", s(&same)]).status.code(),
        Some(1)
    );
    let unwritable = dir.path().join("no-such-dir").join("out.tsv");
    assert_eq!(
        run(&["enumerate", s(&input_file), "--delta", "3", "--out", s(&unwritable)]).status.code(),
        Some(3)
    );
}

#[test]
fn explicit_span_and_time_scale() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "scaled.txt", "0.3 a b\n0.4 b c\n0.5 a c\n0.6 a b\n");
    let out = run(&[
        "enumerate",
        s(&input),
        "--delta",
        "3",
        "--time-scale",
        "10",
        "--tmin",
        "0",
        "--tmax",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("0\t9\ta b"));
    let out = run(&["enumerate", s(&input), "--delta", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_triangle_all_deltas() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "triangle.txt", TRIANGLE);
    for delta in ["1", "2", "3"] {
        let out = run(&["compare", s(&input), "--delta", delta]);
        assert_eq!(out.status.code(), Some(0), "delta {delta}: {}", stdout(&out));
    }
}

#[test]
fn compare_detects_missing_right_extensions() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "triangle.txt", TRIANGLE);
    let out = run(&["compare", s(&input), "--delta", "3", "--fault-skip-right-extension"]);
    assert_eq!(out.status.code(), Some(5));
    let text = stdout(&out);
    assert!(text.contains("oracle-only\t({a,b},[0,9])"), "{text}");
}

#[test]
fn compare_refuses_large_streams() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("burst.txt");
    assert_eq!(
        run(&["generate", "burst", "--nodes", "10", "--out", s(&input)]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["compare", s(&input), "--delta", "1"]).status.code(), Some(4));
}

#[test]
fn compare_random_streams_in_process() {
    let dir = TempDir::new().unwrap();
    for seed in 0..200u64 {
        let path = dir.path().join(format!("r{seed}.txt"));
        let seed_arg = seed.to_string();
        let gen = Cli::parse_from([
            "dclique", "generate", "random", "--nodes", "5", "--links", "12", "--max-time", "20", "--seed",
            &seed_arg, "--out", s(&path),
        ]);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let cli::Command::Generate(args) = gen.command else { unreachable!() };
        assert_eq!(cli::cmd_generate(&args, &mut out, &mut err), 0);
        for delta in ["1", "2", "3"] {
            let cmp = Cli::parse_from(["dclique", "compare", s(&path), "--delta", delta]);
            let cli::Command::Compare(args) = cmp.command else { unreachable!() };
            let code = cli::cmd_compare(&args, &mut out, &mut err);
            assert_eq!(code, 0, "seed {seed} delta {delta}: {}", String::from_utf8_lossy(&out));
        }
    }
}

#[test]
fn generated_streams_round_trip() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&[&str], usize, usize)] = &[
        (&["chain", "--links", "3"], 2, 3),
        (&["chain", "--pairs", "3", "--links", "5", "--spacing", "7"], 6, 15),
        (&["burst", "--nodes", "6"], 6, 15),
        (&["random", "--nodes", "7", "--links", "25", "--max-time", "50", "--seed", "9"], 7, 25),
    ];
    for (args, n, m) in cases {
        let path = dir.path().join("g.txt");
        let mut full = vec!["generate"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", s(&path)]);
        assert_eq!(run(&full).status.code(), Some(0), "{args:?}");
        let stream = LinkStream::parse(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!((stream.node_count(), stream.link_count()), (*n, *m), "{args:?}");
    }
    assert_eq!(run(&["generate", "burst", "--nodes", "1"]).status.code(), Some(1));
}

#[test]
fn generated_worst_cases_enumerate_as_expected() {
    let dir = TempDir::new().unwrap();
    let chain = dir.path().join("chain.txt");
    run(&["generate", "chain", "--links", "3", "--spacing", "1", "--out", s(&chain)]);
    let out = run(&["enumerate", s(&chain), "--delta", "1"]);
    assert_eq!(stdout(&out), "-1\t3\tn0 n1\n");

    let burst = dir.path().join("burst.txt");
    run(&["generate", "burst", "--nodes", "3", "--out", s(&burst)]);
    let out = run(&["enumerate", s(&burst), "--delta", "2"]);
    assert_eq!(stdout(&out), "-2\t2\tn0 n1 n2\n");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("r.txt");
    run(&["generate", "random", "--nodes", "8", "--links", "30", "--max-time", "40", "--seed", "3", "--out", s(&input)]);
    let mut cliques_by_order = Vec::new();
    for order in ["bfs", "dfs"] {
        let mut runs = Vec::new();
        for i in 0..2 {
            let p = |n: &str| dir.path().join(format!("{order}{i}-{n}"));
            let out = run(&[
                "enumerate",
                s(&input),
                "--delta",
                "5",
                "--order",
                order,
                "--out",
                s(&p("c")),
                "--ccdf-sizes",
                s(&p("s")),
                "--ccdf-durations",
                s(&p("d")),
                "--discovery-log",
                s(&p("l")),
            ]);
            assert_eq!(out.status.code(), Some(0));
            runs.push(["c", "s", "d", "l"].map(|n| fs::read(p(n)).unwrap()));
        }
        assert_eq!(runs[0], runs[1], "{order} runs differ");
        cliques_by_order.push(runs[0][0].clone());
    }
    assert_eq!(cliques_by_order[0], cliques_by_order[1]);
}

#[test]
fn stats_reports_every_delta() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "triangle.txt", TRIANGLE);
    let out = run(&[
        "stats", s(&input), "--delta", "1", "--delta", "2", "--delta", "3", "--jobs", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let counts: Vec<u64> = report["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["result_count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![4, 6, 4]);
    assert_eq!(report["stream"]["nodes"], 3);
    assert_eq!(report["induced_graph"]["edges"], 3);
    assert_eq!(report["induced_graph"]["maximal_cliques"], 1);
    assert!(report["induced_graph"]["class_homogeneous_fraction"].is_null());
}

#[test]
fn stats_uses_class_columns() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "classes.txt",
        "20 1 2 A A\n40 2 3 A A\n60 1 3 A A\n80 3 4 A B\n100 4 5 B B\n",
    );
    let out = run(&["stats", s(&input), "--delta", "60"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // static cliques {1,2,3}, {3,4}, {4,5}: two of three are single-class
    let frac = report["induced_graph"]["class_homogeneous_fraction"].as_f64().unwrap();
    assert!((frac - 2.0 / 3.0).abs() < 1e-12);
}
