use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alphaspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn complete_graph_spectrum() {
    let o = run(&[
        "spectrum", "--family", "complete", "--n", "5", "--alpha", "0.5",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4, 1.5 (x4)");
}

#[test]
fn single_edge_at_alpha_one() {
    let o = run(&["spectrum", "--family", "path", "--n", "2", "--alpha", "1"]);
    assert_eq!(stdout(&o).trim(), "1 (x2)");
}

#[test]
fn table_one_first_cell() {
    let o = run(&["table", "--which", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("family,param,quantity,alpha,value\n"));
    assert!(text.contains("\npath,100,lambda1,0.0,1.99903\n"));
}

#[test]
fn validation_errors_exit_one_with_one_line() {
    for args in [
        vec!["spectrum", "--family", "path", "--n", "4", "--alpha", "1.2"],
        vec!["spectrum", "--family", "path", "--n", "4", "--unknown"],
        vec!["spectrum", "--family", "nonesuch", "--n", "4"],
        vec!["table", "--which", "7"],
        vec!["spectrum"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn malformed_edge_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 2\n0 1\n1 x").unwrap();
    let o = run(&["spectrum", "--edges", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn linegraph_round_trip() {
    let o = run(&["linegraph", "--family", "wheel", "--n", "6"]);
    assert!(o.status.success());
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(&o.stdout).unwrap();
    let via_file = run(&[
        "spectrum",
        "--edges",
        f.path().to_str().unwrap(),
        "--alpha",
        "0:1:0.25",
    ]);
    assert!(via_file.status.success());

    let g = alphaspec::Family::Wheel(6).build().unwrap();
    let lg = alphaspec::LineGraph::of(&g).unwrap();
    let text = stdout(&via_file);
    for (line, a) in text.lines().zip([0.0, 0.25, 0.5, 0.75]) {
        let direct =
            alphaspec::linalg::spectrum(&alphaspec::linalg::a_alpha(&lg.graph, a).unwrap())
                .unwrap();
        let listed: Vec<f64> = line
            .split_once(": ")
            .unwrap()
            .1
            .split(", ")
            .flat_map(|tok| {
                let (v, k) = match tok.split_once(" (x") {
                    Some((v, k)) => (v, k.trim_end_matches(')').parse::<usize>().unwrap()),
                    None => (tok, 1),
                };
                std::iter::repeat_n(v.parse::<f64>().unwrap(), k)
            })
            .collect();
        assert_eq!(listed.len(), direct.len());
        for (x, y) in listed.iter().zip(direct.eigenvalues()) {
            assert!((x - y).abs() < 1e-9, "alpha {a}: {x} vs {y}");
        }
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.csv");
    let o = run(&[
        "bounds",
        "--family",
        "star",
        "--n",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("graph_id,alpha,bound,side,target,value,eigenvalue,gap,holds\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn verify_reports_each_check() {
    let o = run(&["verify", "--family", "petersen"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l.starts_with("PASS charpoly_identities")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn search_and_sweep_emit_csv() {
    let o = run(&[
        "search",
        "--predicate",
        "upper_ordering",
        "--exhaustive",
        "4",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "predicate,graph_id,n,m,alpha,lhs,rhs,edge_list"
    );

    let o = run(&[
        "sweep",
        "--family",
        "star",
        "--n",
        "10",
        "--bounds",
        "eq12,rowsum_lo",
        "--alpha",
        "0:1:0.5",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 5 * 2);
    assert!(text.contains("star,10,eq12_diff,0.5,"));
}

#[test]
fn thread_cap_is_respected() {
    let o = Command::new(env!("CARGO_BIN_EXE_alphaspec"))
        .args(["table", "--which", "3"])
        .env("ALPHASPEC_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_alphaspec"))
        .args(["table", "--which", "3"])
        .env("ALPHASPEC_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
