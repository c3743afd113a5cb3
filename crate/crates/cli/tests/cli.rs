use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cyclehom::graph::parse_graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclehom"))
}

fn dir(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn write(d: &Path, name: &str, text: &str) -> PathBuf {
    let p = d.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C5: &str = "# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const K3: &str = "3 3\n0 1\n1 2\n2 0\n";
const P9: &str = "9 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n";

#[test]
fn solve_cycle_and_triangle() {
    let d = dir("solve");
    let c5 = write(&d, "c5", C5);
    let o = run(bin().args(["solve", c5.to_str().unwrap(), "--k", "5"]));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("SAT\n"));
    assert_eq!(out.lines().count(), 6);
    let k3 = write(&d, "k3", K3);
    let o = run(bin().args(["solve", k3.to_str().unwrap(), "--k", "5"]));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "UNSAT\n");
}

#[test]
fn p9_algo_rejects_long_paths() {
    let d = dir("p9");
    let p9 = write(&d, "p9", P9);
    let o = run(bin().args(["solve", p9.to_str().unwrap(), "--k", "5", "--algo", "p9"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("P9-free"));
    let o = run(bin().args(["solve", p9.to_str().unwrap(), "--k", "5"]));
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn algo_and_k_must_match() {
    let d = dir("algo");
    let c5 = write(&d, "c5", C5);
    for (algo, k) in [("p9", "6"), ("localized", "9")] {
        let o = run(bin().args(["solve", c5.to_str().unwrap(), "--k", k, "--algo", algo]));
        assert_eq!(o.status.code(), Some(2), "{algo} {k}");
    }
    let o = run(bin().args(["solve", c5.to_str().unwrap(), "--k", "2"]));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_algorithm_round_trips_through_verify() {
    let d = dir("roundtrip");
    let g = write(&d, "g", "8 9\n0 1\n1 2\n2 3\n3 0\n3 4\n4 5\n5 6\n6 7\n7 4\n");
    let lists = write(&d, "l", "0: 1\n5: 2 4\n");
    for (algo, k) in [("auto", "5"), ("p9", "7"), ("oracle", "6"), ("localized", "11"), ("auto", "12"), ("auto", "4")] {
        let sol = d.join(format!("sol-{algo}-{k}"));
        let o = run(bin().args(["solve", g.to_str().unwrap(), "--k", k, "--algo", algo, "--lists"]).arg(&lists).arg("--out").arg(&sol));
        assert_eq!(o.status.code(), Some(0), "{algo} {k}");
        let v = run(bin().args(["verify", g.to_str().unwrap()]).arg(&sol).args(["--k", k, "--lists"]).arg(&lists));
        assert_eq!(v.status.code(), Some(0), "{algo} {k}");
    }
}

#[test]
fn verify_examples() {
    let d = dir("verify");
    let c5 = write(&d, "c5", C5);
    let identity = write(&d, "id", "v 0 1\nv 1 2\nv 2 3\nv 3 4\nv 4 5\n");
    let constant = write(&d, "const", "v 0 1\nv 1 1\nv 2 1\nv 3 1\nv 4 1\n");
    let lists = write(&d, "lists", "0: 2 3\n");
    let c = |f: &PathBuf, l: Option<&PathBuf>| {
        let mut cmd = bin();
        cmd.args(["verify", c5.to_str().unwrap()]).arg(f).args(["--k", "5"]);
        if let Some(l) = l {
            cmd.arg("--lists").arg(l);
        }
        run(&mut cmd).status.code()
    };
    assert_eq!(c(&identity, None), Some(0));
    assert_eq!(c(&constant, None), Some(1));
    assert_eq!(c(&identity, Some(&lists)), Some(1));
    let partial = write(&d, "partial", "v 0 1\n");
    assert_eq!(c(&partial, None), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let d = dir("parse");
    let bad = write(&d, "bad", "3 2\n0 1\n");
    let o = run(bin().args(["solve", bad.to_str().unwrap(), "--k", "5"]));
    assert_eq!(o.status.code(), Some(2));
    let c5 = write(&d, "c5", C5);
    let lists = write(&d, "lists", "0: 9\n");
    let o = run(bin().args(["solve", c5.to_str().unwrap(), "--k", "5", "--lists"]).arg(&lists));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_chain_and_identity_subdivision() {
    let d = dir("generate");
    let out = d.join("chain");
    let o = run(bin().args(["generate", "chain", "--d", "2", "--k", "5", "--out"]).arg(&out));
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&fs::read_to_string(d.join("chain.graph")).unwrap()).unwrap();
    assert_eq!(g.n(), 2 * 5 - 2);
    let meta = fs::read_to_string(d.join("chain.meta")).unwrap();
    assert!(meta.contains("claim = "));

    let c5 = write(&d, "c5", C5);
    let out = d.join("sub");
    let o = run(bin().args(["generate", "subdivide", "--m", "1", "--input"]).arg(&c5).arg("--out").arg(&out));
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&fs::read_to_string(d.join("sub.graph")).unwrap()).unwrap();
    assert_eq!(g, parse_graph(C5).unwrap());
}

#[test]
fn generate_nae_vertex_count() {
    let d = dir("nae");
    let f = write(&d, "f.cnf", "p cnf 3 1\n1 2 3 0\n");
    let out = d.join("nae");
    let o = run(bin().args(["generate", "nae", "--s", "2", "--input"]).arg(&f).arg("--out").arg(&out));
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&fs::read_to_string(d.join("nae.graph")).unwrap()).unwrap();
    // z, 3 variables, 3 clause vertices, a triangle of 3-edge paths, 3 connectors of 2*6*3+1 edges
    let (s, dd) = (2usize, 6usize);
    let inner_triangle = 3 * (2 * s - 2);
    let connectors = 3 * (2 * dd * (2 * s - 1));
    assert_eq!(g.n(), 1 + 3 + 3 + inner_triangle + connectors);
}

#[test]
fn generate_list_instance_solves_like_its_formula() {
    let d = dir("mono");
    let sat = write(&d, "sat.cnf", "p cnf 2 2\n1 2 0\n-1 -2 0\n");
    let unsat = write(&d, "unsat.cnf", "p cnf 4 6\n-1 -4 0\n-1 -2 0\n-2 -3 0\n1 3 0\n-3 -4 0\n2 4 0\n");
    for (f, code) in [(&sat, 0), (&unsat, 1)] {
        let out = d.join("inst");
        let o = run(bin().args(["generate", "monotone-list", "--s", "3", "--input"]).arg(f).arg("--out").arg(&out));
        assert_eq!(o.status.code(), Some(0));
        let o = run(bin()
            .args(["solve"])
            .arg(d.join("inst.graph"))
            .args(["--k", "6", "--algo", "oracle", "--lists"])
            .arg(d.join("inst.lists")));
        assert_eq!(o.status.code(), Some(code));
    }
}

#[test]
fn check_reports() {
    let d = dir("check");
    let petersen = write(
        &d,
        "petersen",
        "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n",
    );
    let out = stdout(&run(bin().arg("check").arg(&petersen)));
    assert!(out.contains("trianglefree=yes"));
    assert!(out.contains("girth=5"));
    assert!(out.contains("maxdegree=3"));
    let c9 = write(&d, "c9", "9 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 0\n");
    let out = stdout(&run(bin().arg("check").arg(&c9).args(["--t", "8", "--t", "9"])));
    assert!(out.contains("girth=9"));
    assert!(out.contains("p8free=no") && out.contains("p9free=yes"));
    let star = write(&d, "star", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    let out = stdout(&run(bin().arg("check").arg(&star).args(["--k", "5", "--variant", "extension"])));
    assert!(out.contains("verdict=NPCompleteKnown"));
}
