use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cobound(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cobound"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn invariants_of(spec: &str) -> Value {
    let g = cobound(&["generate", spec], None);
    assert!(g.status.success());
    let o = cobound(&["invariants"], Some(&stdout(&g)));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    json_lines(&o).remove(0)
}

#[test]
fn generate_writes_graph6_and_dimacs() {
    let o = cobound(&["generate", "g58"], None);
    assert!(o.status.success());
    let line = stdout(&o);
    assert_eq!(cobound::format::parse_graph6(line.trim()).unwrap().order(), 15);

    let o = cobound(&["generate", "schrijver:2,1"], None);
    let c = cobound::format::parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(c.order(), 5);
    assert!((0..5).all(|v| c.degree(v) == 2));

    let o = cobound(&["generate", "cycle:5", "--format", "dimacs"], None);
    assert!(stdout(&o).starts_with("p edge 5 5"));

    let o = cobound(&["generate", "--family", "cycle", "--range", "3..6"], None);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn generate_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.dimacs");
    let o = cobound(&["generate", "complete:4", "--format", "dimacs", "--out", path.to_str().unwrap()], None);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(cobound::format::parse_dimacs(&text).unwrap().edge_count(), 6);
}

#[test]
fn invariants_examples() {
    let g = invariants_of("g58");
    assert_eq!((&g["n"], &g["omega"], &g["chi"], &g["alpha"], &g["theta"]), (&15.into(), &2.into(), &3.into(), &5.into(), &8.into()));
    let x = invariants_of("extremalC:7");
    assert_eq!((&x["alpha"], &x["theta"]), (&7.into(), &11.into()));
    let k1 = invariants_of("complete:1");
    for key in ["n", "omega", "alpha", "chi", "theta"] {
        assert_eq!(k1[key], 1, "{key}");
    }
    assert_eq!(k1["nu"], 0);
    let p = invariants_of("kneser:2,1");
    assert_eq!((&p["alpha"], &p["theta"], &p["chi"], &p["nu"]), (&4.into(), &5.into(), &3.into(), &5.into()));
    assert_eq!(p["certificates"]["theta"]["kind"], "clique_cover");
}

#[test]
fn invariants_reads_dimacs_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let o = cobound(&["invariants", path.to_str().unwrap()], None);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["theta"], 3);
}

#[test]
fn verify_examples_pass() {
    let o = cobound(&["verify", "thm3col", "--family", "extremalC", "--range", "0..15"], None);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 17);
    assert!(lines[..16].iter().all(|l| l["values"]["tight"] == 1));
    assert_eq!(lines[16]["outcome"], "all_pass");

    let o = cobound(&["verify", "schrijver-chi", "--pairs", "2,1;2,2;3,1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).last().unwrap()["summary"]["passed"], 3);

    let o = cobound(&["verify", "gap912", "--exhaustive-n", "6"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).last().unwrap()["summary"]["tested"], 33868);

    let o = cobound(&["verify", "theta-kneser", "--pairs", "2,2", "--samples", "30", "--seed", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 32);

    let o = cobound(&["verify", "evc-cover", "--c", "2", "--spec", "g58", "--spec", "cycle:5"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_exit_one_on_violation() {
    // K5 is no induced subgraph of KG(2,1), so the bound fails.
    let o = cobound(&["verify", "alpha-kneser", "--pairs", "2,1", "--spec", "complete:5"], None);
    assert_eq!(o.status.code(), Some(1));
    let lines = json_lines(&o);
    assert_eq!(lines[0]["status"], "violation");
    assert_eq!(lines[1]["outcome"], "violation");
    let cx = &lines[1]["counterexamples"][0];
    assert_eq!(cx["graph6"], "D~{");
    assert_eq!((&cx["inequality"]["lhs"], &cx["inequality"]["rhs"]), (&10.into(), &5.into()));
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["verify", "no-such-check"][..],
        &["verify", "gap912", "--sampler", "gnp:x"],
        &["verify", "gap912", "--budget-nodes", "0", "--spec", "g58"],
        &["verify", "schrijver-chi"],
        &["generate", "kneser:2"],
        &["generate"],
        &["frobnicate"],
        &["verify", "thm3col", "--family", "extremalC", "--range", "5..1"],
    ] {
        let o = cobound(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = cobound(&["invariants"], Some("not graph6 ~~~\n"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explore_always_exits_zero() {
    let o = cobound(&["explore", "8/5"], None);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["summary"]["tested"], 0);

    let o = cobound(&["explore", "--preload-g58", "--sampler", "3partite:6..18", "--samples", "300"], None);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let summary = lines.last().unwrap();
    assert_eq!(summary["kind"], "conjecture");
    assert_eq!(summary["summary"]["findings"], 0);
    assert!(summary["notes"][0].as_str().unwrap().contains("8/5 attained"));
    assert_eq!(lines[0]["counterexample"]["inequality"]["statement"], "theta <= floor(3*alpha/2)");
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "new-gyarfas", "--sampler", "gnp:4..12", "--samples", "80", "--seed", "3"];
    let a = cobound(&args, None);
    let b = cobound(&[&args[..], &["--sequential"]].concat(), None);
    assert_eq!(
        cobound::verify::strip_meta(&stdout(&a)),
        cobound::verify::strip_meta(&stdout(&b))
    );
}
