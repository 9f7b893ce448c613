use std::process::{Command, Output};

fn weave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weave")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

#[test]
fn mutate_rank_two() {
    let o = weave(&["mutate", "--matrix", "[[0,1],[-3,0]]", "-k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[[0,-1],[3,0]]");
    let o = weave(&["mutate", "--matrix", "[[0,1],[-3,0]]", "-k", "1", "-k", "1"]);
    assert_eq!(stdout(&o).trim(), "[[0,1],[-3,0]]");
}

#[test]
fn fold_e6_by_z3() {
    let o = weave(&["fold", "--triple", "E6t-Z3-G2t"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[[0,1,0],[-3,0,-1],[0,1,0]]");
    assert!(String::from_utf8_lossy(&o.stderr).contains("G~2"));
}

#[test]
fn verify_a2_pentagon() {
    let o = weave(&["verify", "a2-pentagon"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5 seeds, cycle");
    assert_eq!(weave(&["verify", "2"]).status.code(), Some(0));
    assert_eq!(weave(&["verify", "no-such"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    // usage: unknown subcommand, missing flag, malformed json
    let o = weave(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty() && o.stdout.is_empty());
    assert_eq!(weave(&["mutate", "-k", "1"]).status.code(), Some(2));
    assert_eq!(weave(&["mutate", "--matrix", "[[0,1],", "-k", "1"]).status.code(), Some(2));
    // domain: not skew-symmetrizable, index out of range
    assert_eq!(weave(&["mutate", "--matrix", "[[0,1],[1,0]]", "-k", "1"]).status.code(), Some(1));
    assert_eq!(weave(&["mutate", "--matrix", "[[0,1],[-1,0]]", "-k", "3"]).status.code(), Some(1));
    assert_eq!(weave(&["fold", "--triple", "nope"]).status.code(), Some(1));
    assert_eq!(weave(&["--help"]).status.code(), Some(0));
}

#[test]
fn explore_is_deterministic_and_round_trips() {
    let args = ["explore", "--matrix", "[[0,1,0],[-1,0,1],[0,-1,0]]", "--depth", "8"];
    let a = weave(&args);
    assert_eq!(a.status.code(), Some(0));
    let mut jobs = args.to_vec();
    jobs.extend(["--jobs", "3"]);
    let b = weave(&jobs);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let again: serde_json::Value = serde_json::from_str(&v.to_string()).unwrap();
    assert_eq!(v, again);
    assert!(String::from_utf8_lossy(&a.stderr).starts_with("14 seeds"));
    let dot = weave(&["explore", "--matrix", "[[0,1],[-1,0]]", "--depth", "5", "--format", "dot"]);
    assert_eq!(stdout(&dot).matches("dir=none").count(), 5);
}

#[test]
fn seed_json_round_trips() {
    let o = weave(&["mutate", "--matrix", "[[0,1],[-3,0]]", "--seed", "initial", "-k", "1,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let back = weave(&["mutate", "--seed", &text]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(json(&o), json(&back));
    let v = json(&o);
    assert_eq!(v["n"], 2);
    assert_eq!(v["variables"].as_array().unwrap().len(), 2);
}

#[test]
fn braid_commands() {
    let o = weave(&["braid", "delta", "--strands", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let w = json(&o);
    assert_eq!(w["letters"].as_array().unwrap().len(), 3);

    let o = weave(&["braid", "rewrite", "--word", "s1 s2 s1", "--rule", "b1@1"]);
    assert_eq!(json(&o)["letters"], serde_json::json!([2, 1, 2]));
    assert_eq!(weave(&["braid", "rewrite", "--word", "s1 s1 s1", "--rule", "b1@1"]).status.code(), Some(1));
    assert_eq!(weave(&["braid", "rewrite", "--word", "s1", "--rule", "x"]).status.code(), Some(2));

    let o = weave(&["braid", "equiv", "--word", "s1 s3 s2", "--word", "s3 s1 s2", "--strands", "4"]);
    let v = json(&o);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["witness"], serde_json::json!(["c1,3@1"]));

    let o = weave(&["braid", "parse", "--word", "beta(D4)"]);
    assert_eq!(o.status.code(), Some(0));
    let o = weave(&["braid", "brick", "--word", "s1^4"]);
    assert_eq!(stdout(&o).trim(), "[[0,1,0],[-1,0,1],[0,-1,0]]");
}

#[test]
fn ngraph_commands() {
    let dir = std::env::temp_dir().join(format!("weave-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = dir.join("d4.json");
    let o = weave(&["ngraph", "build", "--type", "D~4", "--out", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let input = ["--input", g.to_str().unwrap()];

    let q = weave(&[&["ngraph", "quiver"][..], &input].concat());
    let rows: Vec<Vec<i64>> = serde_json::from_slice(&q.stdout).unwrap();
    assert_eq!(rows.len(), 5);
    let arrows: i64 = rows.iter().flatten().filter(|&&x| x > 0).sum();
    assert_eq!(arrows, 4);

    assert_eq!(weave(&[&["ngraph", "validate"][..], &input].concat()).status.code(), Some(0));
    let c = dir.join("c.json");
    let o = weave(&[&["ngraph", "coxeter", "--out", c.to_str().unwrap()][..], &input].concat());
    assert_eq!(o.status.code(), Some(0));
    let q2 = weave(&["ngraph", "quiver", "--input", c.to_str().unwrap()]);
    assert_eq!(q.stdout, q2.stdout);

    let m = weave(&[&["ngraph", "mutate", "-k", "2"][..], &input].concat());
    assert_eq!(m.status.code(), Some(0));
    let p = weave(&["ngraph", "padding", "--label", "C(3,3,3)"]);
    assert_eq!(p.status.code(), Some(0));
    assert_eq!(weave(&["ngraph", "padding", "--label", "Q"]).status.code(), Some(1));
    assert_eq!(weave(&["ngraph", "build", "--type", "B3"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
