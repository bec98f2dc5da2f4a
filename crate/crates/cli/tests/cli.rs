use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn mixarea(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixarea"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

#[test]
fn mixed_area_examples() {
    let o = mixarea(&["mixed-area", &data("three_segments_and_point.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let entries: Vec<&str> = v["offDiagonal"]["entries"].as_object().unwrap().values().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(entries, ["1", "1", "0", "1", "0", "0"]);

    let v = json(&mixarea(&["mixed-area", &data("square.json")]));
    assert_eq!(v["diagonal"], serde_json::json!(["1"]));

    let v = json(&mixarea(&["mixed-area", &data("newton_polytopes.json")]));
    let entries: Vec<&str> = v["offDiagonal"]["entries"].as_object().unwrap().values().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(entries, ["3/2", "1", "2", "2", "9/2", "5/2"]);
}

#[test]
fn pluecker_exit_codes() {
    assert_eq!(mixarea(&["pluecker", "check", &data("example_vector.json")]).status.code(), Some(0));
    let o = mixarea(&["pluecker", "check", &data("violating_vector.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["violations"][0]["quadruple"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(mixarea(&["pluecker", "check", "--values", "1,2,x"]).status.code(), Some(2));
    assert_eq!(mixarea(&["pluecker", "check", "--values", "1,2,3,4"]).status.code(), Some(2));
    assert_eq!(mixarea(&["pluecker", "check", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn pluecker_subcommands() {
    let o = mixarea(&["pluecker", "classify", "--values", "1,1,0,1,0,0", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "K_{1,1,1} + 1 isolated");
    let v = json(&mixarea(&["pluecker", "embed", "--values", "1,2,3"]));
    assert_eq!(v["n"], 4);
    let v = json(&mixarea(&["pluecker", "normalize", "--values", "2,6,0,0,3,9"]));
    assert!(v["canonical"].is_object());
    let o = mixarea(&["pluecker", "witness8", "--values", "1,1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["relation"], "1");
    assert_eq!(mixarea(&["pluecker", "witness8", "--values", "1,1,0,1,0,0"]).status.code(), Some(1));
}

#[test]
fn realize_subcommands() {
    let o = mixarea(&["realize", "pl4", "--values", "1,1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["component"], serde_json::to_value(mixarea::pluecker::Pl4Component::K1111).unwrap());
    assert_eq!(v["bodies"].as_array().unwrap().len(), 4);
    let o = mixarea(&["realize", "pmv3", "--values", "0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["recomputed"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(mixarea(&["realize", "mv22", "--values", "1,0,1"]).status.code(), Some(1));
    assert_eq!(mixarea(&["realize", "mv22", "--values", "1,3,5"]).status.code(), Some(0));
    assert_eq!(mixarea(&["realize", "pl4", "--values", "3,1,1,1,1,3"]).status.code(), Some(1));
}

#[test]
fn configs_census() {
    let o = mixarea(&["configs", "--format", "table"]);
    assert!(stdout(&o).starts_with("profile 2,2,2,2,2,2: 5 classes, 3 feasible"));
    let o = mixarea(&["configs", "--profile", "3,3,2,2,2", "--format", "table"]);
    assert!(stdout(&o).starts_with("profile 3,3,2,2,2: 1 class, 1 feasible"));
    assert_eq!(mixarea(&["configs", "--profile", "2,2,2"]).status.code(), Some(2));
}

#[test]
fn tropical_subcommands() {
    let o = mixarea(&["tropical", "config", "--preset", "four-curves", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "(3, 2, 4, 4, 9, 5)");
    let o = mixarea(&["tropical", "bkk", &data("two_lines.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["equal"], true);
    let o = mixarea(&["tropical", "intersect", &data("shared_vertex.json")]);
    assert_eq!(o.status.code(), Some(1));
    let o = mixarea(&["tropical", "intersect", &data("two_lines.json")]);
    assert_eq!(json(&o)["total"], 1);
    let v = json(&mixarea(&["tropical", "curve", "--preset", "line"]));
    assert_eq!(v["curve"]["rays"].as_array().unwrap().len(), 3);
    assert_eq!(mixarea(&["tropical", "curve", "--preset", "nope"]).status.code(), Some(2));
    assert_eq!(mixarea(&["tropical", "bkk", "--preset", "four-curves"]).status.code(), Some(2));
}

#[test]
fn plots_are_deterministic_files() {
    let dir = std::env::temp_dir().join(format!("mixarea-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.svg");
    let b = dir.join("b.svg");
    for p in [&a, &b] {
        let o = mixarea(&["tropical", "plot", "--preset", "four-curves", "-o", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert_eq!(svg.matches(r#"class="crossing""#).count(), 27);
    let o = mixarea(&["tropical", "plot", "--preset", "four-curves", "--subdivisions"]);
    assert_eq!(stdout(&o).matches(r#"class="cell""#).count(), 21);
    let o = mixarea(&["tropical", "plot", "--preset", "line", "--window", "-1,-1,-1,2"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fuzz_and_dimension() {
    let a = mixarea(&["fuzz", "pluecker", "--trials", "50", "--seed", "7"]);
    let b = mixarea(&["fuzz", "pluecker", "--trials", "50", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = mixarea(&["fuzz", "lemmas", "--trials", "30", "--profile", "parallel-pairs"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(mixarea(&["fuzz", "nonsense"]).status.code(), Some(2));
    assert_eq!(mixarea(&["fuzz", "bkk", "--trials", "0"]).status.code(), Some(2));
    let o = mixarea(&["dimension", &data("matrix3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["jacobianRank"], 6);
    assert_eq!(mixarea(&["dimension", "--values", "1,1;1,1"]).status.code(), Some(2));
}
