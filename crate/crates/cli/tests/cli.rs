use std::process::{Command, Output};

fn gpn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_petersen() {
    let o = gpn(&["solve", "--input", "gen:petersen"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("gp = 6"), "{text}");
    assert!(text.contains("method: Diameter2"), "{text}");
}

#[test]
fn solve_json_schema() {
    let o = gpn(&["solve", "--input", "g6:Dhc", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["value"], 3);
    assert_eq!(v["result"]["verified"], true);
    assert_eq!(v["result"]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn solve_methods() {
    let exact = gpn(&["solve", "--input", "gen:cycle:7", "--method", "exact", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&exact.stdout).unwrap();
    assert_eq!((v["result"]["value"].as_u64(), v["result"]["method"].as_str()), (Some(3), Some("Exact")));
    // no closed form covers C_7
    let formula = gpn(&["solve", "--input", "gen:cycle:7", "--method", "formula"]);
    assert_eq!(formula.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3_with_a_bound() {
    let o = gpn(&["solve", "--input", "gen:petersen", "--method", "exact", "--max-nodes", "3", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "budget_exhausted");
    let bound = v["lower_bound"].as_u64().unwrap();
    assert_eq!(v["witness"].as_array().unwrap().len() as u64, bound);
}

#[test]
fn verify_reports_interior_vertex() {
    let o = gpn(&["verify", "--input", "gen:path:4", "--set", "0,1,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "FAIL: InteriorVertex(0,1,3)");

    let ok = gpn(&["verify", "--input", "gen:petersen", "--set", "0,1,3,7,8,9", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["in_general_position"], true);
    assert_eq!(v["characterized"], true);
}

#[test]
fn verify_rejects_bad_sets() {
    assert_eq!(gpn(&["verify", "--input", "gen:path:4", "--set", "0,9"]).status.code(), Some(2));
    assert_eq!(gpn(&["verify", "--input", "gen:path:4", "--set", "1,1"]).status.code(), Some(2));
    assert_eq!(gpn(&["verify", "--input", "gen:path:4", "--set", "a"]).status.code(), Some(2));
}

#[test]
fn invariants_table() {
    let o = gpn(&["invariants", "--input", "gen:complete_bipartite:3x3", "--all", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gp"], 3);
    assert_eq!(v["psi"], 6);
    assert_eq!(v["upper_hull"], 2);
    assert_eq!(v["diameter"], 2);
}

#[test]
fn generate_formats() {
    assert_eq!(stdout(&gpn(&["generate", "gen:cycle:5"])).trim(), "Dhc");
    assert_eq!(stdout(&gpn(&["generate", "path:3", "--emit", "edges"])), "3\n0 1\n1 2\n");
    assert_eq!(gpn(&["generate", "grid:0"]).status.code(), Some(2));
}

#[test]
fn edge_list_files() {
    let path = std::env::temp_dir().join(format!("gpn-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, "4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = gpn(&["solve", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert!(stdout(&o).contains("gp = 2"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gpn(&["solve"]).status.code(), Some(2));
    assert_eq!(gpn(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gpn(&["solve", "--input", "gen:petersen", "--method", "fast"]).status.code(), Some(2));
}

#[test]
fn crosscheck_kn_minus_full_grid() {
    let o = gpn(&["crosscheck", "--families", "kn_minus", "--n-max", "10", "--trials", "all", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().any(|l| l.starts_with("kn_minus") && l.trim_end().ends_with(" 0")));
}

#[test]
fn crosscheck_refusals() {
    assert_eq!(gpn(&["crosscheck", "--families", "", "--n-max", "8"]).status.code(), Some(2));
    assert_eq!(gpn(&["crosscheck", "--n-max", "8"]).status.code(), Some(2));
    let o = gpn(&["crosscheck", "--families", "kn_minus", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("up to 12"));
}

#[test]
fn crosscheck_json_is_byte_identical_across_runs() {
    let args = ["crosscheck", "--families", "complement_tree,bipartite_complement", "--n-max", "9", "--trials", "30", "--seed", "5", "--json"];
    let first = gpn(&args);
    let second = gpn(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}
