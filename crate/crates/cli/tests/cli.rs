use std::process::{Command, Output};

use serde_json::Value;

fn posetlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetlab"))
        .args(args)
        .env_remove("POSETLAB_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = posetlab(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn error_code(args: &[&str]) -> String {
    let out = posetlab(args);
    assert_eq!(out.status.code(), Some(3), "{args:?}");
    let v: Value = serde_json::from_slice(&out.stderr).expect("json on stderr");
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn chromatic_of_k2() {
    let out = posetlab(&["symfun", "chromatic", "A_", "--via", "direct"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"(1,1)":"2"}"#);
}

#[test]
fn chromatic_routes_agree() {
    // The paw.
    let direct = stdout_json(&["symfun", "chromatic", "Cx", "--via", "direct"]);
    assert_eq!(stdout_json(&["symfun", "chromatic", "Cx", "--via", "poset"]), direct);
    assert_eq!(stdout_json(&["symfun", "chromatic", "Cx", "--via", "lattice"]), direct);
    let tutte = stdout_json(&["symfun", "tutte", "Cx", "--format", "doc"]);
    assert_eq!(tutte["basis"], "monomial-t");
    assert_eq!(stdout_json(&["symfun", "tutte", "Cx", "--via", "poset", "--format", "doc"]), tutte);
    assert_eq!(error_code(&["symfun", "tutte", "Cx", "--via", "lattice"]), "precondition");
}

#[test]
fn edge_poset_hunt_up_to_four_edges() {
    let v = stdout_json(&["hunt", "pe", "--max-edges", "4"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 7);
    assert_eq!(v["schema"], "posetlab/collisions");
}

#[test]
fn hunt_uses_the_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_posetlab"))
            .args(["hunt", "xg", "--max-vertices", "5", "--jobs", "2"])
            .env("POSETLAB_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    assert_eq!(run().stdout, first.stdout);
}

#[test]
fn chain_lattice_is_ambiguous() {
    // K_{1,3}
    assert_eq!(error_code(&["convert", "lc-abstract-to-pv", "Cs"]), "ambiguous-star-matching");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("chain.json");
    let out = posetlab(&["lattice", "build", "Cs", "--label", "abstract", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        error_code(&["convert", "lc-abstract-to-pv", "--from", file.to_str().unwrap()]),
        "ambiguous-star-matching"
    );
}

#[test]
fn conversions_reproduce_the_induced_poset() {
    // Two triangles sharing a vertex.
    let g = "DK{";
    let want = stdout_json(&["poset", "induced", g, "--abstract"]);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lattice.json");
    let lattice = stdout_json(&["convert", "pv-to-lc", g]);
    std::fs::write(&file, lattice.to_string()).unwrap();
    let f = file.to_str().unwrap();
    let back = stdout_json(&["convert", "lc-to-pv", "--from", f]);
    assert_eq!(back["relations"], want["relations"]);
    assert_eq!(stdout_json(&["convert", "lc-types-to-pv", g])["relations"], want["relations"]);
    assert_eq!(stdout_json(&["convert", "lc-abstract-to-pv", g])["relations"], want["relations"]);
    // C_5 comes back as a graph.
    assert_eq!(stdout_json(&["convert", "lc-abstract-to-pv", "Dhc"])["graph6"], "Dhc");
}

#[test]
fn tree_commands() {
    let dir = tempfile::tempdir().unwrap();
    let deck = dir.path().join("deck.json");
    let xg = dir.path().join("xg.json");
    // P_4
    let d = stdout_json(&["tree", "deck", "Ch"]);
    std::fs::write(&deck, d.to_string()).unwrap();
    let x = stdout_json(&["tree", "from-deck", deck.to_str().unwrap()]);
    assert_eq!(x, stdout_json(&["symfun", "chromatic", "Ch", "--format", "doc"]));
    std::fs::write(&xg, x.to_string()).unwrap();
    let t = stdout_json(&["tree", "tutte-from-xg", "--from", xg.to_str().unwrap()]);
    assert_eq!(t, stdout_json(&["symfun", "tutte", "Ch", "--format", "doc"]));
    let s = stdout_json(&["tree", "degseq", "Ch"]);
    assert_eq!(s["degrees"], serde_json::json!([2, 2, 1, 1]));
    // C_4 is not a tree.
    assert_eq!(error_code(&["tree", "deck", "Cl"]), "not-a-tree");
}

#[test]
fn hom_commands() {
    assert_eq!(stdout_json(&["hom", "count", "Bg", "Ch"])["hom"], "10");
    assert_eq!(stdout_json(&["hom", "mono", "Bw", "C~", "--method", "inversion"])["mono"], "24");
    let w = stdout_json(&["hom", "witness", "Cs", "Bw", "--max-n", "4"]);
    assert!(w["witness"].is_string());
    assert_eq!(error_code(&["hom", "witness", "Bw", "Bw"]), "precondition");
    let scan = stdout_json(&["hom", "scan", "--n", "3"]);
    assert_eq!(scan["survivors"], serde_json::json!([]));
    assert!(scan["caveat"].as_str().unwrap().contains("finite restriction"));
}

#[test]
fn dot_output_and_mobius() {
    let out = posetlab(&["poset", "edge", "Bw", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n0 -> n1 [label=\"2\"]") && text.contains("n1 -> n2 [label=\"3\"]"), "{text}");
    let m = stdout_json(&["mobius", "Bw"]);
    let mus: Vec<&str> = m["values"].as_array().unwrap().iter().map(|x| x["mu"].as_str().unwrap()).collect();
    assert_eq!(mus, ["1", "-1", "2"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(posetlab(&["bogus"]).status.code(), Some(2));
    assert_eq!(posetlab(&["poset", "induced"]).status.code(), Some(2));
    assert_eq!(posetlab(&["hunt", "pe", "--max-edgez", "3"]).status.code(), Some(2));
    assert_eq!(posetlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_graph6_is_a_domain_error() {
    assert_eq!(error_code(&["poset", "induced", "A`"]), "graph6-parse");
}

#[test]
fn output_is_deterministic() {
    let args = ["lattice", "build", "DK{", "--label", "partial"];
    assert_eq!(posetlab(&args).stdout, posetlab(&args).stdout);
}
