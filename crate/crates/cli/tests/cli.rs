use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn rdfent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdfent")).args(args).output().expect("binary runs")
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn intro_rdfs_entailed() {
    let o = rdfent(&["entail", "--regime", "rdfs", &f("intro_S.nt"), &f("intro_E.nt")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("VERDICT: ENTAILED"));
}

#[test]
fn intro_rdf_not_entailed() {
    let o = rdfent(&["entail", "--regime", "rdf", &f("intro_S.nt"), &f("intro_E.nt")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "VERDICT: NOT-ENTAILED");
}

#[test]
fn extensional_domain_inference() {
    let args = |r| ["entail", "--regime", r, &f("mother_S.nt"), &f("mother_E.nt")].map(str::to_string);
    let run = |r| {
        let a = args(r);
        rdfent(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    assert_eq!(run("erdfs").status.code(), Some(0));
    assert_eq!(run("rdfs").status.code(), Some(1));
}

#[test]
fn example_four_datatype_modes() {
    let d = rdfent(&["sat", "--regime", "rdfs", "--datatypes", "d", "--dtmap", &f("xsd.json"), &f("example4_S.nt")]);
    assert_eq!(d.status.code(), Some(1));
    assert_eq!(stdout(&d).trim(), "UNSATISFIABLE");
    let star = rdfent(&["sat", "--regime", "rdfs", "--datatypes", "dstar", &f("example4_S.nt")]);
    assert_eq!(star.status.code(), Some(0));
    assert_eq!(stdout(&star).trim(), "SATISFIABLE");
}

#[test]
fn witness_lines_follow_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let e = dir.path().join("e.nt");
    fs::write(&e, "_:y <http://example.org/p> _:z .\n").unwrap();
    let o = rdfent(&["entail", "--regime", "simple", &f("literals.nt"), e.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "VERDICT: ENTAILED");
    assert!(lines[1..].iter().all(|l| l.starts_with("WITNESS: ")), "{out}");
    assert_eq!(lines.len(), 3);
}

#[test]
fn inconsistent_graph_entails_via_inconsistency() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.nt");
    fs::write(
        &s,
        "\"<notXML\"^^rdf:XMLLiteral rdf:type rdf:XMLLiteral .\n",
    )
    .unwrap();
    let o = rdfent(&["entail", "--regime", "rdf", s.to_str().unwrap(), &f("intro_E.nt")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "VERDICT: ENTAILED via-inconsistency");
    let sat = rdfent(&["sat", "--regime", "rdf", s.to_str().unwrap()]);
    assert_eq!(sat.status.code(), Some(1));
}

#[test]
fn normalize_shares_representatives() {
    let o = rdfent(&["normalize", "--dtmap", &f("xsd.json"), &f("literals.nt")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let objects: Vec<&str> = out.lines().map(|l| l.split_once("> <http://example.org/p> ").unwrap().1).collect();
    assert_eq!(objects.len(), 2);
    assert_eq!(objects[0], objects[1]);
}

#[test]
fn export_dllite_prints_axioms() {
    let o = rdfent(&["export-dllite", &f("intro_S.nt")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("SubClassOf(<http://example.org/A> <http://example.org/B>)"));
    assert!(out.contains("Type(<http://example.org/o> <http://example.org/A>)"));
}

#[test]
fn export_dllite_rejects_blank_nodes() {
    let o = rdfent(&["export-dllite", &f("example4_S.nt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E_NOT_GROUND"), "{}", stderr(&o));
}

#[test]
fn path_system_reduction_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ps");
    let o = rdfent(&["gen-reduction", "path-system", &f("path_system.json"), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let expected = fs::read_to_string(out.join("expected.txt")).unwrap();
    assert!(expected.contains("VERDICT: ENTAILED\n"), "{expected}");
    let s = out.join("S.nt");
    let e = out.join("E.nt");
    assert_eq!(fs::read_to_string(&s).unwrap().lines().count(), 3);
    let v = rdfent(&["entail", "--regime", "rdfs", s.to_str().unwrap(), e.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn path_system_reduction_to_stdout() {
    let o = rdfent(&["gen-reduction", "path-system", &f("path_system.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for section in ["# S\n", "# E\n", "# expected\n"] {
        assert!(out.contains(section), "{out}");
    }
}

#[test]
fn coloring_reduction_is_refused_by_engine() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("col");
    let o = rdfent(&["gen-reduction", "k-coloring", &f("triangle.json"), "--out-dir", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let expected = fs::read_to_string(out.join("expected.txt")).unwrap();
    assert!(expected.contains("VERDICT: NOT-ENTAILED\n"), "{expected}");
    let v = rdfent(&[
        "entail",
        "--regime",
        "simple",
        "--datatypes",
        "d",
        "--dtmap",
        out.join("dtmap.json").to_str().unwrap(),
        out.join("S.nt").to_str().unwrap(),
        out.join("E.nt").to_str().unwrap(),
    ]);
    assert_eq!(v.status.code(), Some(2));
    assert!(stderr(&v).contains("E_NOT_DEFINITE"), "{}", stderr(&v));
}

#[test]
fn seeded_reductions_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    fs::write(&spec, r#"{"nodes": 6, "density": 0.3}"#).unwrap();
    let run = |seed: &str| stdout(&rdfent(&["gen-reduction", "path-system", spec.to_str().unwrap(), "--seed", seed]));
    assert_eq!(run("3"), run("3"));
}

#[test]
fn errors_exit_two_with_codes() {
    let parse = rdfent(&["entail", "--regime", "rdf", &f("xsd.json"), &f("intro_E.nt")]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(stderr(&parse).contains("E_PARSE"));

    let usage = rdfent(&["entail", "--regime", "owl", &f("intro_S.nt"), &f("intro_E.nt")]);
    assert_eq!(usage.status.code(), Some(2));

    let missing = rdfent(&["sat", "--regime", "rdf", "/nonexistent/graph.nt"]);
    assert_eq!(missing.status.code(), Some(2));

    let erdfs_d = rdfent(&["sat", "--regime", "erdfs", "--datatypes", "d", &f("intro_S.nt")]);
    assert_eq!(erdfs_d.status.code(), Some(2));
    assert!(stderr(&erdfs_d).contains("E_UNSUPPORTED"));
}

#[test]
fn resource_limits_are_errors() {
    let o = rdfent(&["--max-facts", "5", "entail", "--regime", "rdfs", &f("intro_S.nt"), &f("intro_E.nt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E_RESOURCE_LIMIT"), "{}", stderr(&o));
}

#[test]
fn stats_and_theory_go_to_stderr() {
    let o = rdfent(&["--stats", "--dump-theory", "entail", "--regime", "rdfs", &f("intro_S.nt"), &f("intro_E.nt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "VERDICT: ENTAILED");
    let err = stderr(&o);
    assert!(err.contains("# theory"));
    let stats_line = err.lines().find(|l| l.starts_with('{')).expect("stats line");
    let v: serde_json::Value = serde_json::from_str(stats_line).unwrap();
    assert!(v["facts"].as_u64().unwrap() > 0);
}
