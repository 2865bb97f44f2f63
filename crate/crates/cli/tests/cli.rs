use dspec_core::graph::{graph6, make_family};
use dspec_core::FamilySpec;
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dspec_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn doc(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn family_graph6_is_one_line_matching_the_codec() {
    let o = dspec(&["family", "--kind", "kh", "--n", "6", "--h", "4", "--emit", "graph6"]);
    assert_eq!(code(&o), 0);
    let expected = graph6::encode(&make_family(&FamilySpec::Kh { n: 6, h: 4 }).unwrap());
    assert_eq!(String::from_utf8(o.stdout).unwrap(), format!("{expected}\n"));
}

#[test]
fn family_json_has_distance_matrix() {
    let o = dspec(&["family", "--kind", "kst-bridge", "--s", "3", "--t", "2", "--quiet"]);
    assert_eq!(code(&o), 0);
    assert!(o.stderr.is_empty());
    let d = doc(&o);
    assert_eq!(d["order"], 5);
    assert_eq!(d["diameter"], 3);
    assert_eq!(d["distance_matrix"].as_array().unwrap().len(), 5);
}

#[test]
fn friendship_closed_form_sweep() {
    let o = dspec(&["verify-closed-form", "--kind", "friendship", "--k-max", "6", "--quiet"]);
    assert_eq!(code(&o), 0);
    assert_eq!(doc(&o), serde_json::json!({ "all_equal": true, "cases": 5 }));
}

#[test]
fn summary_goes_to_stderr_unless_quiet() {
    let o = dspec(&["verify-closed-form", "--kind", "kh", "--n-max", "6"]);
    assert_eq!(code(&o), 0);
    assert!(!o.stderr.is_empty());
    // 4 <= n <= 6, 3 <= h <= n-1
    assert_eq!(doc(&o)["cases"], 6);
}

#[test]
fn tables_exit_code_tracks_the_report() {
    let o = dspec(&["tables", "--quiet"]);
    let d = doc(&o);
    let pass = d["pass"].as_bool().unwrap();
    assert_eq!(code(&o) == 0, pass);
    assert_eq!(d["fixture_table"]["rows"].as_array().unwrap().len(), 20);
    let t4: Vec<&Value> = d["proof_table"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "T4")
        .collect();
    assert_eq!(t4.len(), 1);
    assert!(t4[0]["note"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["family", "--bogus"],
        vec!["family", "--kind", "kh", "--n", "6"],
        vec!["family", "--kind", "kh", "--n", "6", "--h", "2"],
        vec!["charpoly"],
        vec!["charpoly", "--kind", "path", "--n", "4", "--fixture", "H1"],
        vec!["census", "--n", "8"],
        vec!["forbidden", "--fixture", "D1"],
        vec!["verify-closed-form", "--kind", "path"],
        vec!["nope"],
    ] {
        let o = dspec(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn relaxed_allows_degenerate_members() {
    let o = dspec(&[
        "family",
        "--kind",
        "kh",
        "--n",
        "4",
        "--h",
        "2",
        "--relaxed",
        "--emit",
        "graph6",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn output_is_byte_stable_and_thread_independent() {
    let a = dspec(&["census", "--n", "6", "--quiet"]);
    let b = dspec(&["census", "--n", "6", "--quiet", "--serial"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = dspec(&["spectrum", "--fixture", "H7", "--quiet"]);
    assert_eq!(c.stdout, dspec(&["spectrum", "--fixture", "H7", "--quiet"]).stdout);
    let text = String::from_utf8(c.stdout).unwrap();
    assert!(text.contains("-0.438447"), "{text}");
}

#[test]
fn census_counts_unlabeled_graphs() {
    let d = doc(&dspec(&["census", "--n", "6", "--quiet"]));
    // connected unlabeled graphs on 6 vertices
    assert_eq!(d["census"]["isomorphism_classes"], 112);
    assert!(d["census"]["polynomial_classes"].as_u64() <= d["census"]["isomorphism_classes"].as_u64());
    assert_eq!(d["edge_count"]["pass"], true);
}

#[test]
fn graph6_from_stdin() {
    let o = dspec_stdin(&["charpoly", "--graph6", "-", "--quiet"], "C~\nCh\n");
    assert_eq!(code(&o), 0);
    let d = doc(&o);
    assert_eq!(d["graphs"][0]["display"], "x^4 - 6x^2 - 8x - 3");
    assert_eq!(d["graphs"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_graph6_strict_and_lenient() {
    let strict = dspec_stdin(&["spectrum", "--graph6", "-", "--quiet"], "C~\nC!!\n");
    assert_eq!(code(&strict), 2);
    let lenient = dspec_stdin(&["spectrum", "--graph6", "-", "--lenient"], "C~\nC!!\n");
    assert_eq!(code(&lenient), 0);
    assert_eq!(doc(&lenient)["ingest"]["malformed"], 1);
    assert!(String::from_utf8_lossy(&lenient.stderr).contains("warning"));
}

#[test]
fn ds_check_single_member() {
    let o = dspec(&["ds-check", "--kind", "kst-glued", "--s", "3", "--t", "3", "--quiet"]);
    assert_eq!(code(&o), 0);
    let d = doc(&o);
    assert_eq!(d["verdict"], "ds-at-this-scale");
    assert_eq!(d["search_space"]["candidates"], 728);
}

#[test]
fn ds_check_against_a_stream_without_the_target() {
    // K4 and C4 only; the pendant-clique graph of order 4 never appears
    let o = dspec_stdin(
        &[
            "ds-check", "--kind", "kh", "--n", "4", "--h", "3", "--graph6", "-", "--quiet",
        ],
        "C~\nCr\n",
    );
    assert_eq!(code(&o), 1);
    assert_eq!(doc(&o)["verdict"], "inconclusive");
}

#[test]
fn ds_check_batch_by_order() {
    let o = dspec(&["ds-check", "--n-max", "5", "--quiet", "--serial"]);
    let d = doc(&o);
    assert_eq!(code(&o) == 0, d["pass"].as_bool().unwrap());
    assert_eq!(d["refuted"], 0);
}

#[test]
fn forbidden_subgraph_found() {
    let o = dspec(&[
        "forbidden",
        "--kind",
        "cycle",
        "--n",
        "5",
        "--context",
        "principal",
        "--quiet",
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(doc(&o)["found"][0]["fixture"], "C5");
    let o = dspec(&["forbidden", "--kind", "kh", "--n", "7", "--h", "4", "--quiet"]);
    assert_eq!(code(&o), 0);
    assert_eq!(doc(&o)["context"], "all");
}

#[test]
fn sign_check_exit_code_tracks_the_report() {
    for kind in ["kh", "kst-bridge", "kst-glued", "friendship"] {
        let o = dspec(&["sign-check", "--kind", kind, "--n-max", "8", "--k-max", "4", "--quiet"]);
        let d = doc(&o);
        assert_eq!(code(&o) == 0, d["pass"].as_bool().unwrap(), "{kind}");
    }
    let o = dspec(&["sign-check", "--kind", "kh", "--n", "7", "--h", "4", "--quiet"]);
    assert_eq!(code(&o), 0);
    let d = doc(&o);
    assert_eq!(d["sign"]["pass"], true);
    assert_eq!(d["brackets"]["pass"], true);
}

#[test]
fn fixtures_catalog_and_detail() {
    let d = doc(&dspec(&["fixtures", "--quiet"]));
    assert_eq!(d["graphs"].as_array().unwrap().len(), 25);
    let o = dspec(&["fixtures", "--name", "param_abc(2,2,2)", "--quiet"]);
    assert_eq!(code(&o), 0);
    assert_eq!(doc(&o)["distance_matrix"].as_array().unwrap().len(), 5);
}

#[test]
fn charpoly_reports_closed_form_agreement() {
    let o = dspec(&["charpoly", "--kind", "cone", "--parts", "1,2,3", "--quiet"]);
    assert_eq!(code(&o), 0);
    let d = doc(&o);
    assert_eq!(d["closed_form"]["equal"], true);
    assert_eq!(d["order"], 7);
}
