use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use afnaive::fixtures;
use afnaive::misenum::enum_naive;
use afnaive::parse::render_apx;
use serde_json::Value;

fn afnaive(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_afnaive"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> BTreeSet<String> {
    stdout(o).lines().map(String::from).collect()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn running() -> String {
    render_apx(&fixtures::running())
}

#[test]
fn preferred_extensions_of_running_example() {
    let want: BTreeSet<String> = ["[4,5]", "[1,3]", "[2,5]"].map(String::from).into();
    let via_irr = afnaive(&["enum", "preferred", "--via", "irr"], &running());
    assert_eq!(lines(&via_irr), want);
    assert_eq!(stdout(&via_irr).lines().count(), 3);
    assert_eq!(
        lines(&afnaive(
            &["enum", "preferred", "--via", "oracle"],
            &running()
        )),
        want
    );
    assert_eq!(
        lines(&afnaive(&["semantics", "--family", "pref"], &running())),
        want
    );
}

#[test]
fn naive_bijective_check_reports_witness() {
    let input = render_apx(&fixtures::chain());
    let v = json(&afnaive(&["check", "naive-bijective"], &input));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"], serde_json::json!(["2"]));
    for mode in ["exact", "bounded", "streaming"] {
        let v = json(&afnaive(
            &["check", "naive-bijective", "--mode", mode],
            &input,
        ));
        assert_eq!(v["verdict"], false, "{mode}");
    }
    let normalized = json(&afnaive(
        &["check", "naive-bijective", "--normalize"],
        &input,
    ));
    assert_eq!(normalized["verdict"], true);
}

#[test]
fn empty_framework_has_empty_preferred_extension() {
    let o = afnaive(&["semantics", "--family", "pref"], "");
    assert_eq!(stdout(&o), "[]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(afnaive(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        afnaive(&["bench", "enum-naive", "--repetitions", "0"], &running())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(afnaive(&["parse"], "att(a,b).").status.code(), Some(3));
    assert_eq!(
        afnaive(&["parse", "-f", "tgf"], "1\n2\n").status.code(),
        Some(3)
    );
    assert_eq!(
        afnaive(&["gen", "reduce-naf"], "p cnf 1 1\n2 0\n")
            .status
            .code(),
        Some(3)
    );
    let big = render_apx(&afnaive::generators::triangle_stack_framework(9));
    assert_eq!(
        afnaive(&["semantics", "--family", "cf"], &big)
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        afnaive(&["--oracle-limit", "4", "irr"], &running())
            .status
            .code(),
        Some(4)
    );
    assert!(afnaive(&["--oracle-limit", "5", "irr"], &running())
        .status
        .success());
    assert_eq!(afnaive(&["recast"], &running()).status.code(), Some(5));
    assert_eq!(
        afnaive(
            &["check", "naive-bijective", "--mode", "bounded", "--k", "1"],
            &running()
        )
        .status
        .code(),
        Some(5)
    );
    assert_eq!(
        afnaive(&["gen", "reduce-acaf"], "p cnf 2 0\n")
            .status
            .code(),
        Some(5)
    );
}

#[test]
fn recast_writes_framework_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("recast.apx");
    let o = afnaive(
        &["recast", "--out", out.to_str().unwrap()],
        &render_apx(&fixtures::closed_four()),
    );
    assert_eq!(stdout(&o), "");
    let g = afnaive::parse::parse_apx(&fs::read_to_string(&out).unwrap()).unwrap();
    let naive: BTreeSet<Vec<String>> = enum_naive(&g)
        .map(|s| g.labels_of(&s).into_iter().map(String::from).collect())
        .collect();
    assert_eq!(
        naive,
        [vec!["1".to_string(), "4".into()], vec!["3".into()]].into()
    );
    let report: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("recast.apx.json")).unwrap())
            .unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["sigma_d"], "4 -> 1\n");
    assert_eq!(report["s_star"], serde_json::json!(["1", "3", "4"]));
}

#[test]
fn irreducibles_and_meta_framework() {
    let irr = lines(&afnaive(&["irr"], &running()));
    let want: BTreeSet<String> = ["[4]", "[4,5]", "[2]", "[2,5]", "[1,3]", "[1,2,4]"]
        .map(String::from)
        .into();
    assert_eq!(irr, want);
    let meta = stdout(&afnaive(&["meta"], &running()));
    assert!(meta.contains("att(124,124)."));
    assert!(!meta.contains("att(4,45)."));
    let naive = lines(&afnaive(&["enum", "naive"], &meta));
    let want: BTreeSet<String> = ["[4,45]", "[13]", "[2,25]"].map(String::from).into();
    assert_eq!(naive, want);
}

#[test]
fn generators_are_deterministic() {
    let args = ["gen", "random", "--n", "12", "--p", "0.3", "--seed", "42"];
    let a = stdout(&afnaive(&args, ""));
    assert_eq!(a, stdout(&afnaive(&args, "")));
    assert_eq!(
        a,
        render_apx(&afnaive::generators::random_af(12, 0.3, 42, false).unwrap())
    );
    let capped = stdout(&afnaive(
        &[
            "gen",
            "random",
            "--n",
            "20",
            "--p",
            "0.9",
            "--max-in-degree",
            "2",
        ],
        "",
    ));
    let g = afnaive::parse::parse_apx(&capped).unwrap();
    assert!(g.max_in_degree() <= 2);

    let naf = stdout(&afnaive(&["gen", "reduce-naf"], "p cnf 3 1\n1 2 3 0\n"));
    assert_eq!(naf.matches("arg(").count(), 9);
    let v = json(&afnaive(&["check", "naive-bijective"], &naf));
    assert_eq!(v["verdict"], false);
    let acaf = stdout(&afnaive(&["gen", "reduce-acaf"], "p cnf 1 1\n1 0\n"));
    assert_eq!(acaf.matches("arg(").count(), 7);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["enum", "preferred"][..],
        &["enum", "naive", "-o", "json"],
        &["irr", "-o", "json"],
        &["check", "admissible-closed"],
        &["semantics", "--family", "adm"],
    ] {
        let a = afnaive(args, &running());
        let b = afnaive(args, &running());
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}

#[test]
fn enum_naive_matches_library() {
    let f = afnaive::generators::random_af(14, 0.2, 9, false).unwrap();
    let from_cli = stdout(&afnaive(&["enum", "naive"], &render_apx(&f)));
    let from_lib: String = enum_naive(&f)
        .map(|s| format!("[{}]\n", f.labels_of(&s).join(",")))
        .collect();
    assert_eq!(from_cli, from_lib);
}

#[test]
fn tgf_input_and_limit() {
    let o = afnaive(
        &["enum", "naive", "--limit", "1", "-f", "tgf"],
        "a\nb\n#\na b\nb a\n",
    );
    assert_eq!(stdout(&o).lines().count(), 1);
    let v = json(&afnaive(
        &["enum", "naive", "-o", "json", "-f", "tgf"],
        "a\nb\n#\na b\nb a\n",
    ));
    assert_eq!(v["count"], 2);
}

#[test]
fn bench_reports_delay_and_memory() {
    let tri = render_apx(&afnaive::generators::triangle_stack_framework(10));
    let v = json(&afnaive(
        &["bench", "enum-naive", "--repetitions", "2"],
        &tri,
    ));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["solutions"], 59049);
    assert!(v["max_delay_seconds"].is_number());
    assert!(v["peak_tracked_bytes"].is_number());
    let v = json(&afnaive(&["bench", "enum-preferred"], &running()));
    assert_eq!(v["solutions"], 3);
}
