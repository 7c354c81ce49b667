use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;

use archcat_cli::{run, Outcome, RunReport, EXIT_FAILS, EXIT_HOLDS, EXIT_USAGE};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let status = run(
        std::iter::once("archcat").chain(args.iter().copied()),
        &mut out,
    );
    (status, String::from_utf8(out).unwrap())
}

fn machine(args: &[&str]) -> (i32, RunReport) {
    let mut full = args.to_vec();
    full.extend(["--format", "machine"]);
    let (status, out) = invoke(&full);
    (
        status,
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")),
    )
}

#[test]
fn chain3_composition_condition_holds() {
    let chain3 = data("chain3.pre");
    let (status, report) = machine(&["arch1", &chain3]);
    assert_eq!(status, EXIT_HOLDS);
    let Outcome::Arch(r) = report.result else {
        panic!()
    };
    assert!(r.holds);
    assert_eq!(r.witness.as_deref(), Some("m:1->3"));
    assert_eq!(report.input_digest.as_ref().map(String::len), Some(64));
}

#[test]
fn chain3_boundedness_condition_fails() {
    let (status, report) = machine(&["arch2", &data("chain3.pre")]);
    assert_eq!(status, EXIT_FAILS);
    let Outcome::Arch(r) = report.result else {
        panic!()
    };
    let cx = r.counterexample.unwrap();
    let (x, y) = cx.strip_prefix("m:").unwrap().split_once("->").unwrap();
    assert_ne!(x, y, "{cx} is an identity");
}

#[test]
fn fixture_files_agree_with_library_fixtures() {
    use archcat::fixtures;
    let read = |n: &str| std::fs::read_to_string(data(n)).unwrap();
    let pair: archcat::CategoryData = serde_json::from_str(&read("pair.cat")).unwrap();
    assert_eq!(pair, fixtures::pair());
    let loop1: archcat::CategoryData = serde_json::from_str(&read("loop1.cat")).unwrap();
    assert_eq!(loop1, fixtures::loop1());
    let trunc3: archcat::SemigroupData = serde_json::from_str(&read("trunc3.sg")).unwrap();
    assert_eq!(trunc3, fixtures::trunc3());
    let chain3: archcat::PreorderData = serde_json::from_str(&read("chain3.pre")).unwrap();
    assert_eq!(archcat::Preorder::new(&chain3).unwrap(), fixtures::chain3());
}

#[test]
fn bounded_class_reports_least_witness() {
    let (status, out) = invoke(&["bounded", &data("chain3.pre"), "-m", "m:2->3"]);
    assert_eq!(status, EXIT_HOLDS);
    assert!(out.contains("witness: m:2->3"), "{out}");
}

#[test]
fn unclosed_preorder_needs_close() {
    let cover = data("chain3-cover.pre");
    assert_eq!(invoke(&["arch1", &cover]).0, EXIT_USAGE);
    assert_eq!(invoke(&["preorder", &cover, "validate"]).0, EXIT_FAILS);
    assert_eq!(
        invoke(&["preorder", &cover, "--close", "validate"]).0,
        EXIT_HOLDS
    );
    let (status, out) = invoke(&["--close", "arch1", &cover]);
    assert_eq!(status, EXIT_HOLDS);
    assert!(out.contains("witness: m:1->3"));
}

#[test]
fn loop1_commands() {
    let loop1 = data("loop1.cat");
    assert_eq!(invoke(&["validate", &loop1]).0, EXIT_HOLDS);
    assert_eq!(invoke(&["arch1", &loop1]).0, EXIT_HOLDS);
    let (status, out) = invoke(&["arch2", &loop1]);
    assert_eq!(status, EXIT_FAILS);
    assert!(out.contains("counterexample: g"));
    assert_eq!(
        invoke(&["unit-equiv", &loop1, "-f", "g", "-g", "id"]).0,
        EXIT_HOLDS
    );
    assert_eq!(
        invoke(&["submorphism", &loop1, "-f", "id", "-g", "g"]).0,
        EXIT_HOLDS
    );
    let (_, report) = machine(&["nv", &loop1, "-v", "g"]);
    let Outcome::Nv(nv) = report.result else {
        panic!()
    };
    assert_eq!(nv.members, ["id", "g"]);
}

#[test]
fn pair_arrow_category() {
    let (status, report) = machine(&["arrow", &data("pair.cat")]);
    assert_eq!(status, EXIT_HOLDS);
    let Outcome::Arrow(a) = report.result else {
        panic!()
    };
    assert_eq!(a.objects.len(), 3);
    assert_eq!(a.squares.len(), 6);
}

#[test]
fn trunc3_semigroup_checks() {
    let trunc3 = data("trunc3.sg");
    let (status, out) = invoke(&["semigroup", &trunc3, "unit"]);
    assert_eq!(status, EXIT_HOLDS);
    assert!(out.contains("unit: 1"));
    let (status, out) = invoke(&["semigroup", &trunc3, "bounded-multiples"]);
    assert_eq!(status, EXIT_FAILS);
    assert!(out.contains("counterexample: 1"));
    assert_eq!(invoke(&["semigroup", &trunc3, "equiv"]).0, EXIT_HOLDS);
    let (_, out) = invoke(&["semigroup", &trunc3, "multiples"]);
    assert!(out.contains("N1: {1, 2}"));
}

#[test]
fn verify_prints_pass_counts() {
    let (status, out) = invoke(&["verify", "prop1", "--size", "3"]);
    assert_eq!(status, EXIT_HOLDS);
    assert!(out.contains("29/29 pass"), "{out}");
    let (status, report) = machine(&["verify", "prop2", "--size", "2", "--sequential"]);
    assert_eq!(status, EXIT_HOLDS);
    assert!(matches!(report.result, Outcome::Proposition(ref p) if p.checked == 4));
}

#[test]
fn enumerate_lists_preorders() {
    let (_, report) = machine(&["enumerate", "preorders", "--size", "3"]);
    let Outcome::Preorders(list) = report.result else {
        panic!()
    };
    assert_eq!(list.count, 29);
    assert_eq!(list.preorders.len(), 29);
}

#[test]
fn machine_output_round_trips() {
    for args in [
        vec!["arch1".to_string(), data("chain3.pre")],
        vec!["arrow".to_string(), data("pair.cat")],
        vec![
            "semigroup".to_string(),
            data("trunc3.sg"),
            "equiv".to_string(),
        ],
        vec![
            "verify".to_string(),
            "lemma1".to_string(),
            "--size".to_string(),
            "2".to_string(),
        ],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (_, report) = machine(&args);
        let text = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}

#[test]
fn machine_output_is_deterministic() {
    let strip = |mut r: RunReport| {
        r.elapsed_ms = 0;
        r
    };
    for args in [
        ["verify", "prop1", "--size", "3"],
        ["verify", "lemma1", "--size", "2"],
    ] {
        let (_, a) = machine(&args);
        let (_, b) = machine(&args);
        assert_eq!(strip(a), strip(b));
    }
}

#[test]
fn malformed_input_reports_position() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"{\n  \"objects\": [1]\n}\n").unwrap();
    let (status, out) = invoke(&["validate", file.path().to_str().unwrap()]);
    assert_eq!(status, EXIT_USAGE);
    assert!(out.contains(":2:15:"), "{out}");
}

#[test]
fn invalid_category_is_a_validation_failure() {
    let mut data = archcat::fixtures::non_associative();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    serde_json::to_writer(&mut file, &data).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let (status, out) = invoke(&["validate", &path]);
    assert_eq!(status, EXIT_FAILS);
    assert!(out.contains("associativity"), "{out}");
    assert_eq!(invoke(&["arch1", &path]).0, EXIT_USAGE);

    data.composition.pop();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    serde_json::to_writer(&mut file, &data).unwrap();
    let (_, out) = invoke(&["validate", file.path().to_str().unwrap()]);
    assert!(out.contains("missing composite"), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["arch1", "/nonexistent/file"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "prop1", "--size", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "prop1", "--size", "9"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["nv", &data("loop1.cat"), "-v", "h"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_HOLDS);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_archcat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["arch1", &data("chain3.pre")]), Some(0));
    assert_eq!(status(&["arch2", &data("chain3.pre")]), Some(1));
    assert_eq!(status(&["arch2"]), Some(2));
}
