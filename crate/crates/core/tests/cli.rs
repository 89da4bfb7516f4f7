//! Golden-file and round-trip tests for the command-line front end.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::fs;
use std::path::{Path, PathBuf};

use mocklie::cli::{parse, render_document, run, Outcome};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).display().to_string()
}

fn invoke(args: &[&str]) -> Outcome {
    let fixtures = root().join("fixtures");
    let mut full = vec!["mocklie".to_string()];
    for a in args {
        full.push(match a.strip_prefix('@') {
            Some(f) => fixtures.join(f).display().to_string(),
            None => a.to_string(),
        });
    }
    run(full)
}

/// Output with the fixture directory replaced so goldens are machine independent.
fn transcript(o: &Outcome) -> String {
    let dir = root().join("fixtures").display().to_string();
    format!("exit {}\n{}", o.code, o.output.replace(&dir, "<fixtures>"))
}

const CASES: &[(&str, &[&str])] = &[
    ("check_e2", &["check", "--mock-lie", "@e2.alg"]),
    ("check_g2lambda1", &["check", "--mock-lie", "@g2lambda1.alg"]),
    ("check_h3_all_structured", &["--format", "structured", "check", "--all", "@h3.alg"]),
    ("check_h3_axioms", &["check", "--axioms", "associativity,jordan_super", "@h3.alg"]),
    ("check_d4_form", &["check", "--form", "--jordan", "@e2_hyperbolic.alg"]),
    ("props_h3", &["props", "@h3.alg"]),
    ("props_e2_hyperbolic", &["--format", "structured", "props", "@e2_hyperbolic.alg"]),
    ("decompose_s2", &["decompose", "@s2.alg"]),
    ("decompose_s4_structured", &["--format", "structured", "decompose", "@s4.alg"]),
    ("construct_direct_sum", &["construct", "direct-sum", "@e2.alg", "@h3.alg"]),
    ("construct_tensor", &["construct", "tensor", "@h3.alg", "@grassmann1.alg"]),
    (
        "construct_tensor_paper_literal",
        &["--format", "structured", "construct", "tensor", "--koszul", "paper-literal", "@h3.alg", "@grassmann1.alg"],
    ),
    ("construct_semidirect_broken", &["--format", "structured", "construct", "semidirect", "@e2_modules.alg", "--rep", "broken"]),
    ("construct_coadjoint", &["construct", "semidirect", "@e2.alg", "--coadjoint"]),
    ("construct_central_ext", &["construct", "central-ext", "@e2_modules.alg", "--rep", "trivial", "--cocycle", "W"]),
    ("construct_tstar", &["construct", "tstar", "@h3.alg"]),
    ("construct_tstar_twisted", &["--format", "structured", "construct", "tstar", "@abelian2_twisted.alg", "--cocycle", "bad"]),
    ("construct_d4", &["construct", "double-ext", "@e2_hyperbolic.alg", "@ka.alg", "--rep", "phi"]),
    ("construct_gdext", &["construct", "gdext", "@mixed_base.alg", "--d", "D"]),
    ("construct_gdext_lambda", &["--format", "structured", "construct", "gdext", "@mixed_base.alg", "--d", "D", "--lambda", "1"]),
    ("isometry_witness", &["isometry", "witness", "@mixed_base.alg", "--d1", "D", "--d2", "D2", "--alpha", "2"]),
    ("isometry_witness_bad_alpha", &["isometry", "witness", "@mixed_base.alg", "--d1", "D", "--d2", "D2"]),
    ("isometry_verify", &["isometry", "verify", "@s2.alg", "@s2.alg", "--map", "scale"]),
    ("isometry_verify_stretch", &["isometry", "verify", "@s2.alg", "@s2.alg", "--map", "stretch"]),
    ("intertwiner_e2", &["intertwiner", "@e2_hyperbolic.alg"]),
    ("intertwiner_h3", &["intertwiner", "@h3.alg"]),
    ("error_malformed", &["check", "@malformed.alg"]),
    ("error_unknown_axiom", &["check", "--axioms", "bogus", "@h3.alg"]),
    ("error_not_pseudo_euclidean", &["decompose", "@g2lambda1.alg"]),
];

#[test]
fn golden_transcripts() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = root().join("golden");
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let got = transcript(&invoke(args));
        let path = dir.join(format!("{name}.out"));
        if update {
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n--- want\n{want}--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for (_, args) in CASES {
        let a = invoke(args);
        let b = invoke(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn spec_exit_codes() {
    assert_eq!(invoke(&["check", "--mock-lie", "@e2.alg"]).code, 0);
    let g2 = invoke(&["check", "--mock-lie", "@g2lambda1.alg"]);
    assert_eq!(g2.code, 1);
    assert!(g2.output.contains("FAIL supercommutativity at (e0,e0) value [0, 2]"));
    let s2 = invoke(&["--format", "structured", "decompose", "@s2.alg"]);
    assert_eq!(s2.code, 0);
    let v: serde_json::Value = serde_json::from_str(&s2.output).unwrap();
    assert_eq!(v["length"], 1);
    assert_eq!(v["residual"]["dims"], serde_json::json!({"even": 0, "odd": 0}));
}

fn fixture_paths() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(root().join("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "alg") && !p.ends_with("malformed.alg"))
        .collect();
    v.sort();
    v
}

#[test]
fn fixtures_round_trip() {
    for path in fixture_paths() {
        let text = fs::read_to_string(&path).unwrap();
        let doc = parse(&text).unwrap_or_else(|e| panic!("{}: {e:?}", path.display()));
        let rendered = render_document(&doc);
        assert_eq!(parse(&rendered).unwrap(), doc, "{}", path.display());
        assert_eq!(rendered, text, "fixture {} is not in canonical form", path.display());
    }
}

#[test]
fn emitted_documents_round_trip() {
    for (_, args) in CASES.iter().filter(|(_, a)| a[0] == "construct") {
        let out = invoke(args);
        if let Ok(doc) = parse(&out.output) {
            assert_eq!(render_document(&doc), out.output);
        }
    }
}

#[test]
fn output_file_matches_stdout_document() {
    let tmp = std::env::temp_dir().join(format!("mocklie-cli-{}", std::process::id()));
    fs::create_dir_all(&tmp).unwrap();
    let target = tmp.join("d4.alg");
    let args = ["construct", "double-ext", "@e2_hyperbolic.alg", "@ka.alg", "--rep", "phi"];
    let printed = invoke(&args).output;
    let mut with_file: Vec<&str> = args.to_vec();
    let t = target.display().to_string();
    with_file.extend(["-o", &t]);
    let o = invoke(&with_file);
    assert_eq!(o.code, 0);
    assert!(o.output.contains("PASS invariant"));
    assert_eq!(fs::read_to_string(&target).unwrap(), printed);
    let check = run(["mocklie", "check", "--all", &t]);
    assert_eq!(check.code, 0, "{}", check.output);
    fs::remove_dir_all(&tmp).unwrap();
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(["mocklie", "--help"]).code, 0);
    assert_eq!(run(["mocklie", "frobnicate"]).code, 2);
    assert!(Path::new(&fixture("e2.alg")).exists());
}
