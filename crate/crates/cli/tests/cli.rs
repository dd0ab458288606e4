mod common;

use std::fs;
use std::process::{Command, Output};

use wreathmac::cache;
use wreathmac::cherednik::kostka_matrix;
use wreathmac::golden;
use wreathmac::render::{matrix_from_json, MatrixKind};
use wreathmac::scalars::LaurentPoly;
use wreathmac::wreath::{wreath_char_table, KostkaRoute};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathmac")).args(args).env_remove("WREATHMAC_CACHE").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn kostka_trivial_group() {
    let (kind, m) = matrix_from_json(&stdout(&["kostka", "--ell", "1", "--n", "1", "--format", "json"])).unwrap();
    assert_eq!(kind, MatrixKind::Kostka);
    assert_eq!(m.size(), 1);
    assert_eq!(m.entry(0, 0), &LaurentPoly::one());
}

#[test]
fn kostka_symmetric_group_matches_tableau_oracle() {
    let (_, m) = matrix_from_json(&stdout(&["kostka", "--ell", "1", "--n", "3", "--format", "json"])).unwrap();
    for (i, (lam, row)) in common::gordon_rows(3).into_iter().enumerate() {
        assert_eq!(m.labels()[i].component(0).parts(), &lam[..]);
        for (j, coeffs) in row.iter().enumerate() {
            assert_eq!(m.entry(i, j), &LaurentPoly::from_integers(coeffs), "row {lam:?}, column {j}");
        }
    }
}

#[test]
fn b2_tables() {
    let text = stdout(&["kostka", "--ell", "2", "--n", "2", "--format", "text"]);
    assert!(text.starts_with("K(t,t) (l=2, n=2)"));
    assert!(text.contains("L(([1],[1]))   t         t           t^2+1      t         t"));
    let (_, cd) = matrix_from_json(&stdout(&["decomp", "cdelta", "--ell", "2", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(cd, golden::b2_c_delta());
    let (_, dd) = matrix_from_json(&stdout(&["decomp", "ddelta", "--ell", "2", "--n", "2", "--format", "json"])).unwrap();
    let diagonal: Vec<String> = (0..5).map(|i| dd.entry(i, i).to_string()).collect();
    assert_eq!(diagonal, ["1", "1", "t^2+1", "1", "1"]);
    assert!(dd.is_diagonal());
}

#[test]
fn decomp_all_reports_factorization() {
    let text = stdout(&["decomp", "--ell", "2", "--n", "2"]);
    for title in ["C_Delta (l=2, n=2)", "D_Delta (l=2, n=2)", "C_L (l=2, n=2)"] {
        assert!(text.contains(title), "missing {title}");
    }
    assert!(text.trim_end().ends_with("C_Delta = D_Delta C_L: holds"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["decomp", "all", "--ell", "2", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(json["c_delta_equals_d_delta_c_l"], true);
    assert_eq!(json["matrices"].as_array().unwrap().len(), 3);
}

#[test]
fn json_round_trips_and_output_is_deterministic() {
    let args = ["kostka", "--ell", "3", "--n", "2", "--format", "json"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let (_, m) = matrix_from_json(&first).unwrap();
    assert_eq!(m, kostka_matrix(3, 2, KostkaRoute::Plethystic, false).unwrap());
    let parallel = stdout(&["kostka", "--ell", "3", "--n", "2", "--format", "json", "--parallel"]);
    assert_eq!(first, parallel);
    let routed = stdout(&["kostka", "--ell", "3", "--n", "2", "--format", "json", "--route", "character-sum"]);
    assert_eq!(first, routed);
}

#[test]
fn latex_layout() {
    let tex = stdout(&["decomp", "cl", "--ell", "2", "--n", "2", "--format", "latex"]);
    assert!(tex.contains("\\begin{array}{l||r|r|r|r|r|}"));
    assert!(tex.contains("\\hline"));
    assert!(tex.contains("\\end{array}"));
}

#[test]
fn fake_degrees_output() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["fake-degrees", "--ell", "2", "--n", "2", "--format", "json"])).unwrap();
    let entries = json["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    assert_eq!(entries[2]["label"], "([1],[1])");
    assert_eq!(entries[2]["fake_degree"], "t^3+t");
    assert_eq!(entries[2]["reduced"], "t^2+1");
}

#[test]
fn char_table_writes_and_reloads_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = stdout(&["char-table", "--ell", "2", "--n", "2", "--cache-dir", d]);
    let path = cache::cache_path(dir.path(), 2, 2);
    let reloaded = cache::table_from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reloaded, *wreath_char_table(2, 2));
    // second run reads the file and prints the same table
    assert_eq!(first, stdout(&["char-table", "--ell", "2", "--n", "2", "--cache-dir", d]));

    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_wreathmac"))
        .args(["char-table", "--ell", "3", "--n", "1", "--format", "json"])
        .env("WREATHMAC_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(cache::cache_path(env_dir.path(), 3, 1).exists());
}

#[test]
fn cached_and_uncached_results_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout(&["decomp", "--ell", "2", "--n", "3"]);
    assert_eq!(plain, stdout(&["decomp", "--ell", "2", "--n", "3", "--cache-dir", d]));
    assert_eq!(plain, stdout(&["decomp", "--ell", "2", "--n", "3", "--cache-dir", d]));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let printed = stdout(&["kostka", "--ell", "2", "--n", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(printed.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&["kostka", "--ell", "2", "--n", "1", "--format", "json"]));
}

#[test]
fn verify_suites() {
    let text = stdout(&["verify", "b2"]);
    assert!(text.contains("PASS [b2]"));
    assert!(text.trim_end().ends_with("0 failed"));
    let out = run(&["verify", "lemma-z", "--ell-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["kostka", "--ell", "0", "--n", "2"]).status.code(), Some(1));
    assert_eq!(run(&["kostka", "--ell", "2"]).status.code(), Some(1));
    assert_eq!(run(&["kostka", "--ell", "2", "--n", "2", "--format", "pdf"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = run(&["kostka", "--ell", "2", "--n", "2", "--out", "/nonexistent-dir/k.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}
