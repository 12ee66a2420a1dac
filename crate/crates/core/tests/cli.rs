use std::process::{Command, Output};

use meshlab::dist::cache::{self, CacheRecord};
use meshlab::dist::recursion::recursion_table;
use meshlab::dist::DistributionRecord;
use meshlab::render::parse_coeff_list;
use meshlab::report::Report;
use meshlab::{Family, XPolynomial};

fn meshlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meshlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_rows_in_every_format() {
    let plain = meshlab(&["table", "--family", "A", "--max-index", "2", "--format", "plain"]);
    assert!(plain.status.success());
    assert_eq!(stdout(&plain), "A_0(x) = 1\nA_2(x) = x\nA_4(x) = x^2(3+2x)\n");

    let latex = meshlab(&["table", "--family", "B", "--max-index", "3", "--format", "latex"]);
    assert!(stdout(&latex).contains("$B_{5}(x)$ & $8 x^{2} \\left(1+x\\right)$"));

    let csv = meshlab(&["table", "--family", "C", "--max-index", "6", "--format", "csv"]);
    let rec = recursion_table(6);
    let lines: Vec<String> = stdout(&csv).lines().map(String::from).collect();
    assert_eq!(lines[0], "index,length,coeffs");
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        let index: usize = fields[0].parse().unwrap();
        let poly: XPolynomial = parse_coeff_list(fields[2]).unwrap();
        assert_eq!(&poly, rec.get(Family::C, index).unwrap());
    }

    let json = meshlab(&["table", "--family", "D", "--max-index", "4", "--format", "json"]);
    let records: Vec<CacheRecord> = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(records.len(), 4);
    for r in &records {
        let back = DistributionRecord::try_from(r).unwrap();
        assert_eq!(&back.polynomial, rec.get(Family::D, r.index).unwrap());
    }
}

#[test]
fn table_writes_and_merges_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("polys.json");
    let p = path.to_str().unwrap();
    assert!(meshlab(&["table", "--family", "A", "--max-index", "3", "--cache", p]).status.success());
    assert!(meshlab(&["table", "--family", "B", "--max-index", "3", "--cache", p]).status.success());
    let records = cache::load(&path).unwrap();
    assert_eq!(records.len(), 4 + 3);
    assert_eq!(records[0].family, Family::A);

    let bad = dir.path().join("missing/dir/polys.json");
    let out = meshlab(&["table", "--family", "A", "--max-index", "1", "--cache", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "A_0(x) = 1\nA_2(x) = x\n", "table still printed");
}

#[test]
fn verify_suites_and_reports() {
    let tables = meshlab(&["verify", "--suite", "tables"]);
    assert_eq!(tables.status.code(), Some(0));
    assert!(stdout(&tables).ends_with("suite tables: 26 pass, 0 FAIL, 0 discrepancy\n"));

    assert_eq!(meshlab(&["verify", "--suite", "symmetry", "--max-length", "8"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = meshlab(&["verify", "--suite", "closed-forms", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "discrepancies are informational");
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.rows.iter().all(|r| r.check.starts_with("closed-form")));

    let strict = meshlab(&["verify", "--suite", "closed-forms", "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn series_and_brute() {
    let a = meshlab(&["series", "--gf", "A", "--order", "4"]);
    assert!(stdout(&a).ends_with("c_0 = 1\nc_1 = 0\nc_2 = x\nc_3 = 0\nc_4 = x^2(3+2x)\n"));
    assert_eq!(meshlab(&["series", "--gf", "cot", "--order", "4"]).status.code(), Some(2));

    let b = meshlab(&["brute", "--length", "2", "--class", "ud", "--pattern", "1,0,e,0"]);
    assert_eq!(stdout(&b), "x\nover 1 permutations\n");
    let big = meshlab(&["brute", "--length", "15", "--class", "ud", "--pattern", "1,0,0,0"]);
    assert_eq!(big.status.code(), Some(3));
}

#[test]
fn guard_follows_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_meshlab"))
        .args(["brute", "--length", "6", "--class", "du", "--pattern", "1,0,0,0"])
        .env("MESHLAB_MAX_BRUTE", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let forced = Command::new(env!("CARGO_BIN_EXE_meshlab"))
        .args(["brute", "--length", "6", "--class", "du", "--pattern", "1,0,0,0", "--force"])
        .env("MESHLAB_MAX_BRUTE", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&forced), "x^2(8+28x+25x^2)\nover 61 permutations\n");
}

#[test]
fn unimodal_reports_modes() {
    let out = meshlab(&["unimodal", "--max-index", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[pass] unimodal A n=4: mode x^6"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "oracle", "--max-length", "9", "--format", "json"];
    let one = meshlab(&[&args[..], &["--workers", "1"]].concat());
    let four = meshlab(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, meshlab(&args).stdout);
}
