use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbit-atlas"))
        .args(args)
        .env_remove("ORBIT_ATLAS_SEED")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).expect("golden file present");
    assert_eq!(actual, expected, "golden {name} differs");
}

const EX35: [&str; 6] = ["--n", "9", "--lambda", "5,4,2,1", "--mu", "4,4,4,1,1"];
const EX4: [&str; 6] = ["--n", "7", "--lambda", "4,4,2", "--mu", "3,3,1,1"];

fn with<'a>(head: &[&'a str], tail: &[&'a str]) -> Vec<&'a str> {
    head.iter().chain(tail).copied().collect()
}

#[test]
fn involution_listing() {
    let table = ok(&["involutions", "--n", "4"]);
    assert_eq!(table.lines().count(), 1 + 10);
    let one = ok(&["involutions", "--n", "1"]);
    let rows: Vec<&str> = one.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("Id") && rows[0].ends_with(" 0"));
    assert_eq!(ok(&["involutions", "--n", "6"]).lines().count(), 1 + 76);

    let json: serde_json::Value =
        serde_json::from_str(&ok(&["involutions", "--n", "4", "--format", "json"])).unwrap();
    let rows = json["involutions"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows.iter().filter(|r| r["dim"] == 4).count(), 2);
}

#[test]
fn capacity_and_bad_input() {
    assert_eq!(code(&["involutions", "--n", "11"]), 2);
    assert_eq!(code(&["involutions", "--n", "0"]), 2);
    assert_eq!(code(&["involutions"]), 2);
    assert_eq!(code(&["verify", "--check", "main-theorem", "--max-n", "7"]), 2);
    assert_eq!(code(&["verify", "--check", "nonsense"]), 2);
    assert_eq!(code(&["compare-orders", "--max-n", "7"]), 2);
    assert_eq!(code(&["--unsafe-large", "compare-orders", "--max-n", "1"]), 0);
}

#[test]
fn poset_exports() {
    let dot = ok(&["poset", "--setting", "nilpotent", "--n", "4"]);
    assert_eq!(dot.matches(" -> ").count(), 14);
    assert_eq!(dot.matches("[label=").count(), 10);

    let json = ok(&[
        "poset", "--setting", "grassmannian", "--n", "4", "--lambda", "2,2", "--mu", "2,2", "--out", "json",
    ]);
    let doc = orbit_atlas::export::PosetDocument::parse(&json).unwrap();
    assert_eq!(doc.elements.len(), 7);
    assert_eq!(doc.covers.len(), 9);
    assert_eq!(doc.lambda, Some(vec![2, 2]));

    let single = ok(&[
        "poset", "--setting", "grassmannian", "--n", "4", "--lambda", "2,1", "--mu", "1,0", "--out", "json",
    ]);
    let doc = orbit_atlas::export::PosetDocument::parse(&single).unwrap();
    assert_eq!(doc.elements.len(), 1);
    assert!(doc.elements[0].pairs.is_empty());

    // part exceeds n - k, then a non-monotone partition
    let bad = ["poset", "--setting", "grassmannian", "--n", "4", "--lambda", "3,1", "--mu", "1,0"];
    assert_eq!(code(&bad), 2);
    let bad = ["poset", "--setting", "grassmannian", "--n", "4", "--lambda", "1,2", "--mu", "1,0"];
    assert_eq!(code(&bad), 2);
    assert_eq!(code(&["poset", "--setting", "grassmannian", "--n", "4"]), 2);
}

#[test]
fn verification_suites() {
    let main = ok(&["verify", "--check", "main-theorem", "--max-n", "5"]);
    assert!(main.ends_with("main-theorem: PASS\n"));
    let rank = ok(&["verify", "--check", "rank-oracle", "--max-n", "4", "--trials", "100"]);
    assert!(rank.ends_with("rank-oracle: PASS\n"));
    let covers = ok(&["verify", "--check", "covers", "--max-n", "4"]);
    assert!(covers.lines().any(|l| l
        == "n=4 lambda=(2,1) mu=(2,1): ((14), (12)) is a cover in I_n(lambda,mu) but not in I_n; intermediate (13)"));
    assert!(ok(&["verify", "--check", "slice", "--max-n", "3", "--trials", "20"]).ends_with("slice: PASS\n"));
    assert!(ok(&["verify", "--check", "order-axioms", "--max-n", "4"]).ends_with("order-axioms: PASS\n"));
}

#[test]
fn seeds_make_runs_reproducible() {
    let args = ["verify", "--check", "rank-oracle", "--max-n", "3", "--trials", "5", "--seed", "17"];
    assert_eq!(ok(&args), ok(&args));
    let via_env = Command::new(env!("CARGO_BIN_EXE_orbit-atlas"))
        .args(["slice", "--n", "4", "--lambda", "2", "--mu", "1,1", "--params", "random", "--emit", "matrix"])
        .env("ORBIT_ATLAS_SEED", "5")
        .output()
        .unwrap();
    let explicit = ok(&["slice", "--n", "4", "--lambda", "2", "--mu", "1,1", "--params", "random", "--seed", "5", "--emit", "matrix"]);
    assert_eq!(String::from_utf8(via_env.stdout).unwrap(), explicit);
}

#[test]
fn slice_outputs() {
    let matrix = ok(&with(&["slice"], &with(&EX4, &["--emit", "matrix"])));
    let slots: Vec<&str> = matrix.split_whitespace().filter(|t| t.starts_with('t')).collect();
    assert_eq!(slots, ["t13", "t16", "t17", "t46", "t47", "t56", "t57"]);
    assert_eq!(matrix.lines().count(), 7);

    let sub = ok(&with(&["slice"], &with(&EX35, &["--w", "1-7,5-9", "--emit", "subspaces"])));
    assert!(sub.contains("U = <e2, e4, e1+e7, e5+e9>\n"));
    assert!(sub.contains("W = <e2, e3, e7, e8, e9>\n"));

    let id = ok(&with(&["slice"], &with(&EX4, &["--params", "all-zero", "--emit", "identify"])));
    assert_eq!(id.lines().next(), Some("Id"));
    let top = ok(&with(&["slice"], &with(&EX4, &["--params", "generic", "--emit", "identify"])));
    assert!(top.ends_with("codim 0\n"));
    let w = ok(&with(&["slice"], &with(&EX35, &["--w", "1-7,5-9", "--emit", "identify"])));
    assert_eq!(w, "(17)(59)\ncodim 4\n");

    let point = ok(&with(&["slice"], &with(&EX4, &["--params", "1-3=2,5-7=-1/2", "--emit", "matrix"])));
    assert_eq!(point.lines().next(), Some("0/1 0/1 2/1 0/1 0/1 0/1 0/1"));
    assert_eq!(point.lines().nth(4), Some("0/1 0/1 0/1 0/1 0/1 0/1 -1/2"));
}

#[test]
fn slice_rejects_inconsistent_input() {
    // 2 is White and 3 Grey for these partitions
    assert_eq!(code(&with(&["slice"], &with(&EX35, &["--w", "2-3", "--emit", "subspaces"]))), 2);
    assert_eq!(code(&with(&["slice"], &with(&EX4, &["--params", "2-3=1", "--emit", "matrix"]))), 2);
    assert_eq!(code(&with(&["slice"], &with(&EX4, &["--params", "1-3=x", "--emit", "matrix"]))), 2);
    assert_eq!(code(&with(&["slice"], &with(&EX35, &["--w", "7-1", "--emit", "matrix"]))), 2);
}

#[test]
fn rendering() {
    let art = ok(&["render", "--w", "1-7,2-3,5-8", "--n", "8"]);
    golden("arcs_17_23_58.txt", &art);
    let svg = ok(&["render", "--w", "1-7,5-9", "--format", "svg"].iter().copied().chain(EX35).collect::<Vec<_>>());
    golden("colored.svg", &svg);
    let base = ok(&with(&["render", "--w", "1-7,5-9"], &EX35));
    assert!(base.contains("B---W---G---G---B---B---W---G---W"));
    assert_eq!(ok(&["render", "--n", "2"]), "|   |\no---o\n1   2\n");
    assert_eq!(code(&with(&["render", "--w", "2-3"], &EX35)), 2);
}

#[test]
fn order_comparison() {
    let two = ok(&["compare-orders", "--max-n", "2"]);
    assert_eq!(two, "n=1: coincide\nn=2: coincide\n");
    let four = ok(&["compare-orders", "--max-n", "4"]);
    assert_eq!(four, ok(&["compare-orders", "--max-n", "4"]));
    assert_eq!(four.lines().filter(|l| l.starts_with("n=")).count(), 4);
}
