use std::process::{Command, Output};

use serde_json::Value;

use kirillov::intpoly::IntPoly;
use kirillov::typea::kirillov_recursion;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirillov"))
        .args(args)
        .env_remove("KIRILLOV_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn poly_of(v: &Value) -> IntPoly {
    let coeffs: Vec<&str> = v.as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    IntPoly::from_decimal_strings(&coeffs).unwrap()
}

#[test]
fn typea_poly_reports_split_form() {
    let o = run(&["typea", "poly", "3,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("-q^5 - 2q^6 - 3q^7 - 3q^8 + 4q^9 + 25q^10 + 11q^11 - 23q^12 - 43q^13 + 35q^14"));
    assert!(text.contains("a = 5"));
    assert!(text.contains("b = 3"));
    assert!(text.contains("R coefficients: 1,5,15,34,58,62,35"));
}

#[test]
fn g2_census_json_counts() {
    let v = json(&["g2", "census", "5"]);
    let counts = v["counts"].as_object().unwrap();
    let expected = [
        ("7", "10000"),
        ("3,3,1", "4400"),
        ("3,2,2", "1100"),
        ("2,2,1,1,1", "124"),
        ("1,1,1,1,1,1,1", "1"),
    ];
    assert_eq!(counts.len(), expected.len());
    for (k, c) in expected {
        assert_eq!(counts[k], Value::from(c), "{k}");
    }
    assert_eq!(v["q"], Value::from(5));
    assert_eq!(v["total"], Value::from("15625"));
    assert!(v.get("elapsed_ms").is_none());
    let cases = v["cases"].as_array().unwrap();
    let sum: u64 = cases.iter().map(|c| c["count"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(sum, 15625);
}

#[test]
fn timing_is_opt_in() {
    let v = json(&["g2", "census", "5", "--timing"]);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn small_characteristic_is_a_usage_error() {
    for q in ["3", "2", "9"] {
        let o = run(&["g2", "census", q]);
        assert_eq!(o.status.code(), Some(2), "q = {q}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains("characteristic must exceed 3"), "{err}");
        assert!(err.contains("Usage:"), "{err}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["typea", "poly", "1,3"]).status.code(), Some(2));
    assert_eq!(run(&["typea", "census", "3", "6"]).status.code(), Some(2));
    assert_eq!(run(&["g2", "census", "5", "--workers", "0"]).status.code(), Some(2));
    assert_eq!(run(&["g2", "interpolate", "--primes", "5,7,7,11,13,17"]).status.code(), Some(2));
    assert_eq!(run(&["g2", "interpolate", "--primes", "5,7,11"]).status.code(), Some(2));
    assert_eq!(run(&["g2", "census", "7", "--budget", "1000"]).status.code(), Some(3));
    assert_eq!(run(&["typea", "census", "6", "5", "--budget", "1000"]).status.code(), Some(3));
    assert_eq!(run(&["poly", "split", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_does_not_depend_on_worker_count() {
    for args in [
        &["g2", "census", "7"][..],
        &["typea", "census", "4", "3"],
        &["typea", "scan", "7"],
    ] {
        for format in ["table", "json", "csv"] {
            let mut one = args.to_vec();
            one.extend(["--format", format, "--workers", "1"]);
            let mut four = args.to_vec();
            four.extend(["--format", format, "--workers", "4"]);
            let (a, b) = (run(&one), run(&four));
            assert_eq!(a.status.code(), Some(0));
            assert_eq!(a.stdout, b.stdout, "{args:?} {format}");
        }
    }
    let env = Command::new(env!("CARGO_BIN_EXE_kirillov"))
        .args(["g2", "census", "7"])
        .env("KIRILLOV_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, run(&["g2", "census", "7"]).stdout);
}

#[test]
fn json_polynomials_round_trip() {
    let v = json(&["typea", "poly", "4,3,2"]);
    let p = poly_of(&v["poly"]);
    assert_eq!(p, kirillov_recursion(&"4,3,2".parse().unwrap()));
    let r = poly_of(&v["r"]);
    let a = v["a"].as_u64().unwrap() as usize;
    let b = v["b"].as_u64().unwrap() as u32;
    let rebuilt = &(&IntPoly::monomial(1, a) * &IntPoly::q_minus_one().pow(b)) * &r;
    assert_eq!(rebuilt, p);
    let factors: Vec<IntPoly> = v["verdict"]["factors"].as_array().unwrap().iter().map(poly_of).collect();
    let product = factors.iter().fold(IntPoly::one(), |acc, f| &acc * f);
    assert_eq!(product, r);

    let profile = json(&["typea", "profile", "10"]);
    for row in profile["rows"].as_array().unwrap() {
        let lambda = row["partition"].as_str().unwrap().parse().unwrap();
        assert_eq!(poly_of(&row["poly"]), kirillov_recursion(&lambda));
    }

    let fit = json(&["g2", "interpolate", "--primes", "5,7,11,13,17,19"]);
    assert_eq!(fit["mode"], Value::from("reduced"));
    assert_eq!(poly_of(&fit["polys"]["7"]), IntPoly::from_i64s(&[0, 0, 0, 0, 1, -2, 1]));
    assert_eq!(fit["complement_agrees"], Value::from(true));
}

#[test]
fn csv_has_header_first() {
    let o = run(&["g2", "census", "5", "--format", "csv"]);
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["kind", "key", "count", "expected", "agrees"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert!(rows.iter().any(|r| &r[0] == "partition" && &r[1] == "3,3,1" && &r[2] == "4400"));
    assert!(rows.iter().all(|r| &r[4] == "true"));

    let o = run(&["typea", "census", "4", "2", "--format", "csv"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first, "partition,count,recursion,agrees");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kirillov-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census.json");
    let o = run(&["g2", "census", "5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["counts"]["7"], Value::from("10000"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verification_subcommands_pass() {
    for args in [
        &["typea", "table4"][..],
        &["typea", "scan", "8"],
        &["g2", "build"],
        &["g2", "powers"],
        &["g2", "springer"],
        &["poly", "irred", "1,2,3,2,1"],
        &["poly", "split", "0,0,1,-1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let v = json(&["poly", "irred", "1,2,3,2,1"]);
    assert_eq!(v["verdict"]["kind"], Value::from("reducible"));
    let v = json(&["poly", "split", "0,0,1,-1"]);
    assert_eq!((v["a"].as_u64(), v["b"].as_u64()), (Some(2), Some(1)));
    assert_eq!(poly_of(&v["r"]), IntPoly::constant(-1));
}
