use std::process::{Command, Output};

use mzsv_cli::report::Report;

fn mzsv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzsv")).args(args).env_remove("MZSV_DEFAULT_PREC").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn eval_prints_values() {
    let o = mzsv(&["eval", "mzsv", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2.40411380631918857079947632302");
    let o = mzsv(&["eval", "finite-star", "1,1", "--m", "2"]);
    assert!(stdout(&o).starts_with("2.36111111111"));
    let o = mzsv(&["eval", "pfq", "--upper", "1,1", "--lower", "2", "--z", "-1", "--prec", "20"]);
    assert_eq!(stdout(&o), "0.69314718055994530942");
}

fn leading_digits(text: &str, n: usize) -> String {
    text.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').take(n).collect()
}

#[test]
fn doubling_the_precision_keeps_the_leading_digits() {
    let p = 20;
    for args in [["mzsv", "2,2,2"], ["alt-mzsv", "1,2"], ["mzv", "1,1,3"], ["zeta", "2.5"], ["gamma", "0.3"]] {
        let short = stdout(&mzsv(&["eval", args[0], args[1], "--prec", &p.to_string()]));
        let long = stdout(&mzsv(&["eval", args[0], args[1], "--prec", &(2 * p).to_string()]));
        assert_eq!(leading_digits(&short, p - 2), leading_digits(&long, p - 2), "{args:?}");
        assert_eq!(leading_digits(&short, p - 2).len(), p - 2);
    }
}

#[test]
fn precision_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mzsv")).args(["eval", "zeta", "3"]).env("MZSV_DEFAULT_PREC", "12").output().unwrap();
    assert_eq!(stdout(&o), "1.20205690316");
    let o = Command::new(env!("CARGO_BIN_EXE_mzsv")).args(["eval", "zeta", "3"]).env("MZSV_DEFAULT_PREC", "many").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(mzsv(&["eval", "mzsv", "2,1"]).status.code(), Some(2));
    assert_eq!(mzsv(&["eval", "mzsv", "1,x"]).status.code(), Some(2));
    assert_eq!(mzsv(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(mzsv(&["verify", "eq1", "--s", "99"]).status.code(), Some(2));
    assert_eq!(mzsv(&["eval", "zeta", "3", "--prec", "5"]).status.code(), Some(2));
    assert_eq!(mzsv(&["verify", "eq1", "--s", "1..2"]).status.code(), Some(0));
}

#[test]
fn list_shows_every_identity() {
    let o = mzsv(&["list"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 26);
    for needle in ["two_one_eq3", "Addendum", "Theorem A (i)", "remark1_even", "s:int[1..12]"] {
        assert!(text.contains(needle), "{needle}");
    }
}

#[test]
fn json_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = mzsv(&["verify", "eq4_*", "--s", "1", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("4 total, 4 passed, 0 failed"));
    let report = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.context.digits, 30);
    assert_eq!(report.summary.total, 4);
    assert_eq!(report.recheck(), report.summary);
    let r = &report.results[0];
    assert_eq!(r.id, "eq4_expansion_r0");
    assert_eq!(r.params["s"], "1");
    assert!(r.lhs.as_deref().unwrap().starts_with("1."));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let o = mzsv(&["bench", "--suite", "truncation", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut rows = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rows.headers().unwrap().iter().collect::<Vec<_>>(), ["workload", "strategy", "terms", "elapsed_ms", "abs_err"]);
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    let terms = |strategy: &str| -> u64 {
        records.iter().find(|r| r[0].contains("2,2,2") && &r[1] == strategy).map(|r| r[2].parse().unwrap()).unwrap()
    };
    assert!(terms("tail_corrected") < terms("direct"));
}
