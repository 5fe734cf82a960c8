use std::io::Write;
use std::process::{Command, Output, Stdio};

fn covers(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_covers"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn mycielski_prints_f() {
    let out = covers(&["mycielski", "12"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "f(12) = 4");
}

#[test]
fn divides_reports_the_failing_prime() {
    let out = covers(&["divides", "4", "2", "4"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "NO (p=2: 3/2 < 2)");
    let out = covers(&["divides", "6", "2", "3", "3"], None);
    assert_eq!(stdout(&out).trim(), "YES");
    let out = covers(&["--format", "json", "divides", "4", "2", "4"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["primes"][0]["sum"], "3/2");
    assert_eq!(v["divides"], false);
}

#[test]
fn minimal_k_prints_certificate() {
    let out = covers(&["minimal-k", "12"], None);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("f(12) = 4"));
    assert!(stdout(&out).contains("{2,2,3,3}"));
}

#[test]
fn extremal_construction_round_trips() {
    let built = covers(&["construct", "extremal-z", "4", "2"], None);
    assert_eq!(code(&built), 0);
    let out = covers(&["verify-z", "-", "--m", "2"], Some(&stdout(&built)));
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("2-cover: yes (exact: yes"));
    assert!(text.contains("tight: k = m + f(4)"));
    assert!(text.contains("verdict: pass"));
}

#[test]
fn every_construction_passes_its_verifier() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["extremal-z", "3", "1"], "verify-z"),
        (vec!["extremal-z", "7", "3"], "verify-z"),
        (vec!["cpcp", "2"], "verify-group"),
        (vec!["cpcp", "3"], "verify-group"),
        (vec!["cpcp", "5"], "verify-group"),
        (vec!["partition", "2", "4"], "verify-group"),
        (vec!["partition", "6", "--K", "2"], "verify-group"),
        (vec!["partition", "2", "2", "--K", "1,1"], "characters"),
        (vec!["cpcp", "3"], "characters"),
    ];
    for (args, verifier) in cases {
        let mut full = vec!["construct"];
        full.extend(&args);
        let built = covers(&full, None);
        assert_eq!(code(&built), 0, "{args:?}");
        let out = covers(&[verifier, "-"], Some(&stdout(&built)));
        assert_eq!(code(&out), 0, "{args:?} via {verifier}: {}", stdout(&out));
        assert!(stdout(&out).contains("verdict: pass"));
    }
}

#[test]
fn subgroup_restriction_flag() {
    let built = covers(&["construct", "cpcp", "2"], None);
    let out = covers(&["verify-group", "-", "--K", "1,0"], Some(&stdout(&built)));
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("subgroup restriction bounds: pass"));
    assert!(text.contains("not applicable"));
}

#[test]
fn json_reports_are_byte_identical() {
    let sys = r#"{"type":"Z","m":1,"classes":[[0,2],[0,3],[1,4],[5,6],[7,12]]}"#;
    let a = covers(&["--format", "json", "verify-z", "-"], Some(sys));
    let b = covers(&["--format", "json", "verify-z", "-"], Some(sys));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["period"], 12);

    let args = ["--format", "json", "search", "exhaustive", "--orders", "2,2", "--max-k", "3"];
    let a = covers(&args, None);
    let b = covers(&args, None);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["counterexamples"], 0);
    assert!(v["tight_witnesses"].is_array());
}

#[test]
fn search_verbs() {
    let out = covers(&["search", "min-cover", "2", "2", "2"], None);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("k_min = 3, f(|G|) = 3"));
    let out = covers(&["search", "min-divisibility", "12"], None);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("brute-force minimum 4, f(n) = 4"));
    let out = covers(&["search", "sweep", "--max-order", "4", "--max-k", "3", "--max-m", "2"], None);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 counterexamples\nverdict: pass"));
}

#[test]
fn input_errors_exit_two() {
    let out = covers(&["verify-z", "-"], Some("{not json"));
    assert_eq!(code(&out), 2);
    // 0(2) alone is not a cover.
    let out = covers(&["verify-z", "-"], Some(r#"{"type":"Z","classes":[[0,2]]}"#));
    assert_eq!(code(&out), 2);
    let out = covers(&["verify-z", "-", "--a", "1"], Some(r#"{"type":"Z","classes":[[0,1],[0,2]]}"#));
    assert_eq!(code(&out), 0);
    let out = covers(&["verify-z", "-", "--a", "0"], Some(r#"{"type":"Z","classes":[[0,1],[0,2]]}"#));
    assert_eq!(code(&out), 2);
    let out = covers(&["minimal-k", "1"], None);
    assert_eq!(code(&out), 2);
    let out = covers(&["divides", "4", "1"], None);
    assert_eq!(code(&out), 2);
    let out = covers(&["frobnicate"], None);
    assert_eq!(code(&out), 2);
}

#[test]
fn capacity_guards_exit_three() {
    let out = covers(&["mycielski", "10000000000000"], None);
    assert_eq!(code(&out), 3);
    let out = covers(&["search", "min-cover", "128"], None);
    assert_eq!(code(&out), 3);
    let out = covers(&["search", "min-divisibility", "31"], None);
    assert_eq!(code(&out), 3);
}
