use std::process::{Command, Output};

fn command() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_rothe-lab"));
    c.env_remove("ROTHE_LAB_CAP");
    c
}

/// Runs the binary with whitespace-separated arguments.
fn run(args: &str) -> Output {
    command()
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn enumerate_examples() {
    let o = run("enumerate --p 3 --k 1 --m 1");
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let words: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(words, ["ab", "ba", "count 2 = C(2,1) = 2"]);

    let out = stdout(&run("enumerate --p 3 --k 1 --m 1 --prefix-weight 2"));
    assert!(out.starts_with("ba\t"));
    assert!(out.lines().last().unwrap().starts_with("count 1"));

    let out = stdout(&run("enumerate --p 0 --k 0 --m 0"));
    assert!(out.starts_with("ε\t"));
    assert!(out.contains("count 1"));
}

#[test]
fn enumerate_json_lines() {
    let lines = json_lines(&run("--format json enumerate --p 5 --k 2 --m 1"));
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["word"], "abb");
    assert_eq!(lines[0]["weight"], 5);
    assert_eq!(lines[0]["b_count"], 2);
    assert_eq!(lines[2]["inversions"], 2);
    assert_eq!(lines[3]["count"], 3);
}

#[test]
fn bijection_examples() {
    let o = run("bijection theorem1 --p 1 --q 1 --m 1 --n 1 --word ab");
    assert_eq!(stdout(&o).trim(), "ab → ba");

    let o = run("bijection theorem1 --p 1 --q 1 --m 1 --n 1 --word ba --inverse");
    assert_eq!(stdout(&o).trim(), "ba → ab");

    let o = run("bijection theorem1 --p 2 --q 1 --m 1 --n 2 --all");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "bab → bab\nbba → abb\nBIJECTION OK (2 pairs)\n");

    let o = run("bijection factorize --p 1 --q 1 --m 1 --n 1 --word ba");
    assert!(stdout(&o).contains("BranchB j=1 k=1 u'=ε v=a"));
}

#[test]
fn bijection_tables_as_json() {
    let lines = json_lines(&run(
        "--format json bijection theorem1 --p 2 --q 1 --m 1 --n 2 --all",
    ));
    assert_eq!(
        lines[0],
        serde_json::json!({"input": "bab", "output": "bab", "p": 2, "q": 1, "m": 1, "n": 2})
    );
}

#[test]
fn bijection_all_modes_succeed() {
    for kind in ["theorem1", "factorize"] {
        for inverse in ["", "--inverse"] {
            let o = run(&format!(
                "bijection {kind} --p 4 --q 3 --m 2 --n 2 --all {inverse}"
            ));
            assert_eq!(code(&o), 0, "{kind} {inverse}");
            let out = stdout(&o);
            assert!(out.lines().last().unwrap().starts_with("BIJECTION OK"));
        }
    }
}

#[test]
fn bijection_bad_parameters_exit_2() {
    for args in [
        // "ba" has no prefix of weight 1
        "bijection theorem1 --p 1 --q 1 --m 1 --n 1 --word ba",
        // word disagrees with --n
        "bijection theorem1 --p 1 --q 1 --m 1 --n 2 --word ab",
        "bijection theorem1 --p 1 --q 1 --m 1 --n 1",
        "bijection factorize --p 0 --q 1 --m 1 --n 1 --all",
        "bijection factorize --p 1 --q 1 --m 1 --n 1 --word ba --inverse",
    ] {
        assert_eq!(code(&run(args)), 2, "{args}");
    }
}

#[test]
fn verify_examples() {
    let o = run("verify --identity rothe2 --x 2 --y 2 --z 1 --n 2");
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("PASS rothe2"));
    assert!(out.contains("lhs=6 rhs=6"));
    assert!(out.ends_with("1 checked, 0 failed\n"));

    let o = run("verify --identity qchu --x 2..2 --y 1..1 --m 1 --n 1");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lhs=1+q+q^2"));

    let o = run("verify --identity cardinality --p 0..10 --k 0..4 --m 0..2");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("165 checked, 0 failed\n"));
}

#[test]
fn verify_rational_and_negative_values() {
    let o = run("verify --identity gould --x 1/2 --y -3 --z -2..2 --n 0..3");
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    // eps defaults to 0..n: 5 z values, Σ_{n=0}^{3} (n+1) = 10 eps values each
    assert!(stdout(&o).ends_with("50 checked, 0 failed\n"));
}

#[test]
fn verify_every_identity_id() {
    for args in [
        "--identity rothe1 --x 0..2 --y 1 --z 1/3 --n 0..3",
        "--identity pqkm --p 0..4 --q 0..3 --m 0..2 --n 0..3",
        "--identity kmx --p 0..6 --q 0..3 --m 0..2 --n 0..2",
        "--identity kmpink --p 0..6 --q 0..3 --m 1..2 --n 0..2",
        "--identity invw --p 0..10 --k 0..3 --m 0..2",
        "--identity qchu-m1 --x 0..4 --y 1..3 --n 0..3",
        "--identity qword --p 0..4 --q 1..3 --m 0..1 --n 0..2",
    ] {
        let o = run(&format!("verify {args}"));
        assert_eq!(
            code(&o),
            0,
            "{args}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn verify_config_errors_exit_2() {
    for args in [
        "verify --identity rothe9 --n 1",
        "verify --identity rothe2 --x 1 --y 1 --z 1",
        "verify --identity pqkm --p 1/2 --q 1 --m 1 --n 1",
        "verify --identity invw --p 3..1 --k 1 --m 1",
        "verify --identity invw --p 40 --k 1 --m 0",
    ] {
        assert_eq!(code(&run(args)), 2, "{args}");
    }
}

#[test]
fn work_cap_flag_and_env() {
    let args = "verify --identity cardinality --p 0..10 --k 0..4 --m 0..2";

    let o = run(&format!("--cap 10 {args}"));
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty(), "no work before the cap check");

    let with_env = |extra: &str| {
        command()
            .args(format!("{extra} {args}").split_whitespace())
            .env("ROTHE_LAB_CAP", "10")
            .output()
            .unwrap()
    };
    assert_eq!(code(&with_env("")), 2);
    assert_eq!(
        code(&with_env("--cap 100000")),
        0,
        "flag overrides the environment"
    );
}

#[test]
fn grid_prove_examples() {
    let o = run("grid-prove --identity rothe1 --n 3");
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).trim(),
        "CERTIFIED as polynomial identity for n=3 (64 grid points)"
    );
    assert!(stdout(&run("grid-prove --identity gould --n 2")).contains("(81 grid points)"));
    assert!(stdout(&run("grid-prove --identity rothe2 --n 0")).contains("(1 grid points)"));

    let o = run("grid-prove --identity rothe2 --n 2 --x0 1/2 --z0 -3");
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run("grid-prove --identity qchu --n 2")), 2);
}

#[test]
fn json_and_text_verdicts_agree_and_output_is_deterministic() {
    let args = "verify --identity kmpink --p 0..5 --q 0..3 --m 0..2 --n 0..3";
    let text = run(args);
    let json = run(&format!("--format json {args}"));
    assert_eq!(code(&text), code(&json));

    let text_verdicts: Vec<bool> = stdout(&text)
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .map(|l| l.starts_with("PASS"))
        .collect();
    let lines = json_lines(&json);
    let json_verdicts: Vec<bool> = lines
        .iter()
        .filter_map(|v| v.get("status").map(|s| s == "pass"))
        .collect();
    assert!(!text_verdicts.is_empty());
    assert_eq!(text_verdicts, json_verdicts);
    assert!(lines.last().unwrap().get("summary").is_some());

    assert_eq!(
        stdout(&run(&format!("--format json {args}"))),
        stdout(&json)
    );
    assert_eq!(stdout(&run(args)), stdout(&text));
}
