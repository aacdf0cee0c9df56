use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagzeta"))
        .args(args)
        .env_remove("DIAGZETA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const SEXTIC: [&str; 15] =
    ["report", "--p", "5", "--l", "3", "--e", "6", "--s", "1", "--a", "1", "--b", "1", "--c", "1"];

#[test]
fn report_fermat_sextic_json() {
    let o = run(&SEXTIC);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["case"], "2l-case-1");
    assert_eq!(doc["class_number"], "3656158440062976");
    assert_eq!(doc["p_coeffs"][20], "95367431640625");
    assert_eq!(doc["extremality"]["status"], "Maximal");
}

#[test]
fn report_fermat_cubic_text() {
    let o = run(&["report", "--p", "2", "--l", "3", "--e", "3", "--s", "1", "--a", "1", "--b", "1", "--c", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("l-case-1"), "{text}");
    assert!(text.contains("h        9\n"), "{text}");
}

#[test]
fn report_with_bruteforce_agrees() {
    let mut args = SEXTIC.to_vec();
    args.extend(["--n-max", "2", "--bruteforce"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
    for c in doc["counts"].as_array().unwrap() {
        assert_eq!(c["formula"], c["bruteforce"]);
    }
}

#[test]
fn report_bruteforce_respects_budget() {
    let mut args = SEXTIC.to_vec();
    args.extend(["--n-max", "2", "--bruteforce", "--budget", "100"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
    assert!(doc["counts"][0]["bruteforce"].is_null());
    assert!(doc["counts"][0]["bruteforce_error"].as_str().unwrap().contains("budget"));
}

#[test]
fn report_csv_matches_json() {
    let mut args = SEXTIC.to_vec();
    args[10] = "g^4";
    args[12] = "g^1";
    let doc: serde_json::Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
    args.extend(["--format", "csv"]);
    let csv_out = stdout(&run(&args));
    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let row = reader.records().next().unwrap().unwrap();
    let field = |name: &str| row.get(headers.iter().position(|h| h == name).unwrap()).unwrap().to_string();
    assert_eq!(field("class_number"), doc["class_number"].as_str().unwrap());
    assert_eq!(field("case"), doc["case"].as_str().unwrap());
    let coeffs: Vec<&str> = doc["p_coeffs"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(field("p_coeffs"), coeffs.join(";"));
}

#[test]
fn validation_errors_exit_2() {
    let o = run(&["report", "--p", "2", "--l", "3", "--e", "6", "--s", "1", "--a", "1", "--b", "1", "--c", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("PEvenWith2l"), "{}", stderr(&o));

    let o = run(&["report", "--p", "5", "--l", "3", "--e", "6", "--s", "1", "--a", "0", "--b", "1", "--c", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ZeroCoefficient"));

    let o = run(&["report", "--p", "7", "--l", "3", "--e", "3", "--s", "1", "--a", "1", "--b", "1", "--c", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("OrderNotEven"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["sweep"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--p", "5", "--l", "3", "--e", "6", "--s", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

fn sweep_jsonl(p: &str, l: &str, e: &str) -> Vec<serde_json::Value> {
    let o = run(&["sweep", "--p", p, "--l", l, "--e", e, "--s", "1", "--all-ij", "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    stdout(&o).lines().map(|line| serde_json::from_str(line).unwrap()).collect()
}

#[test]
fn sweep_sextic_has_one_extremal() {
    let docs = sweep_jsonl("5", "3", "6");
    assert_eq!(docs.len(), 36);
    let extremal = docs.iter().filter(|d| d["extremality"]["status"] != "Neither").count();
    assert_eq!(extremal, 1);
    let order: Vec<(String, String)> = docs
        .iter()
        .map(|d| (d["index_pair"]["i"].as_str().unwrap().into(), d["index_pair"]["j"].as_str().unwrap().into()))
        .collect();
    let expected: Vec<(String, String)> =
        (0..6).flat_map(|i| (0..6).map(move |j| (i.to_string(), j.to_string()))).collect();
    assert_eq!(order, expected);
}

#[test]
fn sweep_cubic_has_three_cases() {
    let docs = sweep_jsonl("2", "3", "3");
    assert_eq!(docs.len(), 9);
    let mut cases: Vec<String> = docs
        .iter()
        .map(|d| d["case"].as_str().unwrap().split('(').next().unwrap().to_string())
        .collect();
    cases.sort();
    cases.dedup();
    assert_eq!(cases, ["l-case-1", "l-case-2", "l-case-3"]);
}

#[test]
fn sweep_writes_csv_file() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("sweep_sextic.csv");
    let out = path.to_str().unwrap();
    let o = run(&["sweep", "--p", "5", "--l", "3", "--e", "6", "--s", "1", "--all-ij", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(reader.records().count(), 36);
}

#[test]
fn verify_suites_exit_codes() {
    let o = run(&["verify", "--suite", "lemma1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--suite", "weil"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() >= 12);

    let o = run(&["verify", "--suite", "all", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("BudgetExceeded"));
}

#[test]
fn budget_env_var_is_the_default() {
    let o = Command::new(env!("CARGO_BIN_EXE_diagzeta"))
        .args(["verify", "--suite", "lemma2"])
        .env("DIAGZETA_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("BudgetExceeded"));
}
