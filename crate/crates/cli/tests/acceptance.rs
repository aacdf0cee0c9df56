//! Acceptance criteria, one PASS/FAIL line each. Exact comparisons throughout.

use std::path::Path;
use std::process::{Command, ExitCode};

use diagzeta::count::DEFAULT_BUDGET;
use diagzeta::verify::{self, Check, Suite};

struct Outcome {
    number: u32,
    title: &'static str,
    checks: Vec<Check>,
}

impl Outcome {
    fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

fn suite(number: u32, title: &'static str, s: Suite) -> Outcome {
    Outcome { number, title, checks: verify::run(s, DEFAULT_BUDGET) }
}

/// `C(20, k) 5^k` from Pascal's triangle.
fn sextic_oracle() -> Vec<String> {
    let mut row = vec![1u128];
    for _ in 0..20 {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row.iter().enumerate().map(|(k, c)| (c * 5u128.pow(k as u32)).to_string()).collect()
}

fn report_json() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_diagzeta"))
        .args(["report", "--p", "5", "--l", "3", "--e", "6", "--s", "1", "--a", "1", "--b", "1", "--c", "1"])
        .args(["--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn golden() -> Outcome {
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check { suite: Suite::Golden, name: name.into(), passed, detail });
    };
    match (report_json(), report_json()) {
        (Ok(a), Ok(b)) => {
            check("two runs byte-identical", a == b, format!("{} bytes", a.len()));
            let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/fermat_sextic_f25.json");
            match std::fs::read(&path) {
                Ok(g) => check("matches golden file", g == a, path.display().to_string()),
                Err(e) => check("matches golden file", false, e.to_string()),
            }
            let doc: serde_json::Value = serde_json::from_slice(&a).expect("report is JSON");
            let coeffs: Vec<String> = doc["p_coeffs"]
                .as_array()
                .map(|v| v.iter().filter_map(|x| x.as_str().map(String::from)).collect())
                .unwrap_or_default();
            let oracle = sextic_oracle();
            check("P coefficients are C(20, k) 5^k", coeffs == oracle, format!("{} coefficients", coeffs.len()));
        }
        (Err(e), _) | (_, Err(e)) => check("report runs", false, e),
    }
    Outcome { number: 10, title: "golden-file determinism", checks }
}

fn main() -> ExitCode {
    let outcomes = [
        suite(1, "point counts e = l: formula vs enumeration", Suite::Lemma1),
        suite(2, "point counts e = 2l: formula vs enumeration", Suite::Lemma2),
        suite(3, "exp of count series equals P(t)/((1-t)(1-qt))", Suite::Series),
        suite(4, "Weil properties of P(t)", Suite::Weil),
        suite(5, "class numbers: P(1) vs closed forms", Suite::Classnum),
        suite(6, "power sums of reciprocal roots vs counts", Suite::Powersum),
        suite(7, "extremality census", Suite::Extremality),
        suite(8, "Hermitian recognition", Suite::Hermitian),
        suite(9, "classifier totality and unit invariance", Suite::Classifier),
        golden(),
    ];
    for o in &outcomes {
        let mark = if o.passed() { "PASS" } else { "FAIL" };
        println!("{mark} criterion {:>2}: {} ({} checks)", o.number, o.title, o.checks.len());
        for c in o.checks.iter().filter(|c| !c.passed) {
            println!("       {c}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
