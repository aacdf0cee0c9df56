//! Verification suites: each check compares two independent routes exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::count::{count_bruteforce, count_formula};
use crate::curve::{classify_2l, classify_l, matching_cases_2l, CaseLabel, CurveParams, IndexPair, Regime};
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::maximality::{extremality_for, fermat_prime_note, is_hermitian, max_genus_bound, Extremality};
use crate::classnum::class_number_for_case;
use crate::report::build_report;
use crate::zeta::{build_factored_p, check_weil, power_sum_counts, series_mismatch, ZetaFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma1,
    Lemma2,
    Series,
    Weil,
    Classnum,
    Powersum,
    Extremality,
    Hermitian,
    Classifier,
    Golden,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Series,
        Suite::Weil,
        Suite::Classnum,
        Suite::Powersum,
        Suite::Extremality,
        Suite::Hermitian,
        Suite::Classifier,
        Suite::Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Series => "series",
            Suite::Weil => "weil",
            Suite::Classnum => "classnum",
            Suite::Powersum => "powersum",
            Suite::Extremality => "extremality",
            Suite::Hermitian => "hermitian",
            Suite::Classifier => "classifier",
            Suite::Golden => "golden",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string(), "unknown suite".into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, failures: Vec<String>, checked: usize) -> Check {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} comparisons agree")
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            let more = failures.len().saturating_sub(shown.len());
            let tail = if more > 0 { format!(" (+{more} more)") } else { String::new() };
            format!("{} of {checked} failed: {}{tail}", failures.len(), shown.join("; "))
        };
        Check { suite, name: name.into(), passed, detail }
    }

    fn error(suite: Suite, name: impl Into<String>, err: &Error) -> Check {
        Check { suite, name: name.into(), passed: false, detail: format!("{}: {err}", err.name()) }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

pub fn run(suite: Suite, budget: u128) -> Vec<Check> {
    match suite {
        Suite::Lemma1 => lemma1(budget),
        Suite::Lemma2 => lemma2(budget),
        Suite::Series => series(),
        Suite::Weil => weil(),
        Suite::Classnum => classnum(),
        Suite::Powersum => powersum(),
        Suite::Extremality => extremality(),
        Suite::Hermitian => hermitian(),
        Suite::Classifier => classifier(),
        Suite::Golden => golden(),
    }
}

pub fn run_all(budget: u128) -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(|s| run(s, budget)).collect()
}

/// Regimes with `f` even for each `l` in the scans: `(p for e = l, p for e = 2l)`.
pub fn scan_primes(l: u64) -> (u64, u64) {
    match l {
        3 => (2, 5),
        5 => (2, 3),
        7 => (3, 3),
        _ => panic!("no scan prime configured for l = {l}"),
    }
}

fn scan_regimes(ls: &[u64], ss: &[u32]) -> Vec<Regime> {
    let mut out = Vec::new();
    for &l in ls {
        let (p_l, p_2l) = scan_primes(l);
        for &s in ss {
            out.push(Regime::new(p_l, l, l, s).expect("scan regime"));
            out.push(Regime::new(p_2l, l, 2 * l, s).expect("scan regime"));
        }
    }
    out
}

fn regime_name(r: &Regime) -> String {
    format!("p={} l={} e={} s={} q={}", r.p, r.l, r.e, r.s, r.q)
}

/// First `(i, j)` in row-major order for each case number.
pub fn case_representatives(regime: &Regime) -> Vec<(CaseLabel, IndexPair)> {
    let mut reps: Vec<(CaseLabel, IndexPair)> = Vec::new();
    for i in 0..regime.e {
        for j in 0..regime.e {
            let idx = IndexPair::new(i, j, regime.e);
            let case = idx.classify(regime.l).expect("classifier is total");
            if !reps.iter().any(|(c, _)| c.number == case.number) {
                reps.push((case, idx));
            }
        }
    }
    reps.sort_by_key(|(c, _)| c.number);
    reps
}

fn all_pairs(e: u64) -> impl Iterator<Item = IndexPair> {
    (0..e).flat_map(move |i| (0..e).map(move |j| IndexPair::new(i, j, e)))
}

fn oracle_check(suite: Suite, name: String, curves: &[CurveParams], ns: &[u32], budget: u128) -> Check {
    let mut failures = Vec::new();
    let mut checked = 0;
    for params in curves {
        let idx = match params.index_pair() {
            Ok(idx) => idx,
            Err(e) => return Check::error(suite, name, &e),
        };
        for &n in ns {
            let formula = count_formula(&params.regime, &idx, n).value;
            match count_bruteforce(params, n, budget) {
                Ok(c) => {
                    checked += 1;
                    if c.value != formula {
                        failures.push(format!(
                            "({}, {}, {}) n={n}: formula {formula} bruteforce {}",
                            params.a, params.b, params.c, c.value
                        ));
                    }
                }
                Err(e) => return Check::error(suite, name, &e),
            }
        }
    }
    Check::new(suite, name, failures, checked)
}

fn lemma1(budget: u128) -> Vec<Check> {
    let mut out = Vec::new();
    let r4 = Regime::new(2, 3, 3, 1).expect("regime");
    let curves: Result<Vec<CurveParams>> = r4.field().and_then(|f| {
        let units: Vec<_> = f.elements().filter(|x| !x.is_zero()).collect();
        let mut v = Vec::new();
        for a in &units {
            for b in &units {
                for c in &units {
                    v.push(CurveParams::new(r4.clone(), f.clone(), a.clone(), b.clone(), c.clone())?);
                }
            }
        }
        Ok(v)
    });
    out.push(match curves {
        Ok(c) => oracle_check(Suite::Lemma1, "q=4 e=3, 27 triples, n=1..3".into(), &c, &[1, 2, 3], budget),
        Err(e) => Check::error(Suite::Lemma1, "q=4 e=3", &e),
    });

    let r16 = Regime::new(2, 5, 5, 1).expect("regime");
    let pairs = [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)];
    let curves: Result<Vec<CurveParams>> =
        pairs.iter().map(|&(i, j)| CurveParams::from_indices(r16.clone(), i, j)).collect();
    out.push(match curves {
        Ok(c) => oracle_check(Suite::Lemma1, "q=16 e=5, Fermat + 4 classes, n=1,2".into(), &c, &[1, 2], budget),
        Err(e) => Check::error(Suite::Lemma1, "q=16 e=5", &e),
    });
    out
}

fn lemma2(budget: u128) -> Vec<Check> {
    let r = Regime::new(5, 3, 6, 1).expect("regime");
    case_representatives(&r)
        .into_iter()
        .map(|(case, idx)| {
            let name = format!("q=25 e=6 {case} (i,j)=({},{}), n=1,2", idx.i, idx.j);
            match CurveParams::from_indices(r.clone(), idx.i, idx.j) {
                Ok(params) => oracle_check(Suite::Lemma2, name, &[params], &[1, 2], budget),
                Err(e) => Check::error(Suite::Lemma2, name, &e),
            }
        })
        .collect()
}

fn series() -> Vec<Check> {
    let regimes = [(5, 3, 6), (2, 3, 3), (2, 5, 5)];
    let mut out = Vec::new();
    for (p, l, e) in regimes {
        let r = Regime::new(p, l, e, 1).expect("regime");
        for (case, idx) in case_representatives(&r) {
            let name = format!("{} {case}", regime_name(&r));
            let check = (|| -> Result<Check> {
                let params = CurveParams::from_indices(r.clone(), idx.i, idx.j)?;
                let z = crate::zeta::zeta_function(&params)?;
                let n_max = (2 * r.genus + 2) as usize;
                let counts: Vec<BigInt> =
                    (1..=n_max as u32).map(|n| count_formula(&r, &idx, n).value).collect();
                let failures = match series_mismatch(&z, &counts, n_max) {
                    None => vec![],
                    Some(k) => vec![format!("first mismatch at t^{k}")],
                };
                Ok(Check::new(Suite::Series, name.clone(), failures, n_max + 1))
            })();
            out.push(check.unwrap_or_else(|e| Check::error(Suite::Series, name, &e)));
        }
    }
    out
}

fn weil() -> Vec<Check> {
    scan_regimes(&[3, 5, 7], &[1, 2])
        .into_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let reps = case_representatives(&r);
            for (case, _) in &reps {
                match build_factored_p(&r, case) {
                    Ok(fp) => {
                        let w = check_weil(&ZetaFunction::from_factored(&r, fp));
                        if !w.all_pass() {
                            failures.push(format!("{case}: {}", w.failures.join(", ")));
                        }
                    }
                    Err(e) => failures.push(format!("{case}: {e}")),
                }
            }
            Check::new(Suite::Weil, regime_name(&r), failures, reps.len())
        })
        .collect()
}

fn classnum() -> Vec<Check> {
    scan_regimes(&[3, 5, 7], &[1, 2, 3])
        .into_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let reps = case_representatives(&r);
            for (case, _) in &reps {
                match class_number_for_case(&r, case) {
                    Ok(rep) if rep.consistent() => {}
                    Ok(rep) => failures.push(format!("{case}: P(1) {} closed form {}", rep.via_p1, rep.via_closed_form)),
                    Err(e) => failures.push(format!("{case}: {e}")),
                }
            }
            Check::new(Suite::Classnum, regime_name(&r), failures, reps.len())
        })
        .collect()
}

fn powersum() -> Vec<Check> {
    scan_regimes(&[3, 5, 7], &[1, 2])
        .into_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let mut checked = 0;
            let q = r.q_int();
            for idx in all_pairs(r.e) {
                let case = idx.classify(r.l).expect("classifier is total");
                let fp = match build_factored_p(&r, &case) {
                    Ok(fp) => fp,
                    Err(e) => {
                        failures.push(format!("{case}: {e}"));
                        continue;
                    }
                };
                for n in 1..=12 {
                    checked += 1;
                    let lhs = power_sum_counts(&fp, &q, n);
                    let rhs = count_formula(&r, &idx, n).value;
                    if lhs != rhs {
                        failures.push(format!("({}, {}) n={n}: {lhs} vs {rhs}", idx.i, idx.j));
                    }
                }
            }
            Check::new(Suite::Powersum, regime_name(&r), failures, checked)
        })
        .collect()
}

fn extremal_shape(r: &Regime, status: Extremality) -> IntPolynomial {
    let root = if status == Extremality::Maximal { r.sqrt_q() } else { -r.sqrt_q() };
    IntPolynomial::new(vec![BigInt::from(1), root]).pow(2 * r.genus as u32)
}

fn extremality() -> Vec<Check> {
    scan_regimes(&[3, 5, 7], &[1, 2])
        .into_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let mut checked = 0;
            for idx in all_pairs(r.e) {
                checked += 1;
                let case = idx.classify(r.l).expect("classifier is total");
                let v = extremality_for(&r, &idx);
                let extremal = v.status != Extremality::Neither;
                let at = format!("({}, {}) {case}", idx.i, idx.j);
                if extremal != (case.number == 1) {
                    failures.push(format!("{at} is {:?}", v.status));
                }
                if !extremal {
                    continue;
                }
                if (v.status == Extremality::Maximal) != (r.s % 2 == 1) {
                    failures.push(format!("{at} is {:?} with s = {}", v.status, r.s));
                }
                match build_factored_p(&r, &case) {
                    Ok(fp) if fp.expand() == extremal_shape(&r, v.status) => {}
                    Ok(_) => failures.push(format!("{at}: P(t) is not (1 +- sqrt(q) t)^(2g)")),
                    Err(e) => failures.push(format!("{at}: {e}")),
                }
            }
            Check::new(Suite::Extremality, regime_name(&r), failures, checked)
        })
        .collect()
}

fn hermitian() -> Vec<Check> {
    let cases = [(5, 3, 6, 25u64, 10u64), (2, 5, 5, 16, 6), (2, 3, 3, 4, 1)];
    let mut out: Vec<Check> = cases
        .iter()
        .map(|&(p, l, e, q, g)| {
            let name = format!("p={p} l={l} e={e} q={q}");
            let check = (|| -> Result<Vec<String>> {
                let params = crate::curve::validate_params(p, l, e, 1, "1", "1", "1")?;
                let mut failures = Vec::new();
                if !is_hermitian(&params)? {
                    failures.push("not flagged Hermitian".to_string());
                }
                let bound = max_genus_bound(q)?;
                if params.regime.genus != g || bound != g {
                    failures.push(format!("genus {} bound {bound} expected {g}", params.regime.genus));
                }
                Ok(failures)
            })();
            match check {
                Ok(f) => Check::new(Suite::Hermitian, name, f, 2),
                Err(e) => Check::error(Suite::Hermitian, name, &e),
            }
        })
        .collect();
    let r = Regime::new(2, 5, 5, 1).expect("regime");
    let failures = match fermat_prime_note(&r) {
        Some(note) if note.contains("Fermat prime") => vec![],
        other => vec![format!("annotation {other:?}")],
    };
    out.push(Check::new(Suite::Hermitian, "Fermat-prime note, l=5 q=16", failures, 1));
    out
}

fn units_mod(m: u64) -> Vec<u64> {
    (1..m).filter(|&t| num_integer::gcd(t, m) == 1).collect()
}

fn classifier() -> Vec<Check> {
    let mut out = Vec::new();
    for l in [3u64, 5, 7, 11] {
        let e = 2 * l;
        let mut failures = Vec::new();
        let mut checked = 0;
        for i in 0..e {
            for j in 0..e {
                checked += 1;
                let m = matching_cases_2l(i, j, l);
                if m.len() != 1 {
                    failures.push(format!("({i}, {j}) matches {m:?}"));
                    continue;
                }
                for t in units_mod(e) {
                    let moved = classify_2l(t * i % e, t * j % e, l).expect("total");
                    if moved != m[0] {
                        failures.push(format!("({i}, {j}) -> {} under t = {t}: {moved}", m[0]));
                    }
                }
                for t in units_mod(l) {
                    let (a, b) = (classify_l(i % l, j % l, l), classify_l(t * i % l, t * j % l, l));
                    if a != b {
                        failures.push(format!("mod {l}: ({i}, {j}) {a} vs {b} under t = {t}"));
                    }
                }
            }
        }
        out.push(Check::new(Suite::Classifier, format!("l={l}, Z_{e}^2"), failures, checked));
    }
    out
}

/// `C(n, k) m^k` for `k = 0..=n` in `u128`.
fn binomial_row(n: u32, m: u128) -> Vec<u128> {
    let mut row = vec![1u128];
    for k in 1..=n as u128 {
        let prev = *row.last().expect("nonempty");
        row.push(prev * (n as u128 + 1 - k) / k);
    }
    row.iter().enumerate().map(|(k, c)| c * m.pow(k as u32)).collect()
}

fn golden() -> Vec<Check> {
    let name = "Fermat sextic over F_25";
    let check = (|| -> Result<Check> {
        let params = crate::curve::validate_params(5, 3, 6, 1, "1", "1", "1")?;
        let a = build_report(&params, 4, None)?.to_json();
        let b = build_report(&params, 4, None)?.to_json();
        let mut failures = Vec::new();
        if a != b {
            failures.push("two runs differ".to_string());
        }
        let doc = build_report(&params, 4, None)?;
        let expected: Vec<String> = binomial_row(20, 5).iter().map(ToString::to_string).collect();
        if doc.p_coeffs != expected {
            failures.push("coefficients differ from C(20, k) 5^k".to_string());
        }
        Ok(Check::new(Suite::Golden, name, failures, 22))
    })();
    vec![check.unwrap_or_else(|e| Check::error(Suite::Golden, name, &e))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn representatives_cover_cases() {
        let r = Regime::new(5, 3, 6, 1).unwrap();
        let nums: Vec<u8> = case_representatives(&r).iter().map(|(c, _)| c.number).collect();
        assert_eq!(nums, vec![1, 2, 3, 4, 5, 6, 7]);
        let r = Regime::new(2, 5, 5, 1).unwrap();
        assert_eq!(case_representatives(&r).len(), 3);
    }

    #[test]
    fn binomial_row_small() {
        assert_eq!(binomial_row(4, 1), vec![1, 4, 6, 4, 1]);
        assert_eq!(binomial_row(2, 5), vec![1, 10, 25]);
    }

    #[test]
    fn small_budget_fails_bruteforce_suites() {
        let checks = run(Suite::Lemma1, 1000);
        assert!(checks.iter().all(|c| !c.passed));
        assert!(checks[0].detail.starts_with("BudgetExceeded"));
    }

    #[test]
    fn fast_suites_pass() {
        for s in [Suite::Weil, Suite::Classnum, Suite::Hermitian, Suite::Classifier, Suite::Golden] {
            for c in run(s, 0) {
                assert!(c.passed, "{c}");
            }
        }
    }
}
