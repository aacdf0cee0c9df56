//! Machine-readable report for one curve. All integers are decimal strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classnum::class_number;
use crate::count::{count_bruteforce, count_formula, weil_bounds};
use crate::curve::{CaseLabel, CurveParams, Regime};
use crate::error::Result;
use crate::maximality::{classify_extremality, Extremality};
use crate::zeta::{build_factored_p, check_weil, BlockKind, ZetaFunction, WeilReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub p: String,
    pub l: String,
    pub e: String,
    pub f: String,
    pub s: String,
    pub alpha: String,
    pub q: String,
    pub q0: String,
    pub u: String,
    pub theta: String,
    pub genus: String,
    pub a: String,
    pub b: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexPairDoc {
    pub i: String,
    pub j: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub kind: BlockKind,
    pub exponent: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalityDoc {
    pub status: Extremality,
    pub attained_count: String,
    pub lower_bound: String,
    pub upper_bound: String,
    pub is_fermat_class: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fermat_prime_note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    pub n: String,
    pub formula: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce_error: Option<String>,
    pub weil_lower: String,
    pub weil_upper: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub params: ParamsDoc,
    pub generator: String,
    pub index_pair: IndexPairDoc,
    pub case: CaseLabel,
    pub p_factored: Vec<BlockDoc>,
    pub p_coeffs: Vec<String>,
    pub class_number: String,
    pub class_number_closed_form: String,
    pub extremality: ExtremalityDoc,
    pub hermitian: bool,
    /// Multiplicity of the reciprocal root `sqrt(q) xi^k`, `xi = exp(2 pi i / 2l)`, for `k = 0..2l`.
    pub root_distribution: Vec<String>,
    pub counts: Vec<CountDoc>,
    pub weil_report: WeilReport,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn bruteforce_agrees(&self) -> bool {
        self.counts
            .iter()
            .all(|c| c.bruteforce.as_ref().is_none_or(|b| *b == c.formula))
    }

    pub fn csv_header() -> Vec<&'static str> {
        vec![
            "p", "l", "e", "s", "q", "genus", "a", "b", "c", "i", "j", "case", "class_number", "status",
            "a1", "hermitian", "p_coeffs", "counts_formula", "counts_bruteforce",
        ]
    }

    /// One CSV record; list-valued fields are joined with `;`.
    pub fn csv_record(&self) -> Vec<String> {
        let p = &self.params;
        let brute: Vec<String> = self
            .counts
            .iter()
            .map(|c| c.bruteforce.clone().unwrap_or_default())
            .collect();
        vec![
            p.p.clone(),
            p.l.clone(),
            p.e.clone(),
            p.s.clone(),
            p.q.clone(),
            p.genus.clone(),
            p.a.clone(),
            p.b.clone(),
            p.c.clone(),
            self.index_pair.i.clone(),
            self.index_pair.j.clone(),
            self.case.to_string(),
            self.class_number.clone(),
            format!("{:?}", self.extremality.status),
            self.extremality.attained_count.clone(),
            self.hermitian.to_string(),
            self.p_coeffs.join(";"),
            self.counts.iter().map(|c| c.formula.clone()).collect::<Vec<_>>().join(";"),
            brute.join(";"),
        ]
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        let _ = writeln!(out, "curve    aY^{e} = bX^{e} + cZ^{e}, a = {}, b = {}, c = {}", p.a, p.b, p.c, e = p.e);
        let _ = writeln!(out, "field    F_{} (p = {}, f = {}, s = {}), generator {}", p.q, p.p, p.f, p.s, self.generator);
        let _ = writeln!(out, "genus    {}    theta = {}", p.genus, p.theta);
        let _ = writeln!(out, "indices  (i, j) = ({}, {})    {}", self.index_pair.i, self.index_pair.j, self.case);
        let blocks: Vec<String> = self
            .p_factored
            .iter()
            .map(|b| format!("{:?}^{}", b.kind, b.exponent))
            .collect();
        let _ = writeln!(out, "P(t)     {}", blocks.join(" * "));
        let _ = writeln!(out, "coeffs   [{}]", self.p_coeffs.join(", "));
        let _ = writeln!(out, "h        {}", self.class_number);
        let x = &self.extremality;
        let _ = writeln!(
            out,
            "status   {:?}, a(1) = {} in [{}, {}]{}",
            x.status,
            x.attained_count,
            x.lower_bound,
            x.upper_bound,
            if self.hermitian { " (Hermitian)" } else { "" }
        );
        if let Some(note) = &x.fermat_prime_note {
            let _ = writeln!(out, "note     {note}");
        }
        for note in &x.notes {
            let _ = writeln!(out, "note     {note}");
        }
        for c in &self.counts {
            let brute = match (&c.bruteforce, &c.bruteforce_error) {
                (Some(b), _) => format!("  bruteforce {b}"),
                (None, Some(err)) => format!("  bruteforce skipped: {err}"),
                _ => String::new(),
            };
            let _ = writeln!(out, "a({})     {}{}", c.n, c.formula, brute);
        }
        let w = &self.weil_report;
        let _ = writeln!(
            out,
            "weil     degree {} constant {} leading {} functional-eq {} roots {}",
            w.degree, w.constant_term, w.leading_coefficient, w.functional_equation, w.root_magnitude
        );
        out
    }
}

fn params_doc(params: &CurveParams) -> ParamsDoc {
    let r: &Regime = &params.regime;
    ParamsDoc {
        p: r.p.to_string(),
        l: r.l.to_string(),
        e: r.e.to_string(),
        f: r.f.to_string(),
        s: r.s.to_string(),
        alpha: r.alpha.to_string(),
        q: r.q.to_string(),
        q0: r.q0.to_string(),
        u: r.u.to_string(),
        theta: r.theta.to_string(),
        genus: r.genus.to_string(),
        a: params.a.to_text(),
        b: params.b.to_text(),
        c: params.c.to_text(),
    }
}

/// Full pipeline for one curve. With `bruteforce_budget`, each `n` is also
/// counted by enumeration while the estimated cost fits the budget.
pub fn build_report(params: &CurveParams, n_max: u32, bruteforce_budget: Option<u128>) -> Result<ReportDocument> {
    let regime = &params.regime;
    let idx = params.index_pair()?;
    let case = idx.classify(regime.l)?;
    let fp = build_factored_p(regime, &case)?;
    let zeta = ZetaFunction::from_factored(regime, fp.clone());
    let h = class_number(params)?;
    let verdict = classify_extremality(params)?;

    let mut counts = Vec::new();
    for n in 1..=n_max {
        let formula = count_formula(regime, &idx, n).value;
        let (lo, hi) = weil_bounds(regime, n);
        let (bruteforce, bruteforce_error) = match bruteforce_budget {
            None => (None, None),
            Some(budget) => match count_bruteforce(params, n, budget) {
                Ok(c) => (Some(c.value.to_string()), None),
                Err(e) => (None, Some(e.to_string())),
            },
        };
        counts.push(CountDoc {
            n: n.to_string(),
            formula: formula.to_string(),
            bruteforce,
            bruteforce_error,
            weil_lower: lo.to_string(),
            weil_upper: hi.to_string(),
        });
    }

    Ok(ReportDocument {
        params: params_doc(params),
        generator: params.field.generator().to_text(),
        index_pair: IndexPairDoc { i: idx.i.to_string(), j: idx.j.to_string() },
        case,
        p_factored: fp
            .blocks
            .iter()
            .map(|b| BlockDoc { kind: b.kind, exponent: b.exponent.to_string() })
            .collect(),
        p_coeffs: zeta.numerator.to_decimal(),
        class_number: h.via_p1.to_string(),
        class_number_closed_form: h.via_closed_form.to_string(),
        extremality: ExtremalityDoc {
            status: verdict.status,
            attained_count: verdict.attained_count.to_string(),
            lower_bound: verdict.lower.to_string(),
            upper_bound: verdict.upper.to_string(),
            is_fermat_class: verdict.is_fermat_class,
            fermat_prime_note: verdict.fermat_prime_note,
            notes: verdict.notes,
        },
        hermitian: verdict.is_hermitian,
        root_distribution: fp.root_distribution().iter().map(ToString::to_string).collect(),
        counts,
        weil_report: check_weil(&zeta),
    })
}

/// One report per coefficient class `b = g^i, a = g^j, c = 1`, row-major in `(i, j)`.
pub fn sweep(regime: &Regime, n_max: u32, bruteforce_budget: Option<u128>) -> Result<Vec<ReportDocument>> {
    let field = regime.field()?;
    let g = field.generator();
    let e = regime.e;
    let pairs: Vec<(u64, u64)> = (0..e).flat_map(|i| (0..e).map(move |j| (i, j))).collect();
    let one = |&(i, j): &(u64, u64)| -> Result<ReportDocument> {
        let params = CurveParams::new(
            regime.clone(),
            field.clone(),
            g.pow(j as i64)?,
            g.pow(i as i64)?,
            field.one(),
        )?;
        build_report(&params, n_max, bruteforce_budget)
    };

    #[cfg(feature = "parallel")]
    let docs: Vec<Result<ReportDocument>> = {
        use rayon::prelude::*;
        pairs.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let docs: Vec<Result<ReportDocument>> = pairs.iter().map(one).collect();

    docs.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::validate_params;

    #[test]
    fn fermat_sextic_report() {
        let params = validate_params(5, 3, 6, 1, "1", "1", "1").unwrap();
        let doc = build_report(&params, 2, Some(10_000_000)).unwrap();
        assert_eq!(doc.case.to_string(), "2l-case-1");
        assert_eq!(doc.p_coeffs[1], "100");
        assert_eq!(doc.class_number, num_bigint::BigInt::from(6).pow(20).to_string());
        assert_eq!(doc.extremality.status, Extremality::Maximal);
        assert!(doc.hermitian);
        assert!(doc.bruteforce_agrees());
        assert_eq!(doc.counts[0].bruteforce.as_deref(), Some("126"));
    }

    #[test]
    fn json_roundtrip_and_determinism() {
        let params = validate_params(2, 3, 3, 1, "1", "g^1", "1").unwrap();
        let a = build_report(&params, 3, None).unwrap();
        let b = build_report(&params, 3, None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let back: ReportDocument = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn csv_matches_json_numbers() {
        let params = validate_params(5, 3, 6, 1, "g^4", "g^2", "1").unwrap();
        let doc = build_report(&params, 2, None).unwrap();
        let rec = doc.csv_record();
        assert_eq!(rec.len(), ReportDocument::csv_header().len());
        assert_eq!(rec[12], doc.class_number);
        assert_eq!(rec[16], doc.p_coeffs.join(";"));
    }

    #[test]
    fn sweep_sizes() {
        let docs = sweep(&Regime::new(5, 3, 6, 1).unwrap(), 1, None).unwrap();
        assert_eq!(docs.len(), 36);
        let extremal = docs.iter().filter(|d| d.extremality.status != Extremality::Neither).count();
        assert_eq!(extremal, 1);
        assert_eq!((docs[7].index_pair.i.as_str(), docs[7].index_pair.j.as_str()), ("1", "1"));

        let docs = sweep(&Regime::new(2, 3, 3, 1).unwrap(), 1, None).unwrap();
        assert_eq!(docs.len(), 9);
        let mut cases: Vec<u8> = docs.iter().map(|d| d.case.number).collect();
        cases.sort();
        cases.dedup();
        assert_eq!(cases, vec![1, 2, 3]);
    }
}
