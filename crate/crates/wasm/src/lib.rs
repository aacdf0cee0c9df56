//! Browser bindings. Everything here works from the index pair alone, so no
//! finite field is built and any valid regime answers instantly.

use diagzeta::classnum::{growth_table_for, p_at_one};
use diagzeta::count::count_formula;
use diagzeta::curve::{IndexPair, Regime};
use diagzeta::maximality::extremality_for;
use diagzeta::zeta::{build_factored_p, check_weil, ZetaFunction};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct RegimeSummary {
    p: u64,
    l: u64,
    e: u64,
    s: u32,
    q: String,
    genus: u64,
    theta: String,
}

impl RegimeSummary {
    fn of(r: &Regime) -> Self {
        RegimeSummary { p: r.p, l: r.l, e: r.e, s: r.s, q: r.q.to_string(), genus: r.genus, theta: r.theta.to_string() }
    }
}

#[derive(Serialize)]
struct Cell {
    i: u64,
    j: u64,
    case: String,
    status: String,
    a1: String,
    h: String,
}

#[derive(Serialize)]
struct Grid {
    regime: RegimeSummary,
    cells: Vec<Cell>,
}

#[derive(Serialize)]
struct Block {
    kind: String,
    exponent: u32,
}

#[derive(Serialize)]
struct Summary {
    regime: RegimeSummary,
    i: u64,
    j: u64,
    case: String,
    status: String,
    blocks: Vec<Block>,
    p_coeffs: Vec<String>,
    h: String,
    counts: Vec<String>,
    root_distribution: Vec<u64>,
    weil_ok: bool,
}

#[derive(Serialize)]
struct Row {
    s: u32,
    total_s: u32,
    i: u64,
    j: u64,
    case: String,
    h: String,
    consistent: bool,
}

fn regime(p: u32, l: u32, e: u32, s: u32) -> Result<Regime, String> {
    Regime::new(p.into(), l.into(), e.into(), s).map_err(|e| format!("{}: {e}", e.name()))
}

fn err(e: diagzeta::Error) -> String {
    format!("{}: {e}", e.name())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Case, extremality and class number for every `(i, j)` in `Z_e^2`.
pub fn case_grid_json(p: u32, l: u32, e: u32, s: u32) -> Result<String, String> {
    let r = regime(p, l, e, s)?;
    let mut cells = Vec::new();
    for i in 0..r.e {
        for j in 0..r.e {
            let idx = IndexPair::new(i, j, r.e);
            let case = idx.classify(r.l).map_err(err)?;
            let v = extremality_for(&r, &idx);
            cells.push(Cell {
                i,
                j,
                case: case.to_string(),
                status: format!("{:?}", v.status),
                a1: v.attained_count.to_string(),
                h: p_at_one(&r, &case).map_err(err)?.to_string(),
            });
        }
    }
    Ok(to_json(&Grid { regime: RegimeSummary::of(&r), cells }))
}

/// Factored and expanded `P(t)`, class number, first counts and root layout for one class.
pub fn curve_summary_json(p: u32, l: u32, e: u32, s: u32, i: u32, j: u32, n_max: u32) -> Result<String, String> {
    let r = regime(p, l, e, s)?;
    let idx = IndexPair::new(i.into(), j.into(), r.e);
    let case = idx.classify(r.l).map_err(err)?;
    let fp = build_factored_p(&r, &case).map_err(err)?;
    let z = ZetaFunction::from_factored(&r, fp.clone());
    let summary = Summary {
        regime: RegimeSummary::of(&r),
        i: idx.i,
        j: idx.j,
        case: case.to_string(),
        status: format!("{:?}", extremality_for(&r, &idx).status),
        blocks: fp.blocks.iter().map(|b| Block { kind: format!("{:?}", b.kind), exponent: b.exponent }).collect(),
        p_coeffs: z.numerator.to_decimal(),
        h: p_at_one(&r, &case).map_err(err)?.to_string(),
        counts: (1..=n_max.max(1)).map(|n| count_formula(&r, &idx, n).value.to_string()).collect(),
        root_distribution: fp.root_distribution(),
        weil_ok: check_weil(&z).all_pass(),
    };
    Ok(to_json(&summary))
}

/// Class numbers over `F_{q^s}`, `s = 1..=s_max`.
pub fn growth_json(p: u32, l: u32, e: u32, s: u32, i: u32, j: u32, s_max: u32) -> Result<String, String> {
    let r = regime(p, l, e, s)?;
    let idx = IndexPair::new(i.into(), j.into(), r.e);
    let rows = growth_table_for(&r, &idx, s_max).map_err(err)?;
    let rows: Vec<Row> = rows
        .iter()
        .map(|row| Row {
            s: row.s,
            total_s: row.total_s,
            i: row.index_pair.0,
            j: row.index_pair.1,
            case: row.case.to_string(),
            h: row.h.to_string(),
            consistent: row.consistent(),
        })
        .collect();
    Ok(to_json(&rows))
}

#[wasm_bindgen]
pub fn case_grid(p: u32, l: u32, e: u32, s: u32) -> Result<String, JsError> {
    case_grid_json(p, l, e, s).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn curve_summary(p: u32, l: u32, e: u32, s: u32, i: u32, j: u32, n_max: u32) -> Result<String, JsError> {
    curve_summary_json(p, l, e, s, i, j, n_max).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn growth(p: u32, l: u32, e: u32, s: u32, i: u32, j: u32, s_max: u32) -> Result<String, JsError> {
    growth_json(p, l, e, s, i, j, s_max).map_err(|m| JsError::new(&m))
}
