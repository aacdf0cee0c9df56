//! Class numbers `h = P(1)` and their closed forms in `u = sqrt(q0)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::{CaseLabel, CurveParams, Family, IndexPair, Regime};
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::zeta::build_factored_p;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(s: u32) -> Parity {
        if s % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberReport {
    pub h: BigInt,
    pub via_p1: BigInt,
    pub via_closed_form: BigInt,
    pub s_parity: Parity,
    pub case: CaseLabel,
}

impl ClassNumberReport {
    pub fn consistent(&self) -> bool {
        self.via_p1 == self.via_closed_form && self.h == self.via_p1 && self.h > BigInt::zero()
    }
}

/// `P(1)` for the given regime and case.
pub fn p_at_one(regime: &Regime, case: &CaseLabel) -> Result<BigInt> {
    Ok(build_factored_p(regime, case)?.expand().eval(&BigInt::one()))
}

pub fn class_number(params: &CurveParams) -> Result<ClassNumberReport> {
    let case = params.case()?;
    class_number_for_case(&params.regime, &case)
}

pub fn class_number_for_case(regime: &Regime, case: &CaseLabel) -> Result<ClassNumberReport> {
    let via_p1 = p_at_one(regime, case)?;
    let via_closed_form = closed_form(case, regime.u, regime.s, regime.l)?;
    Ok(ClassNumberReport {
        h: via_p1.clone(),
        via_p1,
        via_closed_form,
        s_parity: Parity::of(regime.s),
        case: *case,
    })
}

fn exact_div(a: BigInt, b: BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::InexactDivision);
    }
    let (quot, rem) = a.div_rem(&b);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::InexactDivision)
    }
}

/// `h_1` (s odd) or `h_2` (s even) in terms of `u`, `s` and `l`.
pub fn closed_form(case: &CaseLabel, u: u64, s: u32, l: u64) -> Result<BigInt> {
    assert!(u >= 2 && s >= 1);
    let lu = l as u32;
    let a = BigInt::from(u).pow(s);
    let b = a.pow(lu);
    // h_2 is h_1 with every "+1" and "-1" exchanged
    let sign = if s % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let a_plus = &a + &sign;
    let a_minus = &a - &sign;
    let b_plus = &b + &sign;
    let b_minus = &b - &sign;

    let h = match (case.family, case.number) {
        (Family::E2l, 1) => a_plus.pow((2 * lu - 1) * (2 * lu - 2)),
        (Family::E2l, 2) => a_plus.pow(2) * b_plus.pow(4 * lu - 6),
        (Family::E2l, 3) => exact_div(b_plus.pow(4 * lu - 4), a_plus.pow(2 * lu - 2))?,
        (Family::E2l, 4) => a_plus.pow(2 * (lu - 1) * (lu - 1)) * a_minus.pow(2 * lu * (lu - 1)),
        (Family::E2l, 5) => exact_div(&b * &b - 1, a_plus)?.pow(2 * lu - 2),
        (Family::E2l, 6) => a_plus.pow(2) * b_plus.pow(2 * lu - 4) * b_minus.pow(2 * lu - 2),
        (Family::E2l, 7) => exact_div(
            b_plus.pow(2 * lu - 3) * b_minus.pow(2 * lu - 1),
            a_plus.pow(lu - 2) * a_minus.pow(lu),
        )?,
        (Family::El, 1) => a_plus.pow((lu - 1) * (lu - 2)),
        (Family::El, 2) => exact_div(b_plus, a_plus)?.pow(lu - 2),
        (Family::El, 3) => a_plus.pow(2) * b_plus.pow(lu - 3),
        _ => return Err(Error::FamilyMismatch),
    };
    Ok(h)
}

/// `h` as a polynomial in `sqrt(q)`: `P` written in `x = theta t` and evaluated
/// at `t = 1` with `theta = (-1)^s sqrt(q)`. Degree `2g`, constant term 1.
pub fn class_number_polynomial(regime: &Regime, case: &CaseLabel) -> Result<IntPolynomial> {
    let fp = build_factored_p(regime, case)?;
    let sign = if regime.s % 2 == 1 { BigInt::from(-1) } else { BigInt::one() };
    Ok(fp.in_theta().scale_variable(&sign))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    /// Constant field extension degree.
    pub s: u32,
    /// Total multiplier `s * s0`; its parity selects `h_1` or `h_2`.
    pub total_s: u32,
    pub index_pair: (u64, u64),
    pub case: CaseLabel,
    /// `P(1)` for the recomputed case over the larger field.
    pub h: BigInt,
    pub h_closed_form: BigInt,
    /// `prod (1 - alpha_k^s)` from the base field's factored `P`.
    pub h_via_extension: BigInt,
    pub parity: Parity,
}

impl GrowthRow {
    pub fn consistent(&self) -> bool {
        self.h == self.h_closed_form && self.h == self.h_via_extension
    }
}

/// Class numbers of the constant field extensions `K_{s0} F_{q^s}`, `s = 1..=s_max`,
/// where `s0 = params.s`.
pub fn growth_table(params: &CurveParams, s_max: u32) -> Result<Vec<GrowthRow>> {
    let idx = params.index_pair()?;
    growth_table_for(&params.regime, &idx, s_max)
}

pub fn growth_table_for(regime: &Regime, idx: &IndexPair, s_max: u32) -> Result<Vec<GrowthRow>> {
    let base_case = idx.classify(regime.l)?;
    let base_p = build_factored_p(regime, &base_case)?;
    let rows = (1..=s_max).map(|s| -> Result<GrowthRow> {
        let ext = regime.extended(s)?;
        let ext_idx = idx.in_extension(&regime.q, s);
        let case = ext_idx.classify(regime.l)?;
        let h = p_at_one(&ext, &case)?;
        Ok(GrowthRow {
            s,
            total_s: ext.s,
            index_pair: (ext_idx.i, ext_idx.j),
            case,
            h_closed_form: closed_form(&case, ext.u, ext.s, ext.l)?,
            h_via_extension: base_p.extension_class_number(s),
            h,
            parity: Parity::of(ext.s),
        })
    });
    rows.collect()
}
