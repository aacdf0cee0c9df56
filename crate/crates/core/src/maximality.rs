//! Maximal / minimal classification and Hermitian recognition.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::exact_sqrt;
use crate::count::{count_formula, weil_bounds};
use crate::curve::{CurveParams, IndexPair, Regime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extremality {
    Maximal,
    Minimal,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalityVerdict {
    pub status: Extremality,
    /// `a(1)` from the point-count formula.
    pub attained_count: BigInt,
    /// The bound `a(1)` is compared against: upper unless the curve is minimal.
    pub bound: BigInt,
    pub lower: BigInt,
    pub upper: BigInt,
    pub is_fermat_class: bool,
    pub is_hermitian: bool,
    pub fermat_prime_note: Option<String>,
    pub notes: Vec<String>,
}

pub fn classify_extremality(params: &CurveParams) -> Result<ExtremalityVerdict> {
    let idx = params.index_pair()?;
    Ok(extremality_for(&params.regime, &idx))
}

/// Verdict from the index pair alone.
pub fn extremality_for(regime: &Regime, idx: &IndexPair) -> ExtremalityVerdict {
    let a1 = count_formula(regime, idx, 1).value;
    let (lower, upper) = weil_bounds(regime, 1);
    let status = if a1 == upper {
        Extremality::Maximal
    } else if a1 == lower {
        Extremality::Minimal
    } else {
        Extremality::Neither
    };
    let bound = if status == Extremality::Minimal { lower.clone() } else { upper.clone() };
    let is_fermat_class = idx.i.is_multiple_of(idx.e) && idx.j.is_multiple_of(idx.e);
    let is_hermitian = hermitian_for(regime, is_fermat_class);

    let mut notes = Vec::new();
    if regime.l == 3 && regime.e == 3 && regime.s % 2 == 1 {
        notes.push(format!(
            "every element of F_{}^* is a cube, so coefficients from that subfield give the Fermat cubic",
            BigInt::from(regime.p).pow(regime.s)
        ));
    }
    if !is_fermat_class && status != Extremality::Neither {
        notes.push("extremal although the index pair is not (0, 0): P(t) coincides with the Fermat one".into());
    }
    if is_fermat_class && !is_hermitian && (regime.sqrt_q() + 1) % regime.e == BigInt::from(0) {
        notes.push(format!("e = {} divides sqrt(q) + 1", regime.e));
    }

    ExtremalityVerdict {
        status,
        attained_count: a1,
        bound,
        lower,
        upper,
        is_fermat_class,
        is_hermitian,
        fermat_prime_note: fermat_prime_note(regime),
        notes,
    }
}

pub fn is_hermitian(params: &CurveParams) -> Result<bool> {
    let idx = params.index_pair()?;
    Ok(hermitian_for(&params.regime, idx.i == 0 && idx.j == 0))
}

fn hermitian_for(regime: &Regime, fermat_class: bool) -> bool {
    let sqrt_q = regime.sqrt_q();
    let hermitian = fermat_class && BigInt::from(regime.e) == &sqrt_q + 1;
    if hermitian {
        let bound = &sqrt_q * (&sqrt_q - 1) / 2;
        assert_eq!(BigInt::from(regime.genus), bound, "Hermitian genus must meet the bound");
    }
    hermitian
}

/// `sqrt(q)(sqrt(q) - 1)/2`, the largest genus of a maximal curve over `F_q`.
pub fn max_genus_bound(q: u64) -> Result<u64> {
    let r = exact_sqrt(q).ok_or_else(|| Error::NotASquare(q.to_string()))?;
    Ok(r * r.saturating_sub(1) / 2)
}

/// Whether the genus exceeds the maximal-curve bound; happens exactly when `e > sqrt(q) + 1`.
pub fn exceeds_max_genus(regime: &Regime) -> bool {
    let sqrt_q = regime.sqrt_q();
    BigInt::from(regime.genus) > &sqrt_q * (&sqrt_q - 1) / 2
}

/// Annotation for `l = 2^{2^n} + 1` in characteristic 2, where the Fermat
/// curve of degree `l` is Hermitian over `F_{2^{2^{n+1}}}`.
pub fn fermat_prime_note(regime: &Regime) -> Option<String> {
    if regime.p != 2 || regime.e != regime.l {
        return None;
    }
    let n = (0..5u32).find(|&n| (1u64 << (1u64 << n)) + 1 == regime.l)?;
    let q0_exp = 1u64 << (n + 1);
    let kind = if regime.s % 2 == 1 { "maximal" } else { "minimal" };
    Some(format!(
        "l = {} = 2^(2^{n}) + 1 is a Fermat prime: Y^l = X^l + Z^l is Hermitian over F_(2^{q0_exp}) \
         and {kind} over F_q, q = 2^{}",
        regime.l, regime.alpha
    ))
}
