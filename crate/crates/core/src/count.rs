//! Rational point counts `a_e(n)` over `F_{q^n}`: closed form and brute force.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::curve::{CurveParams, IndexPair, Regime};
use crate::error::{Error, Result};
use crate::ff::Field;

/// Default brute-force work budget, in field operations.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountSource {
    Formula,
    Bruteforce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCount {
    pub n: u32,
    pub value: BigInt,
    pub source: CountSource,
}

/// The three branches of the point-count formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `in, jn = 0 (mod e)`.
    BothZero,
    /// `in, jn, in - jn` all nonzero.
    AllNonzero,
    /// Everything else.
    Other,
}

pub fn branch(e: u64, i: u64, j: u64, n: u64) -> Branch {
    let (a, b) = ((i % e) * (n % e) % e, (j % e) * (n % e) % e);
    if a == 0 && b == 0 {
        Branch::BothZero
    } else if a != 0 && b != 0 && a != b {
        Branch::AllNonzero
    } else {
        Branch::Other
    }
}

/// Multiplier `k` in `a(n) = q^n + 1 + k * theta^n` for the given branch.
pub fn branch_multiplier(regime: &Regime, br: Branch) -> i64 {
    let (l, e) = (regime.l as i64, regime.e as i64);
    match (e == l, br) {
        (true, Branch::BothZero) => -(l - 1) * (l - 2),
        (true, Branch::AllNonzero) => -2,
        (true, Branch::Other) => l - 2,
        (false, Branch::BothZero) => -(2 * l - 1) * (2 * l - 2),
        (false, Branch::AllNonzero) => -2,
        (false, Branch::Other) => 2 * (l - 1),
    }
}

/// `a_e(n) = q^n + 1 + k (-1)^{ns} q^{n/2}`, with `(-1)^{ns} q^{n/2} = theta^n`.
pub fn count_formula(regime: &Regime, idx: &IndexPair, n: u32) -> PointCount {
    assert!(n >= 1);
    let br = branch(regime.e, idx.i, idx.j, n as u64);
    let k = branch_multiplier(regime, br);
    let value = regime.q_int().pow(n) + 1 + BigInt::from(k) * regime.theta.pow(n);
    PointCount { n, value, source: CountSource::Formula }
}

/// `(q^n + 1 - 2g q^{n/2}, q^n + 1 + 2g q^{n/2})`.
pub fn weil_bounds(regime: &Regime, n: u32) -> (BigInt, BigInt) {
    let centre = regime.q_int().pow(n) + 1;
    let width = BigInt::from(2 * regime.genus) * regime.sqrt_q().pow(n);
    (&centre - &width, centre + width)
}

/// Estimated brute-force cost over `F_{q^n}`: `Q^2 + Q` chart points plus the power tables.
pub fn bruteforce_cost(regime: &Regime, n: u32) -> u128 {
    let big = regime.q.pow(n);
    match u128::try_from(big) {
        Ok(qn) => qn.saturating_mul(qn).saturating_add(3 * qn),
        Err(_) => u128::MAX,
    }
}

/// Count projective points of `aY^e = bX^e + cZ^e` over `F_{q^n}` by enumeration.
pub fn count_bruteforce(params: &CurveParams, n: u32, budget: u128) -> Result<PointCount> {
    assert!(n >= 1);
    let estimated = bruteforce_cost(&params.regime, n);
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let field = if n == 1 { params.field.clone() } else { Field::extension(&params.field, n)? };
    let lift = |x| if n == 1 { Ok(Clone::clone(x)) } else { field.lift(x) };
    let (a, b, c) = (lift(&params.a)?, lift(&params.b)?, lift(&params.c)?);
    let e = params.regime.e as i64;

    let qn = field.order();
    let power: Vec<_> = field.elements().map(|x| x.pow(e).expect("nonnegative exponent")).collect();
    // right side b x^e + c and left side a y^e, by element encoding
    let rhs: Vec<u64> = power.iter().map(|xe| (&(&b * xe) + &c).encoding()).collect();
    let lhs: Vec<u64> = power.iter().map(|ye| (&a * ye).encoding()).collect();
    let a_enc = a.encoding();
    let b_enc = b.encoding();
    let bx: Vec<u64> = power.iter().map(|xe| (&b * xe).encoding()).collect();

    let total = count_projective(
        qn,
        |x, y| rhs[x as usize] == lhs[y as usize],
        |x| bx[x as usize] == a_enc,
        b_enc == 0,
    );
    Ok(PointCount { n, value: BigInt::from(total), source: CountSource::Bruteforce })
}

/// Sums a predicate over the three charts of `P^2(F_Q)`:
/// `(x : y : 1)`, `(x : 1 : 0)` and `(1 : 0 : 0)`.
pub fn count_projective<A, B>(order: u64, affine: A, at_infinity: B, at_point: bool) -> u64
where
    A: Fn(u64, u64) -> bool + Sync,
    B: Fn(u64) -> bool,
{
    let row = |x: u64| (0..order).filter(|&y| affine(x, y)).count() as u64;

    #[cfg(feature = "parallel")]
    let affine_total: u64 = {
        use rayon::prelude::*;
        (0..order).into_par_iter().map(row).sum()
    };
    #[cfg(not(feature = "parallel"))]
    let affine_total: u64 = (0..order).map(row).sum();

    let infinity_total = (0..order).filter(|&x| at_infinity(x)).count() as u64;
    affine_total + infinity_total + at_point as u64
}

/// Same sweep, split into contiguous `x` ranges processed independently.
pub fn count_projective_chunked<A, B>(order: u64, chunks: u64, affine: A, at_infinity: B, at_point: bool) -> u64
where
    A: Fn(u64, u64) -> bool,
    B: Fn(u64) -> bool,
{
    let chunks = chunks.clamp(1, order.max(1));
    let width = order.div_ceil(chunks);
    let mut total = 0;
    for start in (0..order).step_by(width.max(1) as usize) {
        let end = (start + width).min(order);
        total += (start..end)
            .map(|x| (0..order).filter(|&y| affine(x, y)).count() as u64)
            .sum::<u64>();
    }
    total + (0..order).filter(|&x| at_infinity(x)).count() as u64 + at_point as u64
}
