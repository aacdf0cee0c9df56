//! Numerator `P(t)` of the zeta function in factored and expanded form.
//!
//! Complex roots of unity never appear numerically. With `x = theta t` the four
//! block kinds are
//!
//! ```text
//! LinPlus    1 - x
//! LinMinus   1 + x
//! CycloPlus  prod_{r=1}^{l-1} (1 - zeta^r x) = 1 + x + .. + x^{l-1}
//! CycloMinus prod_{r=1}^{l-1} (1 + zeta^r x) = 1 - x + .. + x^{l-1}   (l odd)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::{CaseLabel, CurveParams, Family, Regime};
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    LinPlus,
    LinMinus,
    CycloPlus,
    CycloMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorBlock {
    pub kind: BlockKind,
    pub exponent: u32,
}

impl FactorBlock {
    pub fn degree(&self, l: u64) -> u64 {
        match self.kind {
            BlockKind::LinPlus | BlockKind::LinMinus => 1,
            BlockKind::CycloPlus | BlockKind::CycloMinus => l - 1,
        }
    }

    /// The block to the first power as a polynomial in `x = theta t`.
    pub fn base_polynomial(kind: BlockKind, l: u64) -> IntPolynomial {
        match kind {
            BlockKind::LinPlus => IntPolynomial::from_i64(&[1, -1]),
            BlockKind::LinMinus => IntPolynomial::from_i64(&[1, 1]),
            BlockKind::CycloPlus => IntPolynomial::from_i64(&vec![1; l as usize]),
            BlockKind::CycloMinus => {
                let v: Vec<i64> = (0..l).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
                IntPolynomial::from_i64(&v)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredPolynomial {
    pub blocks: Vec<FactorBlock>,
    #[serde(with = "decimal")]
    pub theta: BigInt,
    pub l: u64,
}

impl FactoredPolynomial {
    pub fn degree(&self) -> u64 {
        self.blocks.iter().map(|b| b.exponent as u64 * b.degree(self.l)).sum()
    }

    pub fn exponent_of(&self, kind: BlockKind) -> u32 {
        self.blocks.iter().filter(|b| b.kind == kind).map(|b| b.exponent).sum()
    }

    /// `P` as a polynomial in `x = theta t`; it does not depend on `q`.
    pub fn in_theta(&self) -> IntPolynomial {
        self.blocks.iter().fold(IntPolynomial::one(), |acc, b| {
            &acc * &FactorBlock::base_polynomial(b.kind, self.l).pow(b.exponent)
        })
    }

    /// Exact expansion in `t`.
    pub fn expand(&self) -> IntPolynomial {
        self.in_theta().scale_variable(&self.theta)
    }

    /// A single block to the first power, expanded in `t`.
    pub fn block_in_t(&self, kind: BlockKind) -> IntPolynomial {
        FactorBlock::base_polynomial(kind, self.l).scale_variable(&self.theta)
    }

    /// `sum_k alpha_k^n` over the reciprocal roots.
    pub fn power_sum(&self, n: u32) -> BigInt {
        let l = self.l;
        // sum_{r=1}^{l-1} zeta^{rn}
        let s = if (n as u64).is_multiple_of(l) { BigInt::from(l - 1) } else { BigInt::from(-1) };
        let plus = self.theta.pow(n);
        let minus = (-&self.theta).pow(n);
        self.blocks.iter().fold(BigInt::zero(), |acc, b| {
            let m = BigInt::from(b.exponent);
            let term = match b.kind {
                BlockKind::LinPlus => &plus * &m,
                BlockKind::LinMinus => &minus * &m,
                BlockKind::CycloPlus => &s * &plus * &m,
                BlockKind::CycloMinus => &s * &minus * &m,
            };
            acc + term
        })
    }

    /// `prod_k (1 - alpha_k^m)`: the class number after extending constants by degree `m`.
    pub fn extension_class_number(&self, m: u32) -> BigInt {
        let l = self.l;
        let divisible = (m as u64).is_multiple_of(l);
        let one = BigInt::one();
        let plus = self.theta.pow(m);
        let minus = (-&self.theta).pow(m);
        let cyclo = |x: &BigInt| -> BigInt {
            if divisible {
                (&one - x).pow(l as u32 - 1)
            } else {
                (0..l as u32).map(|k| x.pow(k)).sum()
            }
        };
        self.blocks.iter().fold(one.clone(), |acc, b| {
            let v = match b.kind {
                BlockKind::LinPlus => &one - &plus,
                BlockKind::LinMinus => &one - &minus,
                BlockKind::CycloPlus => cyclo(&plus),
                BlockKind::CycloMinus => cyclo(&minus),
            };
            acc * v.pow(b.exponent)
        })
    }

    /// Multiplicity of each reciprocal root `sqrt(q) * xi^k`, `xi = exp(2 pi i / 2l)`,
    /// indexed by `k` in `0..2l`.
    pub fn root_distribution(&self) -> Vec<u64> {
        let l = self.l;
        let e = 2 * l;
        let shift = if self.theta.is_negative() { l } else { 0 };
        let mut mult = vec![0u64; e as usize];
        for b in &self.blocks {
            let m = b.exponent as u64;
            let mut add = |k: u64| mult[((k + shift) % e) as usize] += m;
            match b.kind {
                BlockKind::LinPlus => add(0),
                BlockKind::LinMinus => add(l),
                BlockKind::CycloPlus => (1..l).for_each(|r| add(2 * r)),
                BlockKind::CycloMinus => (1..l).for_each(|r| add(2 * r + l)),
            }
        }
        mult
    }
}

/// Block exponents for each case.
pub fn build_factored_p(regime: &Regime, case: &CaseLabel) -> Result<FactoredPolynomial> {
    use BlockKind::*;
    if case.family != regime.family() {
        return Err(Error::FamilyMismatch);
    }
    let l = regime.l as u32;
    let spec: Vec<(BlockKind, u32)> = match (case.family, case.number) {
        (Family::E2l, 1) => vec![(LinPlus, (2 * l - 1) * (2 * l - 2))],
        (Family::E2l, 2) => vec![(LinPlus, 4 * l - 4), (CycloPlus, 4 * l - 6)],
        (Family::E2l, 3) => vec![(LinPlus, 2 * l - 2), (CycloPlus, 4 * l - 4)],
        (Family::E2l, 4) => vec![(LinPlus, 2 * (l - 1) * (l - 1)), (LinMinus, 2 * l * (l - 1))],
        (Family::E2l, 5) => vec![(LinMinus, 2 * l - 2), (CycloPlus, 2 * l - 2), (CycloMinus, 2 * l - 2)],
        (Family::E2l, 6) => vec![
            (LinPlus, 2 * l - 2),
            (LinMinus, 2 * l - 2),
            (CycloPlus, 2 * l - 4),
            (CycloMinus, 2 * l - 2),
        ],
        (Family::E2l, 7) => vec![
            (LinPlus, l - 1),
            (LinMinus, l - 1),
            (CycloPlus, 2 * l - 3),
            (CycloMinus, 2 * l - 1),
        ],
        (Family::El, 1) => vec![(LinPlus, (l - 1) * (l - 2))],
        (Family::El, 2) => vec![(CycloPlus, l - 2)],
        (Family::El, 3) => vec![(LinPlus, l - 1), (CycloPlus, l - 3)],
        _ => return Err(Error::FamilyMismatch),
    };
    let blocks = spec
        .into_iter()
        .filter(|&(_, exponent)| exponent > 0)
        .map(|(kind, exponent)| FactorBlock { kind, exponent })
        .collect();
    Ok(FactoredPolynomial { blocks, theta: regime.theta.clone(), l: regime.l })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFunction {
    /// `P(t)`; the denominator `(1 - t)(1 - qt)` is implicit.
    pub numerator: IntPolynomial,
    pub q: BigInt,
    pub genus: u64,
    /// Factored form, when the numerator came from the case table.
    pub factored: Option<FactoredPolynomial>,
}

impl ZetaFunction {
    pub fn from_factored(regime: &Regime, fp: FactoredPolynomial) -> Self {
        ZetaFunction { numerator: fp.expand(), q: regime.q_int(), genus: regime.genus, factored: Some(fp) }
    }

    pub fn from_numerator(numerator: IntPolynomial, q: BigInt, genus: u64) -> Self {
        ZetaFunction { numerator, q, genus, factored: None }
    }

    /// Coefficients of `Z(t) = P(t) / ((1 - t)(1 - qt))` through `t^n_max`.
    pub fn series(&self, n_max: usize) -> Vec<BigInt> {
        // 1/((1-t)(1-qt)) = sum_n (1 + q + .. + q^n) t^n
        let mut denom_inv = Vec::with_capacity(n_max + 1);
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for _ in 0..=n_max {
            acc += &pw;
            pw *= &self.q;
            denom_inv.push(acc.clone());
        }
        (0..=n_max)
            .map(|n| (0..=n).map(|k| self.numerator.coeff(k) * &denom_inv[n - k]).sum())
            .collect()
    }
}

/// `P(t)` and `Z(t)` for a validated curve.
pub fn zeta_function(params: &CurveParams) -> Result<ZetaFunction> {
    let case = params.case()?;
    let fp = build_factored_p(&params.regime, &case)?;
    Ok(ZetaFunction::from_factored(&params.regime, fp))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilReport {
    pub degree: bool,
    pub constant_term: bool,
    pub leading_coefficient: bool,
    pub functional_equation: bool,
    pub root_magnitude: bool,
    /// Human-readable description of every failed check.
    pub failures: Vec<String>,
}

impl WeilReport {
    pub fn all_pass(&self) -> bool {
        self.degree && self.constant_term && self.leading_coefficient && self.functional_equation && self.root_magnitude
    }
}

/// Checks the Weil properties exactly; every failure is reported.
pub fn check_weil(z: &ZetaFunction) -> WeilReport {
    let p = &z.numerator;
    let g = z.genus as usize;
    let mut failures = Vec::new();

    let degree = p.degree() == Some(2 * g);
    if !degree {
        failures.push(format!("degree {:?}, expected {}", p.degree(), 2 * g));
    }
    let constant_term = p.coeff(0).is_one();
    if !constant_term {
        failures.push(format!("constant term {}", p.coeff(0)));
    }
    let qg = z.q.pow(g as u32);
    let leading_coefficient = p.coeff(2 * g) == qg && p.coeff(2 * g) == p.leading();
    if !leading_coefficient {
        failures.push(format!("leading coefficient {}, expected {qg}", p.leading()));
    }

    // c_{2g-k} = q^{g-k} c_k, written without negative powers as
    // c_{2g-k} q^k = q^g c_k.
    let mut functional_equation = p.degree().is_none_or(|d| d <= 2 * g);
    for k in 0..=2 * g {
        let lhs = p.coeff(2 * g - k) * z.q.pow(k as u32);
        let rhs = &qg * p.coeff(k);
        if lhs != rhs {
            functional_equation = false;
            failures.push(format!("coefficient symmetry fails at k = {k}"));
            break;
        }
    }

    let root_magnitude = match &z.factored {
        None => {
            failures.push("no factored form to certify root magnitudes".into());
            false
        }
        Some(fp) => {
            let mut ok = &fp.theta * &fp.theta == z.q;
            if !ok {
                failures.push("theta^2 != q".into());
            }
            for b in &fp.blocks {
                if b.exponent > 0 && p.div_exact(&fp.block_in_t(b.kind)).is_none() {
                    ok = false;
                    failures.push(format!("P is not divisible by its {:?} block", b.kind));
                }
            }
            ok
        }
    };

    WeilReport { degree, constant_term, leading_coefficient, functional_equation, root_magnitude, failures }
}

/// `a(n) = q^n + 1 - sum_k alpha_k^n` from the factored form.
pub fn power_sum_counts(fp: &FactoredPolynomial, q: &BigInt, n: u32) -> BigInt {
    q.pow(n) + 1 - fp.power_sum(n)
}

/// Coefficients of `exp(sum_{n>=1} a(n) t^n / n)` through `t^n_max`, in exact
/// rationals. `counts[k]` is `a(k + 1)`.
pub fn exp_of_count_series(counts: &[BigInt], n_max: usize) -> Vec<BigRational> {
    assert!(counts.len() >= n_max);
    // E' = L' E with L' = sum a(n) t^{n-1}, so n e_n = sum_{k=1}^n a(k) e_{n-k}
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            acc += BigRational::from_integer(counts[k - 1].clone()) * &e[n - k];
        }
        e.push(acc / BigRational::from_integer(BigInt::from(n)));
    }
    e
}

/// First `n <= n_max` where the exponential of the count series differs from
/// the expansion of `Z(t)`, or `None` when they agree.
pub fn series_mismatch(z: &ZetaFunction, counts: &[BigInt], n_max: usize) -> Option<usize> {
    let lhs = exp_of_count_series(counts, n_max);
    let rhs = z.series(n_max);
    (0..=n_max).find(|&n| lhs[n] != BigRational::from_integer(rhs[n].clone()))
}

/// True iff `exp(sum a(n) t^n / n)` and `P(t)/((1-t)(1-qt))` agree through `t^n_max`.
pub fn series_consistency(z: &ZetaFunction, counts: &[BigInt], n_max: usize) -> bool {
    series_mismatch(z, counts, n_max).is_none()
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
