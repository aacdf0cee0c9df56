//! Parameter regime, index pair and case taxonomy for `aY^e = bX^e + cZ^e`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, order_mod};
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};

/// The integer data of a curve family over `F_q`, independent of the coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regime {
    pub p: u64,
    pub l: u64,
    pub e: u64,
    /// Multiplicative order of `p` modulo `l`; always even.
    pub f: u64,
    pub s: u32,
    pub alpha: u64,
    pub q: BigUint,
    /// `q0 = p^f`.
    pub q0: u64,
    /// `u = sqrt(q0)`.
    pub u: u64,
    /// `(-1)^s * sqrt(q)`.
    pub theta: BigInt,
    pub genus: u64,
}

impl Regime {
    pub fn new(p: u64, l: u64, e: u64, s: u32) -> Result<Regime> {
        if l < 3 || !is_prime(l) {
            return Err(Error::LNotOddPrime(l));
        }
        if !is_prime(p) {
            return Err(Error::PNotPrime(p));
        }
        if e != l && e != 2 * l {
            return Err(Error::InvalidExponent { e, l });
        }
        if p == l {
            return Err(Error::PDividesL(p));
        }
        if e == 2 * l && p == 2 {
            return Err(Error::PEvenWith2l);
        }
        if s == 0 {
            return Err(Error::InvalidMultiplier);
        }
        let f = order_mod(p, l).expect("p and l are distinct primes");
        if f % 2 == 1 {
            return Err(Error::OrderNotEven { p, l, f });
        }
        let alpha = f * s as u64;
        let q = BigUint::from(p).pow(alpha as u32);
        if &q % e != BigUint::from(1u32) {
            return Err(Error::CongruenceFailure(e));
        }
        let u = p
            .checked_pow((f / 2) as u32)
            .filter(|&u| u < 1 << 31)
            .ok_or_else(|| Error::FieldTooLarge(format!("{p}^{f}")))?;
        let q0 = u * u;
        let sqrt_q = BigInt::from(u).pow(s);
        let theta = if s % 2 == 1 { -sqrt_q } else { sqrt_q };
        Ok(Regime { p, l, e, f, s, alpha, q, q0, u, theta, genus: genus(e) })
    }

    pub fn family(&self) -> Family {
        if self.e == self.l {
            Family::El
        } else {
            Family::E2l
        }
    }

    pub fn q_int(&self) -> BigInt {
        BigInt::from(self.q.clone())
    }

    /// `sqrt(q) = u^s`.
    pub fn sqrt_q(&self) -> BigInt {
        BigInt::from(self.u).pow(self.s)
    }

    /// The same family over `F_{q^m}` (extension multiplier `s * m`).
    pub fn extended(&self, m: u32) -> Result<Regime> {
        Regime::new(self.p, self.l, self.e, self.s * m)
    }

    /// `F_q` as a degree-`alpha` extension of `F_p`.
    pub fn field(&self) -> Result<Field> {
        let fp = Field::prime(self.p)?;
        if self.alpha == 1 {
            Ok(fp)
        } else {
            Field::extension(&fp, self.alpha as u32)
        }
    }
}

/// Genus of a smooth plane curve of degree `e`.
pub fn genus(e: u64) -> u64 {
    (e - 1) * (e - 2) / 2
}

/// A validated curve: regime plus nonzero coefficients in `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParams {
    pub regime: Regime,
    pub field: Field,
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

impl CurveParams {
    pub fn new(regime: Regime, field: Field, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
        if BigUint::from(field.order()) != regime.q {
            return Err(Error::MixedFields);
        }
        for x in [&a, &b, &c] {
            if *x.field() != field {
                return Err(Error::MixedFields);
            }
            if x.is_zero() {
                return Err(Error::ZeroCoefficient);
            }
        }
        Ok(CurveParams { regime, field, a, b, c })
    }

    /// Curve with `b = g^i`, `a = g^j`, `c = 1` for the canonical generator `g`.
    pub fn from_indices(regime: Regime, i: u64, j: u64) -> Result<Self> {
        let field = regime.field()?;
        let g = field.generator();
        let b = g.pow(i as i64)?;
        let a = g.pow(j as i64)?;
        let c = field.one();
        CurveParams::new(regime, field, a, b, c)
    }

    /// The ratios `b/c` and `a/c` reduced to indices modulo `e`.
    pub fn index_pair(&self) -> Result<IndexPair> {
        let g = self.field.generator();
        let e = self.regime.e;
        let c_inv = self.c.inv()?;
        let i = self.field.discrete_log(&g, &(&self.b * &c_inv))? % e;
        let j = self.field.discrete_log(&g, &(&self.a * &c_inv))? % e;
        Ok(IndexPair { i, j, e, generator: Some(g) })
    }

    pub fn case(&self) -> Result<CaseLabel> {
        self.index_pair()?.classify(self.regime.l)
    }
}

/// Parse coefficients in element text format and validate everything.
pub fn validate_params(p: u64, l: u64, e: u64, s: u32, a: &str, b: &str, c: &str) -> Result<CurveParams> {
    let regime = Regime::new(p, l, e, s)?;
    let field = regime.field()?;
    let a = field.parse_element(a)?;
    let b = field.parse_element(b)?;
    let c = field.parse_element(c)?;
    CurveParams::new(regime, field, a, b, c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPair {
    pub i: u64,
    pub j: u64,
    pub e: u64,
    /// Generator the indices were taken against; `None` for synthetic pairs.
    pub generator: Option<FieldElement>,
}

impl IndexPair {
    pub fn new(i: u64, j: u64, e: u64) -> Self {
        IndexPair { i: i % e, j: j % e, e, generator: None }
    }

    pub fn classify(&self, l: u64) -> Result<CaseLabel> {
        if self.e == l {
            Ok(classify_l(self.i, self.j, l))
        } else {
            classify_2l(self.i, self.j, l)
        }
    }

    /// Indices of the same coefficients over `F_{q^m}`, scaled by
    /// `N = (q^m - 1)/(q - 1) mod e`. Exact when the norm of the larger field's
    /// generator is the generator of `F_q`; otherwise off by a unit mod `e`,
    /// which leaves the case unchanged.
    pub fn in_extension(&self, q: &BigUint, m: u32) -> IndexPair {
        let e = BigUint::from(self.e);
        let qe = q % &e;
        let mut norm = BigUint::from(0u32);
        let mut pw = BigUint::from(1u32);
        for _ in 0..m {
            norm = (norm + &pw) % &e;
            pw = (pw * &qe) % &e;
        }
        let n = u64::try_from(norm).expect("reduced modulo e");
        IndexPair::new(self.i * n, self.j * n, self.e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `e = 2l`, seven cases.
    E2l,
    /// `e = l`, three cases.
    El,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subcase {
    I,
    Ii,
    Iii,
}

impl Subcase {
    fn roman(self) -> &'static str {
        match self {
            Subcase::I => "i",
            Subcase::Ii => "ii",
            Subcase::Iii => "iii",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseLabel {
    pub family: Family,
    pub number: u8,
    pub subcase: Option<Subcase>,
}

impl CaseLabel {
    pub fn new(family: Family, number: u8, subcase: Option<Subcase>) -> Self {
        CaseLabel { family, number, subcase }
    }

    /// Same case ignoring the subcase tag.
    pub fn same_case(&self, other: &CaseLabel) -> bool {
        self.family == other.family && self.number == other.number
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::E2l => "2l",
            Family::El => "l",
        };
        write!(f, "{fam}-case-{}", self.number)?;
        if let Some(sub) = self.subcase {
            write!(f, "({})", sub.roman())?;
        }
        Ok(())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string(), "expected e.g. 2l-case-5(i) or l-case-3".into());
        let (family, rest) = if let Some(r) = s.strip_prefix("2l-case-") {
            (Family::E2l, r)
        } else if let Some(r) = s.strip_prefix("l-case-") {
            (Family::El, r)
        } else {
            return Err(bad());
        };
        let (num, sub) = match rest.split_once('(') {
            Some((n, tail)) => {
                let tag = tail.strip_suffix(')').ok_or_else(bad)?;
                let sub = match tag {
                    "i" => Subcase::I,
                    "ii" => Subcase::Ii,
                    "iii" => Subcase::Iii,
                    _ => return Err(bad()),
                };
                (n, Some(sub))
            }
            None => (rest, None),
        };
        let number: u8 = num.parse().map_err(|_| bad())?;
        let max = if family == Family::E2l { 7 } else { 3 };
        if number == 0 || number > max {
            return Err(bad());
        }
        Ok(CaseLabel { family, number, subcase: sub })
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CaseLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every case predicate of the seven-case table that holds at `(i, j)`, in
/// listed order. Exactly one entry for a well-formed table.
pub fn matching_cases_2l(i: u64, j: u64, l: u64) -> Vec<CaseLabel> {
    use Subcase::*;
    let e = 2 * l;
    let (i, j) = (i % e, j % e);
    let d = (i + e - j) % e;
    let even = |x: u64| x.is_multiple_of(2);
    let zero_or_l = |x: u64| x == 0 || x == l;
    let lab = |n, sub| CaseLabel::new(Family::E2l, n, sub);

    let mut hits = Vec::new();
    if i == 0 && j == 0 {
        hits.push(lab(1, None));
    }
    if even(i) && even(j) && i != 0 && j != 0 && d != 0 {
        hits.push(lab(2, None));
    }
    if even(i) && even(j) {
        if i == 0 && j != 0 {
            hits.push(lab(3, Some(I)));
        }
        if i != 0 && j == 0 {
            hits.push(lab(3, Some(Ii)));
        }
        if i != 0 && j != 0 && d == 0 {
            hits.push(lab(3, Some(Iii)));
        }
    }
    if i == 0 && j == l {
        hits.push(lab(4, Some(I)));
    }
    if i == l && j == 0 {
        hits.push(lab(4, Some(Ii)));
    }
    if i == l && j == l {
        hits.push(lab(4, Some(Iii)));
    }
    if !even(j) && i == 0 && j != l {
        hits.push(lab(5, Some(I)));
    }
    if !even(i) && i != l && j == 0 {
        hits.push(lab(5, Some(Ii)));
    }
    if !even(i) && i == j && i != l {
        hits.push(lab(5, Some(Iii)));
    }
    if !zero_or_l(i) && !zero_or_l(j) && !zero_or_l(d) {
        if even(i) != even(j) {
            hits.push(lab(6, Some(I)));
        }
        if !even(i) && !even(j) {
            hits.push(lab(6, Some(Ii)));
        }
    }
    if i == l && !zero_or_l(j) {
        hits.push(lab(7, Some(I)));
    }
    if !zero_or_l(i) && j == l {
        hits.push(lab(7, Some(Ii)));
    }
    if !zero_or_l(i) && !zero_or_l(j) && d == l {
        hits.push(lab(7, Some(Iii)));
    }
    hits
}

/// Case of `(i, j) mod 2l`: the first matching predicate in listed order.
pub fn classify_2l(i: u64, j: u64, l: u64) -> Result<CaseLabel> {
    matching_cases_2l(i, j, l)
        .into_iter()
        .next()
        .ok_or(Error::Unclassifiable { i, j })
}

/// Case of `(i, j) mod l` in the three-case table.
pub fn classify_l(i: u64, j: u64, l: u64) -> CaseLabel {
    use Subcase::*;
    let (i, j) = (i % l, j % l);
    let lab = |n, sub| CaseLabel::new(Family::El, n, sub);
    if i == 0 && j == 0 {
        lab(1, None)
    } else if i != 0 && j != 0 && i != j {
        lab(3, None)
    } else if i == 0 {
        lab(2, Some(I))
    } else if j == 0 {
        lab(2, Some(Ii))
    } else {
        lab(2, Some(Iii))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> CaseLabel {
        s.parse().unwrap()
    }

    #[test]
    fn regime_examples() {
        let r = Regime::new(5, 3, 6, 1).unwrap();
        assert_eq!((r.f, r.q0, r.u, r.genus), (2, 25, 5, 10));
        assert_eq!(r.q, BigUint::from(25u32));
        assert_eq!(r.theta, BigInt::from(-5));

        let r = Regime::new(2, 3, 3, 1).unwrap();
        assert_eq!((r.f, r.u, r.genus), (2, 2, 1));
        assert_eq!(r.theta, BigInt::from(-2));

        let r = Regime::new(2, 3, 3, 2).unwrap();
        assert_eq!(r.theta, BigInt::from(4));
        assert_eq!(&r.theta * &r.theta, r.q_int());
    }

    #[test]
    fn regime_errors() {
        assert!(matches!(Regime::new(7, 3, 3, 1), Err(Error::OrderNotEven { f: 1, .. })));
        assert_eq!(Regime::new(2, 3, 6, 1).unwrap_err(), Error::PEvenWith2l);
        assert_eq!(Regime::new(5, 9, 9, 1).unwrap_err(), Error::LNotOddPrime(9));
        assert_eq!(Regime::new(5, 2, 2, 1).unwrap_err(), Error::LNotOddPrime(2));
        assert_eq!(Regime::new(6, 3, 3, 1).unwrap_err(), Error::PNotPrime(6));
        assert_eq!(Regime::new(5, 3, 4, 1).unwrap_err(), Error::InvalidExponent { e: 4, l: 3 });
        assert_eq!(Regime::new(3, 3, 3, 1).unwrap_err(), Error::PDividesL(3));
        assert_eq!(Regime::new(5, 3, 3, 0).unwrap_err(), Error::InvalidMultiplier);
    }

    #[test]
    fn validate_and_zero_coefficient() {
        let c = validate_params(5, 3, 6, 1, "1", "1", "1").unwrap();
        assert_eq!(c.field.order(), 25);
        assert_eq!(
            validate_params(5, 3, 6, 1, "1", "0", "1").unwrap_err(),
            Error::ZeroCoefficient
        );
        assert_eq!(validate_params(2, 3, 6, 1, "1", "1", "1").unwrap_err(), Error::PEvenWith2l);
    }

    #[test]
    fn index_pair_examples() {
        let r = Regime::new(5, 3, 6, 1).unwrap();
        let c = validate_params(5, 3, 6, 1, "1", "1", "1").unwrap();
        let idx = c.index_pair().unwrap();
        assert_eq!((idx.i, idx.j), (0, 0));

        let c = CurveParams::from_indices(r.clone(), 2, 4).unwrap();
        let idx = c.index_pair().unwrap();
        assert_eq!((idx.i, idx.j), (2, 4));

        let c = validate_params(5, 3, 6, 1, "g^1", "g^1", "g^1").unwrap();
        let idx = c.index_pair().unwrap();
        assert_eq!((idx.i, idx.j), (0, 0));
    }

    #[test]
    fn classify_2l_examples() {
        let l = 3;
        assert_eq!(classify_2l(0, 0, l).unwrap(), label("2l-case-1"));
        assert_eq!(classify_2l(2, 4, l).unwrap(), label("2l-case-2"));
        assert_eq!(classify_2l(2, 2, l).unwrap(), label("2l-case-3(iii)"));
        assert_eq!(classify_2l(3, 3, l).unwrap(), label("2l-case-4(iii)"));
        assert_eq!(classify_2l(0, 1, l).unwrap(), label("2l-case-5(i)"));
        assert_eq!(classify_2l(1, 2, l).unwrap(), label("2l-case-6(i)"));
        assert_eq!(classify_2l(1, 4, l).unwrap(), label("2l-case-7(iii)"));
    }

    #[test]
    fn classify_l_examples() {
        assert_eq!(classify_l(0, 0, 3), label("l-case-1"));
        assert_eq!(classify_l(1, 1, 3), label("l-case-2(iii)"));
        assert_eq!(classify_l(1, 2, 3), label("l-case-3"));
        assert_eq!(classify_l(0, 2, 5), label("l-case-2(i)"));
        assert_eq!(classify_l(4, 0, 5), label("l-case-2(ii)"));
    }

    #[test]
    fn label_text_roundtrip() {
        for s in ["2l-case-1", "2l-case-5(i)", "2l-case-7(iii)", "l-case-3", "l-case-2(ii)"] {
            assert_eq!(label(s).to_string(), s);
        }
        assert!("2l-case-8".parse::<CaseLabel>().is_err());
        assert!("l-case-4".parse::<CaseLabel>().is_err());
        assert!("case-1".parse::<CaseLabel>().is_err());
    }

    #[test]
    fn genus_formula() {
        assert_eq!(genus(3), 1);
        assert_eq!(genus(5), 6);
        assert_eq!(genus(6), 10);
        assert_eq!(genus(14), 78);
    }

    #[test]
    fn extension_indices_scale_by_norm() {
        let q = BigUint::from(25u32);
        let idx = IndexPair::new(1, 2, 6);
        let ext = idx.in_extension(&q, 3);
        assert_eq!((ext.i, ext.j), (3, 0));
        let ext = idx.in_extension(&q, 1);
        assert_eq!((ext.i, ext.j), (1, 2));
    }
}
