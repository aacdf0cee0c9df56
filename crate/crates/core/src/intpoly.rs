//! Dense polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients ascending; never a trailing zero (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = IntPolynomial::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `P(c t)`.
    pub fn scale_variable(&self, c: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        Self::new(out)
    }

    /// `P(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i * k] = a.clone();
        }
        Self::new(out)
    }

    /// Exact quotient `self / d` when `d` divides `self` in `Z[t]`, else `None`.
    /// `d` must have constant term `+-1`, so division runs from the low end.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let d0 = d.coeffs.first()?;
        assert!(d0.abs().is_one(), "divisor needs a unit constant term");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let (n, m) = (self.coeffs.len() - 1, d.coeffs.len() - 1);
        if m > n {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in 0..=n - m {
            let (qk, r) = rem[k].div_rem(d0);
            debug_assert!(r.is_zero());
            if !qk.is_zero() {
                for (t, dt) in d.coeffs.iter().enumerate() {
                    rem[k + t] -= &qk * dt;
                }
            }
            quot[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPolynomial::new(quot))
    }

    /// Coefficients as decimal strings.
    pub fn to_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// JSON form: `{"coeffs": ["1", "100", ...]}`.
impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        Repr { coeffs: self.to_decimal() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let r = Repr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn multiply_and_power() {
        assert_eq!(&p(&[1, 5]) * &p(&[1, -5]), p(&[1, 0, -25]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 1]).pow(0), IntPolynomial::one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 5]).pow(4);
        assert_eq!(a.div_exact(&p(&[1, 5])).unwrap(), p(&[1, 5]).pow(3));
        assert!(a.div_exact(&p(&[1, 4])).is_none());
        assert!(p(&[1, 1]).div_exact(&p(&[1, 0, 1])).is_none());
    }

    #[test]
    fn substitutions() {
        assert_eq!(p(&[1, 1, 1]).scale_variable(&BigInt::from(-5)), p(&[1, -5, 25]));
        assert_eq!(p(&[1, 2]).substitute_power(3), p(&[1, 0, 0, 2]));
        assert_eq!(p(&[3, 0, 2]).eval(&BigInt::from(2)), BigInt::from(11));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -5, 25]).to_string(), "1 - 5t + 25t^2");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&p(&[1, 100])).unwrap();
        assert_eq!(s, r#"{"coeffs":["1","100"]}"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[1, 100]));
    }

    fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|v| IntPolynomial::from_i64(&v))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in poly_strategy(), tail in prop::collection::vec(-9i64..9, 0..4)) {
            let mut dc = vec![1i64];
            dc.extend(tail);
            let d = IntPolynomial::from_i64(&dc);
            let prod = &a * &d;
            prop_assert_eq!(prod.div_exact(&d).unwrap(), a);
        }

        #[test]
        fn eval_is_ring_homomorphism(a in poly_strategy(), b in poly_strategy(), t in -7i64..7) {
            let t = BigInt::from(t);
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
        }
    }
}
