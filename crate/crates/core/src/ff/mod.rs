//! Finite fields realised as a tower `F_p -> F_q -> F_{q^n}`.
//!
//! Every element is stored by its canonical integer encoding: an element of an
//! extension of degree `d` over a base of order `Q` with coefficient vector
//! `(c_0, .., c_{d-1})` (each coefficient itself encoded in the base) has
//! encoding `sum c_k * Q^k`. Prime-field elements encode as their residue.
//! Enumeration order, generator search and irreducible-polynomial search are all
//! defined in terms of this encoding, which makes every choice reproducible.

mod dlog;
mod poly;
mod text;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::arith::is_prime;
use crate::error::{Error, Result};

pub use poly::is_irreducible;

/// Largest supported field order. Keeps encodings, tables and the
/// baby-step giant-step table at desk scale.
pub const MAX_ORDER: u64 = 1 << 40;

#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    characteristic: u64,
    order: u64,
    /// Degree over the immediate base; 1 for a prime field.
    degree: u32,
    base: Option<Field>,
    /// Monic modulus over the base, ascending degree, base encodings. Empty for prime fields.
    modulus: Vec<u64>,
    order_factors: OnceLock<Vec<u64>>,
    generator: OnceLock<u64>,
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::FieldTooLarge(p.to_string()));
        }
        Ok(Field(Arc::new(Inner {
            characteristic: p,
            order: p,
            degree: 1,
            base: None,
            modulus: Vec::new(),
            order_factors: OnceLock::new(),
            generator: OnceLock::new(),
        })))
    }

    /// Degree-`d` extension of `base`, using the least irreducible polynomial
    /// returned by [`find_irreducible`].
    pub fn extension(base: &Field, d: u32) -> Result<Field> {
        assert!(d >= 2, "extension degree must be at least 2");
        let order = base
            .order()
            .checked_pow(d)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| Error::FieldTooLarge(format!("{}^{}", base.order(), d)))?;
        let modulus = poly::least_irreducible(base, d as usize);
        Ok(Field(Arc::new(Inner {
            characteristic: base.characteristic(),
            order,
            degree: d,
            base: Some(base.clone()),
            modulus,
            order_factors: OnceLock::new(),
            generator: OnceLock::new(),
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Degree over the immediate base field (1 for `F_p`).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// The defining polynomial over the base, monic, ascending degree.
    pub fn modulus(&self) -> Option<Vec<FieldElement>> {
        let base = self.base()?;
        Some(self.0.modulus.iter().map(|&c| base.element(c)).collect())
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element with the given canonical encoding.
    pub fn element(&self, enc: u64) -> FieldElement {
        assert!(enc < self.order(), "encoding {enc} out of range for {self:?}");
        FieldElement { field: self.clone(), enc }
    }

    /// Image of an integer under `Z -> F_p -> self`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.characteristic() as i64;
        self.element(n.rem_euclid(p) as u64)
    }

    /// The primitive root `x` of the defining polynomial.
    pub fn root(&self) -> Option<FieldElement> {
        let base = self.base()?;
        Some(self.element(base.order()))
    }

    /// All elements, ascending by encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |k| self.element(k))
    }

    /// Constant embedding of a base-field element.
    pub fn lift(&self, x: &FieldElement) -> Result<FieldElement> {
        match self.base() {
            Some(base) if *base == x.field => Ok(self.element(x.enc)),
            _ => Err(Error::MixedFields),
        }
    }

    /// Element built from its coefficient vector over the base (ascending degree).
    pub fn from_coeffs(&self, coeffs: &[FieldElement]) -> Result<FieldElement> {
        let base = self.base().ok_or(Error::MixedFields)?;
        if coeffs.len() > self.degree() as usize {
            return Err(Error::Parse(
                format!("{} coefficients", coeffs.len()),
                format!("field has degree {}", self.degree()),
            ));
        }
        let mut digits = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field != *base {
                return Err(Error::MixedFields);
            }
            digits.push(c.enc);
        }
        Ok(self.element(self.encode_digits(&digits)))
    }

    // ---- raw arithmetic on encodings ----

    fn digits(&self, enc: u64) -> Vec<u64> {
        let q = self.base().map_or(self.order(), Field::order);
        let mut e = enc;
        (0..self.degree())
            .map(|_| {
                let r = e % q;
                e /= q;
                r
            })
            .collect()
    }

    fn encode_digits(&self, digits: &[u64]) -> u64 {
        let q = self.base().map_or(self.order(), Field::order);
        digits.iter().rev().fold(0, |acc, &d| acc * q + d)
    }

    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        match self.base() {
            None => {
                let s = a + b;
                if s >= self.order() {
                    s - self.order()
                } else {
                    s
                }
            }
            Some(base) => {
                let (da, db) = (self.digits(a), self.digits(b));
                let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| base.add_raw(x, y)).collect();
                self.encode_digits(&sum)
            }
        }
    }

    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        match self.base() {
            None => (self.order() - a) % self.order(),
            Some(base) => {
                let d: Vec<u64> = self.digits(a).into_iter().map(|x| base.neg_raw(x)).collect();
                self.encode_digits(&d)
            }
        }
    }

    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        match self.base() {
            None => a * b % self.order(),
            Some(base) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let d = self.degree() as usize;
                let (da, db) = (self.digits(a), self.digits(b));
                let mut prod = vec![0u64; 2 * d - 1];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate() {
                        if y != 0 {
                            prod[i + j] = base.add_raw(prod[i + j], base.mul_raw(x, y));
                        }
                    }
                }
                // x^d = -(m_0 + .. + m_{d-1} x^{d-1})
                let m = &self.0.modulus;
                for k in (d..2 * d - 1).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for t in 0..d {
                        if m[t] != 0 {
                            prod[k - d + t] = base.sub_raw(prod[k - d + t], base.mul_raw(c, m[t]));
                        }
                    }
                }
                self.encode_digits(&prod[..d])
            }
        }
    }

    pub(crate) fn pow_raw(&self, a: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        let mut b = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul_raw(b, b);
            }
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow_raw(a, self.order() - 2))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.characteristic == other.0.characteristic
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.order.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base() {
            None => write!(f, "F_{}", self.order()),
            Some(base) => write!(f, "F_{}[x]/{:?} over {:?}", self.order(), self.0.modulus, base),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    enc: u64,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding (see module docs).
    pub fn encoding(&self) -> u64 {
        self.enc
    }

    /// Coefficient vector over the base field, ascending degree; a single residue for `F_p`.
    pub fn repr(&self) -> Vec<u64> {
        self.field.digits(self.enc)
    }

    /// Coefficients as base-field elements (extension fields only).
    pub fn coeffs(&self) -> Option<Vec<FieldElement>> {
        let base = self.field.base()?;
        Some(self.repr().into_iter().map(|c| base.element(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }

    pub fn is_one(&self) -> bool {
        self.enc == 1
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add_raw(self.enc, other.enc)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub_raw(self.enc, other.enc)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul_raw(self.enc, other.enc)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv_raw(self.enc)
            .map(|e| self.field.element(e))
            .ok_or(Error::DivisionByZero)
    }

    /// Square-and-multiply; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<FieldElement> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(self.field.element(self.field.pow_raw(base.enc, e)))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator forms panic on mixed fields; use the checked_* methods at API boundaries.
impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("mixed fields")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("mixed fields")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.neg_raw(self.enc))
    }
}

/// Lexicographically least monic irreducible polynomial of degree `d` over
/// `base`, ascending degree with the leading 1 included.
pub fn find_irreducible(base: &Field, d: u32) -> Vec<FieldElement> {
    assert!(d >= 2, "degree must be at least 2");
    poly::least_irreducible(base, d as usize)
        .into_iter()
        .map(|c| base.element(c))
        .collect()
}
