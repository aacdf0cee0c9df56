use std::collections::HashMap;

use super::{Field, FieldElement};
use crate::arith::factorize;
use crate::error::{Error, Result};

impl Field {
    /// Distinct prime factors of `|F| - 1`, computed once.
    fn group_order_primes(&self) -> &[u64] {
        self.0
            .order_factors
            .get_or_init(|| factorize(self.order() - 1).into_iter().map(|(r, _)| r).collect())
    }

    fn order_raw(&self, x: u64) -> u64 {
        let mut ord = self.order() - 1;
        for &r in self.group_order_primes() {
            while ord.is_multiple_of(r) && self.pow_raw(x, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn multiplicative_order(&self, x: &FieldElement) -> Result<u64> {
        if x.field != *self {
            return Err(Error::MixedFields);
        }
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.order_raw(x.enc))
    }

    /// First element in enumeration order of multiplicative order `|F| - 1`.
    pub fn generator(&self) -> FieldElement {
        let enc = *self.0.generator.get_or_init(|| {
            let n = self.order() - 1;
            (1..self.order())
                .find(|&x| self.order_raw(x) == n)
                .expect("multiplicative group is cyclic")
        });
        self.element(enc)
    }

    /// The unique `k` in `[0, |F| - 2]` with `gamma^k = x`, by baby-step giant-step.
    pub fn discrete_log(&self, gamma: &FieldElement, x: &FieldElement) -> Result<u64> {
        if gamma.field != *self || x.field != *self {
            return Err(Error::MixedFields);
        }
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.order() - 1;
        if gamma.is_zero() || self.order_raw(gamma.enc) != n {
            return Err(Error::NotGenerator);
        }
        let m = (n as f64).sqrt().ceil() as u64;
        let m = if m * m < n { m + 1 } else { m };

        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = 1u64;
        for j in 0..m {
            baby.entry(cur).or_insert(j);
            cur = self.mul_raw(cur, gamma.enc);
        }
        let giant = self.inv_raw(self.pow_raw(gamma.enc, m)).expect("generator is nonzero");
        let mut y = x.enc;
        for i in 0..m {
            if let Some(&j) = baby.get(&y) {
                return Ok((i * m + j) % n);
            }
            y = self.mul_raw(y, giant);
        }
        unreachable!("discrete log exists for a generator")
    }
}
