//! Element text format.
//!
//! - prime-field elements: decimal residue (`"3"`);
//! - extension elements: `"poly:[c0,c1,...]"`, coefficients ascending, each in
//!   this same format for the base field;
//! - `"g^k"`: the canonical generator raised to `k` (k may be negative).
//!
//! On input a bare integer is accepted in any field and denotes the image of
//! that integer in the prime subfield.

use super::{Field, FieldElement};
use crate::error::{Error, Result};

impl FieldElement {
    pub fn to_text(&self) -> String {
        match self.field.base() {
            None => self.enc.to_string(),
            Some(base) => {
                let parts: Vec<String> =
                    self.repr().into_iter().map(|c| base.element(c).to_text()).collect();
                format!("poly:[{}]", parts.join(","))
            }
        }
    }
}

impl Field {
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        let err = |why: &str| Error::Parse(text.to_string(), why.to_string());
        if let Some(k) = t.strip_prefix("g^") {
            let k: i64 = k.trim().parse().map_err(|_| err("bad exponent"))?;
            return self.generator().pow(k);
        }
        if let Some(body) = t.strip_prefix("poly:") {
            let base = self.base().ok_or_else(|| err("poly form needs an extension field"))?;
            let inner = body
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| err("expected [..]"))?;
            let coeffs = split_top_level(inner)
                .into_iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| base.parse_element(s))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coeffs(&coeffs);
        }
        let n: i64 = t.parse().map_err(|_| err("expected integer, poly:[..] or g^k"))?;
        Ok(self.from_int(n))
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let f5 = Field::prime(5).unwrap();
        let f25 = Field::extension(&f5, 2).unwrap();
        let f625 = Field::extension(&f25, 2).unwrap();
        assert_eq!(f5.from_int(3).to_text(), "3");
        let x = f25.root().unwrap();
        assert_eq!(x.to_text(), "poly:[0,1]");
        assert_eq!(f625.lift(&x).unwrap().to_text(), "poly:[poly:[0,1],poly:[0,0]]");
    }

    #[test]
    fn parse_forms() {
        let f5 = Field::prime(5).unwrap();
        let f25 = Field::extension(&f5, 2).unwrap();
        let f625 = Field::extension(&f25, 2).unwrap();
        assert_eq!(f25.parse_element("poly:[1,2]").unwrap().repr(), vec![1, 2]);
        assert_eq!(f25.parse_element("poly:[4]").unwrap(), f25.from_int(4));
        assert_eq!(f25.parse_element("1").unwrap(), f25.one());
        assert_eq!(f25.parse_element("-1").unwrap(), f25.from_int(4));
        let g = f25.generator();
        assert_eq!(f25.parse_element("g^2").unwrap(), &g * &g);
        assert_eq!(f25.parse_element("g^-1").unwrap(), g.inv().unwrap());
        let y = f625.parse_element("poly:[poly:[0,1],3]").unwrap();
        assert_eq!(y.repr(), vec![5, 3]);
        assert!(f5.parse_element("poly:[1]").is_err());
        assert!(f25.parse_element("poly:[1,2,3]").is_err());
        assert!(f25.parse_element("abc").is_err());
    }

    #[test]
    fn roundtrip_all_of_f25() {
        let f25 = Field::extension(&Field::prime(5).unwrap(), 2).unwrap();
        for x in f25.elements() {
            assert_eq!(f25.parse_element(&x.to_text()).unwrap(), x);
        }
    }
}
