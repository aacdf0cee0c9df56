//! Exact zeta functions, point counts, class numbers and extremality of the
//! diagonal curves `aY^e = bX^e + cZ^e` (`e = l` or `2l`, `l` an odd prime) over
//! finite fields `F_q`, `q = p^{fs}`, where `f = ord_l(p)` is even.

pub mod arith;
pub mod classnum;
pub mod count;
pub mod curve;
pub mod error;
pub mod ff;
pub mod intpoly;
pub mod maximality;
pub mod report;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
