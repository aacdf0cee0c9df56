use diagzeta::arith::factorize;
use diagzeta::ff::{Field, FieldElement};
use proptest::prelude::*;

fn small_fields() -> Vec<Field> {
    let mut out = Vec::new();
    for p in [2, 3, 5, 7, 11, 13, 23] {
        out.push(Field::prime(p).unwrap());
    }
    for (p, d) in [(2, 2), (2, 3), (2, 4), (2, 6), (2, 8), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (5, 4), (7, 2)] {
        out.push(Field::extension(&Field::prime(p).unwrap(), d).unwrap());
    }
    let f4 = Field::extension(&Field::prime(2).unwrap(), 2).unwrap();
    let f25 = Field::extension(&Field::prime(5).unwrap(), 2).unwrap();
    out.push(Field::extension(&f4, 2).unwrap());
    out.push(Field::extension(&f4, 3).unwrap());
    out.push(Field::extension(&f25, 2).unwrap());
    out
}

/// Remainder of `f` by monic `g`, coefficient vectors ascending.
fn poly_rem(f: &[FieldElement], g: &[FieldElement]) -> Vec<FieldElement> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r.pop().unwrap();
        let shift = r.len() - dg;
        for k in 0..dg {
            r[shift + k] = &r[shift + k] - &(&lead * &g[k]);
        }
    }
    r
}

/// Monic polynomial of degree `d` whose lower coefficients, read `c_{d-1}..c_0`,
/// are the base-`|F|` digits of `k`.
fn monic_from_index(base: &Field, d: usize, mut k: u64) -> Vec<FieldElement> {
    let mut c = vec![base.zero(); d + 1];
    c[d] = base.one();
    for slot in c.iter_mut().take(d) {
        *slot = base.element(k % base.order());
        k /= base.order();
    }
    c
}

/// Irreducible iff no monic factor of degree `1..=d/2`, by trial division.
fn irreducible_by_trial_division(base: &Field, f: &[FieldElement]) -> bool {
    let d = f.len() - 1;
    for k in 1..=d / 2 {
        for idx in 0..base.order().pow(k as u32) {
            let g = monic_from_index(base, k, idx);
            if poly_rem(f, &g).iter().all(FieldElement::is_zero) {
                return false;
            }
        }
    }
    true
}

#[test]
fn inverse_of_every_nonzero_element() {
    for f in small_fields() {
        for x in f.elements().filter(|x| !x.is_zero()) {
            assert!((&x * &x.inv().unwrap()).is_one(), "{f:?} {x}");
        }
    }
}

#[test]
fn modulus_is_least_irreducible() {
    for f in small_fields().into_iter().filter(|f| !f.is_prime_field()) {
        let base = f.base().unwrap().clone();
        let m = f.modulus().unwrap();
        let d = m.len() - 1;
        assert!(irreducible_by_trial_division(&base, &m), "{f:?}");
        // lexicographic order on (c_{d-1}, ..., c_0) is numeric order of the index
        let first = (0..base.order().pow(d as u32))
            .map(|k| monic_from_index(&base, d, k))
            .find(|g| irreducible_by_trial_division(&base, g))
            .unwrap();
        assert_eq!(first, m, "{f:?}");
    }
}

#[test]
fn generator_has_full_order_and_is_first() {
    for f in small_fields() {
        let g = f.generator();
        let order = |x: &FieldElement| {
            let mut y = x.clone();
            let mut k = 1;
            while !y.is_one() {
                y = &y * x;
                k += 1;
            }
            k
        };
        assert_eq!(order(&g), f.order() - 1, "{f:?}");
        for x in f.elements().skip(1).take_while(|x| *x != g) {
            assert!(order(&x) < f.order() - 1);
        }
        for (r, _) in factorize(f.order() - 1) {
            assert!(!g.pow(((f.order() - 1) / r) as i64).unwrap().is_one());
        }
    }
}

#[test]
fn discrete_log_inverts_pow() {
    for f in small_fields() {
        let g = f.generator();
        let mut x = f.one();
        for k in 0..f.order() - 1 {
            assert_eq!(f.discrete_log(&g, &x).unwrap(), k, "{f:?}");
            x = &x * &g;
        }
    }
}

#[test]
fn lift_is_a_homomorphism() {
    for f in small_fields().into_iter().filter(|f| !f.is_prime_field() && f.base().unwrap().order() <= 25) {
        let base = f.base().unwrap().clone();
        for x in base.elements() {
            for y in base.elements() {
                let (lx, ly) = (f.lift(&x).unwrap(), f.lift(&y).unwrap());
                assert_eq!(f.lift(&(&x + &y)).unwrap(), &lx + &ly);
                assert_eq!(f.lift(&(&x * &y)).unwrap(), &lx * &ly);
            }
        }
    }
}

#[test]
fn root_satisfies_modulus() {
    for f in small_fields().into_iter().filter(|f| !f.is_prime_field()) {
        let x = f.root().unwrap();
        let mut acc = f.zero();
        for c in f.modulus().unwrap().iter().rev() {
            acc = &(&acc * &x) + &f.lift(c).unwrap();
        }
        assert!(acc.is_zero(), "{f:?}");
    }
}

#[test]
fn frobenius_is_additive() {
    for f in small_fields() {
        let p = f.characteristic() as i64;
        for x in f.elements().step_by(7) {
            for y in f.elements().step_by(11) {
                assert_eq!((&x + &y).pow(p).unwrap(), &x.pow(p).unwrap() + &y.pow(p).unwrap());
            }
        }
    }
}

#[test]
fn text_roundtrip() {
    for f in small_fields() {
        for x in f.elements() {
            assert_eq!(f.parse_element(&x.to_text()).unwrap(), x);
        }
    }
}

proptest! {
    #[test]
    fn field_axioms_f625(a in 0u64..625, b in 0u64..625, c in 0u64..625) {
        let f25 = Field::extension(&Field::prime(5).unwrap(), 2).unwrap();
        let f = Field::extension(&f25, 2).unwrap();
        let (a, b, c) = (f.element(a), f.element(b), f.element(c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn pow_adds_exponents(x in 1u64..256, m in -600i64..600, n in -600i64..600) {
        let f = Field::extension(&Field::prime(2).unwrap(), 8).unwrap();
        let x = f.element(x);
        prop_assert_eq!(x.pow(m + n).unwrap(), &x.pow(m).unwrap() * &x.pow(n).unwrap());
    }
}
