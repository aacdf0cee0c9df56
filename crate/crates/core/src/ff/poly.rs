//! Dense polynomials over a field, coefficients held as element encodings
//! (ascending degree, no trailing zeros). Only what irreducible-polynomial
//! search needs.

use super::Field;

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn sub(f: &Field, a: &[u64], b: &[u64]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            f.sub_raw(x, y)
        })
        .collect();
    trim(out)
}

fn mul(f: &Field, a: &[u64], b: &[u64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add_raw(out[i + j], f.mul_raw(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo nonzero `m`.
fn rem(f: &Field, a: &[u64], m: &[u64]) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv_raw(m[dm]).expect("nonzero leading coefficient");
    while r.len() > dm {
        let k = r.len() - 1;
        let c = f.mul_raw(r[k], lead_inv);
        for t in 0..=dm {
            r[k - dm + t] = f.sub_raw(r[k - dm + t], f.mul_raw(c, m[t]));
        }
        r = trim(r);
    }
    r
}

fn gcd(f: &Field, a: &[u64], b: &[u64]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    x
}

fn powmod(f: &Field, base: &[u64], mut exp: u64, m: &[u64]) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        exp >>= 1;
        if exp > 0 {
            b = rem(f, &mul(f, &b, &b), m);
        }
    }
    acc
}

/// Ben-Or test: a monic `m` of degree `d` over `F_Q` is irreducible iff
/// `gcd(x^{Q^k} - x, m) = 1` for every `1 <= k <= d/2`.
pub fn is_irreducible(f: &Field, m: &[u64]) -> bool {
    let m = trim(m.to_vec());
    if m.len() < 2 {
        return false;
    }
    let d = m.len() - 1;
    if d == 1 {
        return true;
    }
    if m[0] == 0 {
        return false;
    }
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = powmod(f, &h, f.order(), &m);
        let g = gcd(f, &sub(f, &h, &x), &m);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Least monic irreducible of degree `d`, candidates ordered by the tuple
/// `(c_{d-1}, .., c_0)` with each entry in encoding order.
pub fn least_irreducible(f: &Field, d: usize) -> Poly {
    let q = f.order();
    let mut candidate = vec![0u64; d + 1];
    candidate[d] = 1;
    loop {
        if is_irreducible(f, &candidate) {
            return candidate;
        }
        // increment: c_0 is the least significant digit
        let mut k = 0;
        loop {
            assert!(k < d, "no irreducible polynomial found");
            candidate[k] += 1;
            if candidate[k] < q {
                break;
            }
            candidate[k] = 0;
            k += 1;
        }
    }
}
