//! Small machine-integer helpers: primality, trial-division factoring, modular powers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Least k >= 1 with p^k = 1 (mod m), by direct exponentiation. None when gcd(p, m) != 1.
pub fn order_mod(p: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let p = p % m;
    if num_integer::gcd(p, m) != 1 {
        return None;
    }
    let mut acc = p;
    let mut k = 1;
    while acc != 1 {
        acc = ((acc as u128 * p as u128) % m as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(factorize(24), vec![(2, 3), (3, 1)]);
        assert_eq!(factorize(531440), vec![(2, 4), (5, 1), (7, 1), (13, 1), (73, 1)]);
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn orders() {
        assert_eq!(order_mod(5, 3), Some(2));
        assert_eq!(order_mod(2, 5), Some(4));
        assert_eq!(order_mod(7, 3), Some(1));
        assert_eq!(order_mod(3, 3), None);
        assert_eq!(pow_mod(3, 6, 7), 1);
    }

    #[test]
    fn squares() {
        assert_eq!(exact_sqrt(25), Some(5));
        assert_eq!(exact_sqrt(24), None);
        assert_eq!(exact_sqrt(0), Some(0));
    }
}
