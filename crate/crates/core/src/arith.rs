//! Small exact number-theory helpers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// True for `p^k` with `p` prime and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}

pub fn is_prime(n: u64) -> bool {
    matches!(factorize(n).as_slice(), [(_, 1)])
}

/// The Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius(0) is undefined");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        let got: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn binomial_row() {
        let row: Vec<i128> = (0..=6).map(|k| binomial(6, k)).collect();
        assert_eq!(row, vec![1, 6, 15, 20, 15, 6, 1]);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn prime_powers_and_squarefree() {
        assert!(is_prime_power(8));
        assert!(is_prime_power(7));
        assert!(!is_prime_power(6));
        assert!(!is_prime_power(1));
        assert!(is_squarefree(6));
        assert!(!is_squarefree(4));
        assert!(is_squarefree(1));
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }

    #[test]
    fn lcm_gcd() {
        assert_eq!(lcm(6, 4), 12);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(1, 7), 7);
    }
}
