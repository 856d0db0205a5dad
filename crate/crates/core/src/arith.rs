//! Elementary number theory over `u64`: factorization, divisor
//! enumeration, the Möbius and Euler phi functions.
//!
//! Everything here runs on trial division; the crate's working range
//! (n in the low thousands) makes anything fancier pointless.

/// Prime factorization as `(prime, exponent)` pairs in increasing prime
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of distinct prime factors.
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    /// The distinct primes in increasing order.
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    /// True when every exponent is 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

/// Factors `n >= 1` by trial division. `factorize(1)` has no factors.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { factors }
}

/// All divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n).factors {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Möbius function: 0 unless `n` is squarefree, else `(−1)^{number of
/// prime factors}`.
pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if !f.is_squarefree() {
        return 0;
    }
    if f.num_primes().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize(n).factors {
        out = out / p * (p - 1);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).num_primes() == 1 && factorize(n).factors[0].1 == 1
}

/// Exponent of the prime `p` in `n`.
pub fn prime_exponent(n: u64, p: u64) -> u32 {
    assert!(p >= 2 && n >= 1);
    let mut e = 0u32;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1).factors, vec![]);
        assert_eq!(factorize(2).factors, vec![(2, 1)]);
        assert_eq!(factorize(12).factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(360).factors, vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97).factors, vec![(97, 1)]);
        assert_eq!(factorize(2310).factors, vec![(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)]);
    }

    #[test]
    fn factorization_reconstructs_n() {
        for n in 1..=2000u64 {
            let prod: u64 = factorize(n)
                .factors
                .iter()
                .map(|&(p, e)| p.pow(e))
                .product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn divisors_basics() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(97), vec![1, 97]);
    }

    #[test]
    fn divisors_divide_and_are_complete() {
        for n in 1..=500u64 {
            let ds = divisors(n);
            assert!(ds.iter().all(|d| n % d == 0));
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(ds, brute);
        }
    }

    #[test]
    fn mobius_basics() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(3), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(105), -1);
        assert_eq!(mobius(210), 1);
    }

    #[test]
    fn mobius_sum_over_divisors_is_zero_for_n_above_1() {
        // sum_{d | n} mu(d) = [n = 1]
        assert_eq!(mobius(1) as i64, 1);
        for n in 2..=500u64 {
            let s: i64 = divisors(n).iter().map(|&d| mobius(d) as i64).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn euler_phi_basics() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(105), 48);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn euler_phi_counts_coprime_residues() {
        for n in 1..=300u64 {
            let count = (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), count, "n = {n}");
        }
    }

    #[test]
    fn euler_phi_divisor_sum_is_n() {
        // sum_{d | n} phi(d) = n
        for n in 1..=500u64 {
            let s: u64 = divisors(n).iter().map(|&d| euler_phi(d)).sum();
            assert_eq!(s, n, "n = {n}");
        }
    }

    #[test]
    fn is_prime_basics() {
        let primes: Vec<u64> = (0..=50).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    }

    #[test]
    fn prime_exponent_basics() {
        assert_eq!(prime_exponent(360, 2), 3);
        assert_eq!(prime_exponent(360, 3), 2);
        assert_eq!(prime_exponent(360, 7), 0);
        assert_eq!(prime_exponent(1, 5), 0);
    }
}
