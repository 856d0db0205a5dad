//! Cyclotomic polynomials and the identities that drive the certificate
//! construction.
//!
//! `phi_poly` builds Φₙ by Möbius inversion of `X^n − 1 = ∏_{d∣n} Φ_d(X)`:
//! group the factors `(X^d − 1)^{μ(n/d)}` by sign and perform one exact
//! division. `phi_via_division` computes the same polynomial by repeatedly
//! dividing `X^e − 1` by the already-known `Φ_d` for proper divisors `d`;
//! the two routes share no code path, so their agreement is a meaningful
//! cross-check and the division route doubles as the verifier's oracle.
//!
//! The `check_*` functions materialize both sides of a polynomial identity
//! as an [`IdentityWitness`] instead of returning a bare boolean, so a
//! failure is immediately diagnosable.

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::{divisors, is_prime, mobius, prime_exponent};
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("{d} is not a divisor of {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Which identity an [`IdentityWitness`] instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityTag {
    /// Φ_{rp^m}(X) = Φ_{rp}(X^{p^{m−1}}) for p prime, gcd(r,p)=1, m ≥ 1.
    PrimePowerShift,
    /// Φ_{rp}(X)·Φ_r(X) = Φ_r(X^p), the cross-multiplied form of
    /// Φ_{rp} = Φ_r(X^p)/Φ_r(X).
    PrimeQuotient,
    /// Φₙ(X)·Φ_m(X^{p^{a−1}}) = Φ_m(X^{p^a}) with a = ord_p(n) and
    /// m = n/p^a, the cross-multiplied prime-peeling step.
    PrimePowerReduction,
}

impl std::fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            IdentityTag::PrimePowerShift => "prime-power shift",
            IdentityTag::PrimeQuotient => "prime quotient",
            IdentityTag::PrimePowerReduction => "prime-power reduction",
        };
        f.write_str(name)
    }
}

/// Both sides of a claimed polynomial identity, materialized
/// independently. The claim holds iff `lhs == rhs`.
#[derive(Debug, Clone)]
pub struct IdentityWitness {
    pub tag: IdentityTag,
    pub params: Vec<(&'static str, u64)>,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

impl IdentityWitness {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl std::fmt::Display for IdentityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} identity at", self.tag)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        write!(f, ": {}", if self.holds() { "holds" } else { "FAILS" })
    }
}

/// The n-th cyclotomic polynomial via Möbius inversion: all factors
/// `X^d − 1` with `μ(n/d) = +1` multiplied into a numerator, all with
/// `μ(n/d) = −1` into a denominator, then one exact division.
pub fn phi_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "phi_poly requires n >= 1");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &IntPoly::xn_minus_1(d),
            -1 => den = &den * &IntPoly::xn_minus_1(d),
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("grouped cyclotomic division is exact")
}

/// The n-th cyclotomic polynomial by repeated division: for each divisor
/// `e` of `n` in ascending order, `Φ_e = (X^e − 1) / ∏_{d ∣ e, d < e} Φ_d`.
/// Independent of [`phi_poly`] by construction; serves as the oracle in
/// certificate verification.
pub fn phi_via_division(n: u64) -> IntPoly {
    assert!(n >= 1, "phi_via_division requires n >= 1");
    let ds = divisors(n);
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(ds.len());
    for e in ds {
        let mut prod = IntPoly::one();
        for (d, phi) in &table {
            if e % d == 0 {
                prod = &prod * phi;
            }
        }
        let phi_e = IntPoly::xn_minus_1(e)
            .div_exact(&prod)
            .expect("repeated cyclotomic division is exact");
        table.push((e, phi_e));
    }
    table.pop().unwrap().1
}

/// `P_{n,d} = ∑_{k=0}^{d−1} X^{kn/d}`: the polynomial with `d` terms of
/// coefficient 1 at the multiples of `n/d`, degree `n − n/d`.
pub fn p_poly(n: u64, d: u64) -> Result<IntPoly, CycError> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(CycError::NotADivisor { d, n });
    }
    let step = (n / d) as usize;
    let mut coeffs = vec![BigInt::from(0); (d as usize - 1) * step + 1];
    for k in 0..d as usize {
        coeffs[k * step] = BigInt::from(1);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The exact quotient `Q_d = P_{n,d} / Φₙ` for a divisor `d > 1` of `n`;
/// its existence over ℤ is what puts `Φₙ` underneath every `P_{n,d}`.
pub fn q_poly(n: u64, d: u64) -> Result<IntPoly, CycError> {
    if d <= 1 {
        return Err(CycError::BadParameters(format!(
            "q_poly requires d > 1, got d = {d}"
        )));
    }
    let p = p_poly(n, d)?;
    Ok(p
        .div_exact(&phi_poly(n))
        .expect("every P_{n,d} with d > 1 is an exact multiple of the cyclotomic polynomial"))
}

fn require_prime(p: u64) -> Result<(), CycError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(CycError::BadParameters(format!("{p} is not prime")))
    }
}

/// Witness for Φ_{rp^m}(X) = Φ_{rp}(X^{p^{m−1}}): both sides computed
/// independently (left by Möbius inversion at rp^m, right by substitution
/// into the Möbius inversion at rp).
pub fn check_lemma41a(r: u64, p: u64, m: u32) -> Result<IdentityWitness, CycError> {
    require_prime(p)?;
    if r == 0 || r.is_multiple_of(p) {
        return Err(CycError::BadParameters(format!(
            "r = {r} must be positive and coprime to p = {p}"
        )));
    }
    if m == 0 {
        return Err(CycError::BadParameters("m must be >= 1".into()));
    }
    let lhs = phi_poly(r * p.pow(m));
    let rhs = phi_poly(r * p).compose_power(p.pow(m - 1));
    Ok(IdentityWitness {
        tag: IdentityTag::PrimePowerShift,
        params: vec![("r", r), ("p", p), ("m", m as u64)],
        lhs,
        rhs,
    })
}

/// Witness for Φ_{rp}(X)·Φ_r(X) = Φ_r(X^p), the cross-multiplied form of
/// Φ_{rp} = Φ_r(X^p)/Φ_r(X), avoiding any reliance on division.
pub fn check_lemma41b(r: u64, p: u64) -> Result<IdentityWitness, CycError> {
    require_prime(p)?;
    if r == 0 || r.is_multiple_of(p) {
        return Err(CycError::BadParameters(format!(
            "r = {r} must be positive and coprime to p = {p}"
        )));
    }
    let phi_r = phi_poly(r);
    let lhs = &phi_poly(r * p) * &phi_r;
    let rhs = phi_r.compose_power(p);
    Ok(IdentityWitness {
        tag: IdentityTag::PrimeQuotient,
        params: vec![("r", r), ("p", p)],
        lhs,
        rhs,
    })
}

/// Witness for Φₙ(X)·Φ_m(X^{p^{a−1}}) = Φ_m(X^{p^a}) where a = ord_p(n)
/// and m = n/p^a, the cross-multiplied prime-peeling identity.
pub fn check_prop42(n: u64, p: u64) -> Result<IdentityWitness, CycError> {
    require_prime(p)?;
    if n == 0 || !n.is_multiple_of(p) {
        return Err(CycError::BadParameters(format!(
            "p = {p} must divide n = {n}"
        )));
    }
    let a = prime_exponent(n, p);
    let m = n / p.pow(a);
    let phi_m = phi_poly(m);
    let lhs = &phi_poly(n) * &phi_m.compose_power(p.pow(a - 1));
    let rhs = phi_m.compose_power(p.pow(a));
    Ok(IdentityWitness {
        tag: IdentityTag::PrimePowerReduction,
        params: vec![("n", n), ("p", p), ("a", a as u64)],
        lhs,
        rhs,
    })
}

/// The exact integer quotient
/// `(X^{n/p} − 1) / ((X^{n/pq} − 1)·Φ_{n/p^a}(X^{p^{a−1}}))`
/// with a = ord_p(n), for distinct primes p, q dividing n. Integrality of
/// this quotient is what makes the certificate cofactors integral;
/// re-multiplication reproduces `X^{n/p} − 1`.
pub fn prop43_witness(n: u64, p: u64, q: u64) -> Result<IntPoly, CycError> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(CycError::BadParameters(format!(
            "primes must be distinct, got p = q = {p}"
        )));
    }
    if n == 0 || !n.is_multiple_of(p) || !n.is_multiple_of(q) {
        return Err(CycError::BadParameters(format!(
            "both p = {p} and q = {q} must divide n = {n}"
        )));
    }
    let a = prime_exponent(n, p);
    let m = n / p.pow(a);
    let den = &IntPoly::xn_minus_1(n / (p * q)) * &phi_poly(m).compose_power(p.pow(a - 1));
    Ok(IntPoly::xn_minus_1(n / p)
        .div_exact(&den)
        .expect("prime-peeling quotient is integral"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn phi_poly_small_values() {
        assert_eq!(phi_poly(1), p(&[-1, 1]));
        assert_eq!(phi_poly(2), p(&[1, 1]));
        assert_eq!(phi_poly(3), p(&[1, 1, 1]));
        assert_eq!(phi_poly(4), p(&[1, 0, 1]));
        assert_eq!(phi_poly(6), p(&[1, -1, 1]));
        assert_eq!(phi_poly(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_coefficient_minus_2() {
        // the smallest n whose cyclotomic polynomial has a coefficient
        // outside {−1, 0, 1}; it appears at X^7
        let phi = phi_poly(105);
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), BigInt::from(-2));
        assert_eq!(phi, phi_via_division(105));
    }

    #[test]
    fn phi_routes_agree_on_a_small_sweep() {
        for n in 1..=60 {
            assert_eq!(phi_poly(n), phi_via_division(n), "n = {n}");
        }
    }

    #[test]
    fn phi_degree_is_euler_phi() {
        for n in 1..=120 {
            assert_eq!(phi_poly(n).degree(), Some(euler_phi(n) as usize), "n = {n}");
        }
    }

    #[test]
    fn phi_is_monic_with_known_constant_term() {
        assert_eq!(phi_poly(1).coeff(0), BigInt::from(-1));
        for n in 2..=120u64 {
            let phi = phi_poly(n);
            assert!(phi.is_monic(), "n = {n}");
            assert_eq!(phi.coeff(0), BigInt::from(1), "n = {n}");
        }
    }

    #[test]
    fn cyclotomic_product_over_divisors_is_xn_minus_1() {
        for n in 1..=80u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = &prod * &phi_poly(d);
            }
            assert_eq!(prod, IntPoly::xn_minus_1(n), "n = {n}");
        }
    }

    #[test]
    fn p_poly_small_values() {
        assert_eq!(p_poly(6, 2).unwrap(), p(&[1, 0, 0, 1]));
        assert_eq!(p_poly(6, 3).unwrap(), p(&[1, 0, 1, 0, 1]));
        assert_eq!(p_poly(6, 6).unwrap(), p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(p_poly(6, 1).unwrap(), IntPoly::one());
        assert_eq!(p_poly(12, 1).unwrap(), IntPoly::one());
        assert_eq!(
            p_poly(6, 4),
            Err(CycError::NotADivisor { d: 4, n: 6 })
        );
    }

    #[test]
    fn p_poly_matches_its_quotient_form() {
        // ∑_{k<d} X^{kn/d} = (X^n − 1)/(X^{n/d} − 1)
        for n in 1..=40u64 {
            for d in divisors(n) {
                let direct = p_poly(n, d).unwrap();
                let quot = IntPoly::xn_minus_1(n)
                    .div_exact(&IntPoly::xn_minus_1(n / d))
                    .unwrap();
                assert_eq!(direct, quot, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn p_poly_shape() {
        for n in [6u64, 12, 30] {
            for d in divisors(n) {
                let poly = p_poly(n, d).unwrap();
                assert_eq!(poly.degree(), Some((n - n / d) as usize));
                let terms = poly.coeffs().iter().filter(|c| !c.is_zero()).count();
                assert_eq!(terms, d as usize);
            }
        }
    }

    #[test]
    fn q_poly_small_values() {
        // (X⁶−1)/((X−1)·Φ₆) expands to X³+2X²+2X+1
        assert_eq!(q_poly(6, 6).unwrap(), p(&[1, 2, 2, 1]));
        assert_eq!(q_poly(4, 2).unwrap(), IntPoly::one());
        for prime in [2u64, 3, 5, 7] {
            assert_eq!(q_poly(prime, prime).unwrap(), IntPoly::one(), "p = {prime}");
        }
        assert!(matches!(q_poly(6, 1), Err(CycError::BadParameters(_))));
        assert!(matches!(q_poly(6, 4), Err(CycError::NotADivisor { .. })));
    }

    #[test]
    fn q_poly_remultiplies_to_p_poly() {
        for n in 2..=40u64 {
            let phi = phi_poly(n);
            for d in divisors(n) {
                if d > 1 {
                    let q = q_poly(n, d).unwrap();
                    assert_eq!(&q * &phi, p_poly(n, d).unwrap(), "n = {n}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn p_poly_vanishes_mod_phi_for_d_above_1() {
        for n in 2..=40u64 {
            let phi = phi_poly(n);
            for d in divisors(n) {
                if d > 1 {
                    let rem = p_poly(n, d).unwrap().rem_monic(&phi).unwrap();
                    assert!(rem.is_zero(), "n = {n}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn prime_power_shift_examples() {
        let w = check_lemma41a(3, 2, 2).unwrap();
        assert!(w.holds());
        assert_eq!(w.lhs, p(&[1, 0, -1, 0, 1])); // Φ₁₂ = X⁴−X²+1

        let w = check_lemma41a(1, 2, 1).unwrap();
        assert!(w.holds());
        assert_eq!(w.lhs, w.rhs);

        let w = check_lemma41a(5, 2, 3).unwrap(); // Φ₄₀ = Φ₁₀(X⁴)
        assert!(w.holds());

        assert!(check_lemma41a(2, 4, 1).is_err()); // p not prime
        assert!(check_lemma41a(4, 2, 1).is_err()); // p divides r
        assert!(check_lemma41a(3, 2, 0).is_err()); // m too small
    }

    #[test]
    fn prime_quotient_examples() {
        let w = check_lemma41b(1, 2).unwrap(); // Φ₂Φ₁ = X²−1
        assert!(w.holds());
        assert_eq!(w.lhs, p(&[-1, 0, 1]));

        let w = check_lemma41b(2, 3).unwrap(); // Φ₆Φ₂ = X³+1
        assert!(w.holds());
        assert_eq!(w.lhs, p(&[1, 0, 0, 1]));

        let w = check_lemma41b(6, 5).unwrap(); // Φ₃₀Φ₆ = Φ₆(X⁵)
        assert!(w.holds());

        assert!(check_lemma41b(6, 3).is_err());
    }

    #[test]
    fn prime_power_reduction_examples() {
        let w = check_prop42(4, 2).unwrap(); // (X²+1)(X²−1) = X⁴−1
        assert!(w.holds());
        assert_eq!(w.rhs, IntPoly::xn_minus_1(4));

        let w = check_prop42(12, 2).unwrap(); // Φ₁₂·Φ₃(X²) = Φ₃(X⁴)
        assert!(w.holds());

        let w = check_prop42(18, 3).unwrap(); // Φ₁₈·Φ₂(X³) = Φ₂(X⁹)
        assert!(w.holds());

        assert!(check_prop42(9, 2).is_err());
    }

    #[test]
    fn prime_peeling_quotient_examples() {
        assert_eq!(prop43_witness(6, 3, 2).unwrap(), IntPoly::one());
        assert_eq!(prop43_witness(12, 3, 2).unwrap(), IntPoly::one());
        // with only two prime factors both orders collapse to 1: the
        // denominator (X^{n/pq}−1)·Φ_m(X^{p^{a−1}}) telescopes to X^{n/p}−1
        assert_eq!(prop43_witness(36, 3, 2).unwrap(), IntPoly::one());
        assert_eq!(prop43_witness(36, 2, 3).unwrap(), IntPoly::one());
        // three prime factors make it nontrivial:
        // (X⁶−1)/((X²−1)·Φ₆(X)) = X²+X+1
        assert_eq!(prop43_witness(30, 5, 3).unwrap(), p(&[1, 1, 1]));

        assert!(prop43_witness(6, 3, 3).is_err()); // p = q
        assert!(prop43_witness(6, 5, 2).is_err()); // p does not divide n
    }

    #[test]
    fn prime_peeling_quotient_remultiplies() {
        for (n, p_, q_) in [(6u64, 3u64, 2u64), (12, 2, 3), (30, 5, 3), (30, 3, 5), (60, 5, 2)] {
            let w = prop43_witness(n, p_, q_).unwrap();
            let a = prime_exponent(n, p_);
            let m = n / p_.pow(a);
            let den =
                &IntPoly::xn_minus_1(n / (p_ * q_)) * &phi_poly(m).compose_power(p_.pow(a - 1));
            assert_eq!(&w * &den, IntPoly::xn_minus_1(n / p_), "n={n} p={p_} q={q_}");
        }
    }

    #[test]
    fn witness_display_names_parameters() {
        let w = check_lemma41b(2, 3).unwrap();
        let line = w.to_string();
        assert!(line.contains("r=2"));
        assert!(line.contains("p=3"));
        assert!(line.contains("holds"));
    }
}
