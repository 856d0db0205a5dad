//! Constructive certificates that Φₙ lies in the ideal generated by the
//! prime-indexed sums `P_{n,p} = (X^n − 1)/(X^{n/p} − 1)`.
//!
//! [`decompose`] builds cofactors h₁…h_t with
//! `∑ P_{n,p_i}·h_i = Φₙ` by induction on the number of distinct prime
//! factors. A prime power needs a single cofactor 1. Otherwise the
//! largest prime p_k is peeled off: the certificate for m = n/p_k^{a_k}
//! is pulled back along X ↦ X^{p_k^{a_k}}, each pulled-back cofactor F_i
//! is scaled by the prime-peeling quotient into g_i, and a Bézout pair
//! (a_i, b_i) for the exponents (n/p_i, n/p_k) splits each g_i term
//! between h_i = b_i·g_i and the new cofactor h_k = ∑ a_i·g_i.
//!
//! [`verify_certificate`] re-checks the identity with independent
//! ingredients: each `P_{n,p}` rebuilt from its defining sum and Φₙ from
//! the repeated-division route: multiplication and addition only, a
//! checker strictly weaker than the builder.

use thiserror::Error;

use crate::arith::{divisors, factorize};
use crate::bezout::{bezout_xn, BezoutCertificate};
use crate::cyclotomic::{p_poly, phi_poly, phi_via_division, prop43_witness, q_poly};
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

/// Cofactors witnessing `∑ P_{n,p_i}·h_i = Φₙ`. The cofactors are not
/// unique; only the identity is ever asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposeCertificate {
    pub n: u64,
    /// The distinct prime divisors of n, ascending.
    pub primes: Vec<u64>,
    /// h_i aligned with `primes`.
    pub cofactors: Vec<IntPoly>,
    /// Φₙ, included so the certificate is self-contained.
    pub phi: IntPoly,
}

/// One peeling step of the recursion, retained for diagnostics.
#[derive(Debug, Clone)]
pub struct DecomposeLevel {
    /// The modulus at this level.
    pub n: u64,
    /// The prime p_k peeled at this level (the largest).
    pub peeled_prime: u64,
    /// a_k, its exponent in n.
    pub peeled_exponent: u32,
    /// m = n/p_k^{a_k}, the argument of the recursive call.
    pub reduced: u64,
    /// F_i = f_i(X^{p_k^{a_k}}), the pulled-back recursive cofactors.
    pub substituted: Vec<IntPoly>,
    /// The prime-peeling quotients w_i with g_i = w_i·F_i.
    pub peel_quotients: Vec<IntPoly>,
    /// g_i, aligned with the first k−1 primes.
    pub g: Vec<IntPoly>,
    /// Bézout certificates for the exponent pairs (n/p_i, n/p_k).
    pub bezout: Vec<BezoutCertificate>,
}

/// The recursion levels, outermost first. Prime powers produce no level.
#[derive(Debug, Clone, Default)]
pub struct DecomposeTrace {
    pub levels: Vec<DecomposeLevel>,
}

/// Outcome of independently re-checking a [`DecomposeCertificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub n: u64,
    /// The phi field matches the repeated-division recomputation.
    pub phi_ok: bool,
    /// `∑ P_{n,p_i}·h_i` matches that recomputation coefficientwise.
    pub identity_ok: bool,
    pub phi_mismatch: Option<usize>,
    pub identity_mismatch: Option<usize>,
}

impl CertificateReport {
    pub fn pass(&self) -> bool {
        self.phi_ok && self.identity_ok
    }
}

impl std::fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass() {
            return write!(f, "certificate n={}: pass", self.n);
        }
        write!(f, "certificate n={}: FAIL (", self.n)?;
        if !self.phi_ok {
            write!(f, "stored phi differs from recomputation")?;
            if let Some(i) = self.phi_mismatch {
                write!(f, " at coefficient {i}")?;
            }
            if !self.identity_ok {
                write!(f, "; ")?;
            }
        }
        if !self.identity_ok {
            write!(f, "cofactor identity fails")?;
            if let Some(i) = self.identity_mismatch {
                write!(f, " at coefficient {i}")?;
            }
        }
        write!(f, ")")
    }
}

fn reborrow<'a>(
    trace: &'a mut Option<&mut Vec<DecomposeLevel>>,
) -> Option<&'a mut Vec<DecomposeLevel>> {
    trace.as_mut().map(|t| &mut **t)
}

/// Builds the cofactors for n; when `trace` is given, pushes one level
/// per peeling step, innermost first.
fn build_cofactors(n: u64, mut trace: Option<&mut Vec<DecomposeLevel>>) -> Vec<IntPoly> {
    let fact = factorize(n);
    let primes = fact.primes();
    let k = primes.len();
    if k == 1 {
        // (X^{p^a} − 1)/(X^{p^{a−1}} − 1) is already the cyclotomic
        // polynomial of n, so a single cofactor 1 suffices.
        return vec![IntPoly::one()];
    }

    let pk = primes[k - 1];
    let ak = fact.factors[k - 1].1;
    let pk_pow = pk.pow(ak);
    let m = n / pk_pow;

    let recursive = build_cofactors(m, reborrow(&mut trace));

    let substituted: Vec<IntPoly> = recursive
        .iter()
        .map(|f| f.compose_power(pk_pow))
        .collect();

    let mut peel_quotients = Vec::with_capacity(k - 1);
    let mut g = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let w = prop43_witness(n, pk, primes[i])
            .expect("peeling parameters are valid by construction");
        g.push(&w * &substituted[i]);
        peel_quotients.push(w);
    }

    let mut cofactors = Vec::with_capacity(k);
    let mut last = IntPoly::zero();
    let mut bezout = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let cert = bezout_xn(n / primes[i], n / pk);
        cofactors.push(&cert.coeff_b * &g[i]);
        last = &last + &(&cert.coeff_a * &g[i]);
        bezout.push(cert);
    }
    cofactors.push(last);

    if let Some(levels) = reborrow(&mut trace) {
        levels.push(DecomposeLevel {
            n,
            peeled_prime: pk,
            peeled_exponent: ak,
            reduced: m,
            substituted,
            peel_quotients,
            g,
            bezout,
        });
    }
    cofactors
}

fn check_domain(n: u64) -> Result<(), DecomposeError> {
    if n < 2 {
        Err(DecomposeError::BadInput(format!(
            "decomposition is defined for n >= 2, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Builds the certificate for n ≥ 2.
pub fn decompose(n: u64) -> Result<DecomposeCertificate, DecomposeError> {
    check_domain(n)?;
    let cofactors = build_cofactors(n, None);
    Ok(DecomposeCertificate {
        n,
        primes: factorize(n).primes(),
        cofactors,
        phi: phi_poly(n),
    })
}

/// Like [`decompose`], additionally materializing the per-level trace.
pub fn decompose_with_trace(
    n: u64,
) -> Result<(DecomposeCertificate, DecomposeTrace), DecomposeError> {
    check_domain(n)?;
    let mut levels = Vec::new();
    let cofactors = build_cofactors(n, Some(&mut levels));
    levels.reverse();
    Ok((
        DecomposeCertificate {
            n,
            primes: factorize(n).primes(),
            cofactors,
            phi: phi_poly(n),
        },
        DecomposeTrace { levels },
    ))
}

/// Independently re-checks a certificate: structure, then the stored phi
/// against the repeated-division recomputation, then the cofactor
/// identity `∑ P_{n,p_i}·h_i` against the same recomputation. The
/// identity side uses only polynomial sums and products.
pub fn verify_certificate(
    cert: &DecomposeCertificate,
) -> Result<CertificateReport, DecomposeError> {
    if cert.n < 2 {
        return Err(DecomposeError::MalformedCertificate(format!(
            "n = {} is below 2",
            cert.n
        )));
    }
    let expected_primes = factorize(cert.n).primes();
    if cert.primes != expected_primes {
        return Err(DecomposeError::MalformedCertificate(format!(
            "primes {:?} are not the prime divisors of {}",
            cert.primes, cert.n
        )));
    }
    if cert.cofactors.len() != cert.primes.len() {
        return Err(DecomposeError::MalformedCertificate(format!(
            "{} cofactors for {} primes",
            cert.cofactors.len(),
            cert.primes.len()
        )));
    }

    let oracle = phi_via_division(cert.n);
    let phi_mismatch = cert.phi.first_mismatch(&oracle);

    let mut sum = IntPoly::zero();
    for (p, h) in cert.primes.iter().zip(&cert.cofactors) {
        let gen = p_poly(cert.n, *p).expect("primes divide n after the structural check");
        sum = &sum + &(&gen * h);
    }
    let identity_mismatch = sum.first_mismatch(&oracle);

    Ok(CertificateReport {
        n: cert.n,
        phi_ok: phi_mismatch.is_none(),
        identity_ok: identity_mismatch.is_none(),
        phi_mismatch,
        identity_mismatch,
    })
}

/// Composite check of the ideal equality at one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: u64,
    /// Per divisor d > 1 of n: the quotient `P_{n,d}/Φₙ` exists and
    /// re-multiplies to `P_{n,d}`.
    pub forward: Vec<(u64, bool)>,
    /// The certificate for the reverse inclusion, re-verified.
    pub certificate: CertificateReport,
    /// Φₙ divides X^n − 1 exactly.
    pub phi_divides_xn: bool,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.forward.iter().all(|&(_, ok)| ok)
            && self.certificate.pass()
            && self.phi_divides_xn
    }
}

impl std::fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let forward_ok = self.forward.iter().filter(|&&(_, ok)| ok).count();
        write!(
            f,
            "n={}: {} ({} of {} divisors divisible, certificate {}, X^n-1 divisibility {})",
            self.n,
            if self.pass() { "pass" } else { "FAIL" },
            forward_ok,
            self.forward.len(),
            if self.certificate.pass() { "ok" } else { "bad" },
            ok_str(self.phi_divides_xn),
        )
    }
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "bad"
    }
}

/// Checks the full ideal equality `⟨P_{n,d} : d > 1, d ∣ n⟩ = ⟨Φₙ⟩` at
/// one n: every generator is an exact multiple of Φₙ (forward), the
/// certificate writes Φₙ as a combination of prime-indexed generators
/// (reverse), and Φₙ divides X^n − 1 so the equality descends to
/// ℤ[X]/⟨X^n − 1⟩.
pub fn theorem_check(n: u64) -> Result<TheoremReport, DecomposeError> {
    check_domain(n)?;
    let phi = phi_poly(n);

    let mut forward = Vec::new();
    for d in divisors(n) {
        if d <= 1 {
            continue;
        }
        let q = q_poly(n, d).expect("d ranges over divisors above 1");
        let ok = &q * &phi == p_poly(n, d).expect("d divides n");
        forward.push((d, ok));
    }

    let certificate = verify_certificate(&decompose(n)?)?;

    let phi_divides_xn = IntPoly::xn_minus_1(n)
        .div_exact(&phi)
        .map(|q| &q * &phi == IntPoly::xn_minus_1(n))
        .unwrap_or(false);

    Ok(TheoremReport {
        n,
        forward,
        certificate,
        phi_divides_xn,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime_exponent;
    use crate::bezout::verify_bezout;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn identity_sum(cert: &DecomposeCertificate) -> IntPoly {
        let mut sum = IntPoly::zero();
        for (prime, h) in cert.primes.iter().zip(&cert.cofactors) {
            sum = &sum + &(&p_poly(cert.n, *prime).unwrap() * h);
        }
        sum
    }

    #[test]
    fn prime_power_case_needs_one_trivial_cofactor() {
        let cert = decompose(8).unwrap();
        assert_eq!(cert.primes, vec![2]);
        assert_eq!(cert.cofactors, vec![IntPoly::one()]);
        assert_eq!(cert.phi, p(&[1, 0, 0, 0, 1])); // Φ₈ = X⁴+1
        assert!(verify_certificate(&cert).unwrap().pass());
    }

    #[test]
    fn two_prime_case_satisfies_the_identity() {
        // (X³+1)·h₁ + (X⁴+X²+1)·h₂ = X²−X+1; the cofactors themselves
        // are not pinned, only the identity
        let cert = decompose(6).unwrap();
        assert_eq!(cert.primes, vec![2, 3]);
        assert_eq!(cert.phi, p(&[1, -1, 1]));
        assert_eq!(identity_sum(&cert), cert.phi);
        assert!(verify_certificate(&cert).unwrap().pass());
    }

    #[test]
    fn hand_built_alternative_cofactors_also_verify() {
        // h₁ = −X, h₂ = 1 is another valid pair for n = 6
        let cert = DecomposeCertificate {
            n: 6,
            primes: vec![2, 3],
            cofactors: vec![p(&[0, -1]), IntPoly::one()],
            phi: p(&[1, -1, 1]),
        };
        assert!(verify_certificate(&cert).unwrap().pass());
    }

    #[test]
    fn certificates_verify_on_a_small_sweep() {
        for n in 2..=80 {
            let cert = decompose(n).unwrap();
            let report = verify_certificate(&cert).unwrap();
            assert!(report.pass(), "n = {n}: {report}");
        }
    }

    #[test]
    fn rejects_n_below_2() {
        assert!(matches!(decompose(0), Err(DecomposeError::BadInput(_))));
        assert!(matches!(decompose(1), Err(DecomposeError::BadInput(_))));
        assert!(matches!(theorem_check(1), Err(DecomposeError::BadInput(_))));
    }

    #[test]
    fn perturbed_cofactor_fails_verification() {
        let mut cert = decompose(12).unwrap();
        let mut coeffs = cert.cofactors[0].coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(BigInt::from(1));
        } else {
            coeffs[0] += 1;
        }
        cert.cofactors[0] = IntPoly::from_coeffs(coeffs);
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.identity_ok);
        assert!(report.identity_mismatch.is_some());
        assert!(report.phi_ok);
    }

    #[test]
    fn wrong_phi_field_fails_verification() {
        let mut cert = decompose(12).unwrap();
        cert.phi = phi_poly(6);
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.phi_ok);
        assert!(report.identity_ok);
        assert!(!report.pass());
    }

    #[test]
    fn structural_damage_is_malformed_not_failed() {
        let good = decompose(12).unwrap();

        let mut wrong_primes = good.clone();
        wrong_primes.primes = vec![2, 5];
        assert!(matches!(
            verify_certificate(&wrong_primes),
            Err(DecomposeError::MalformedCertificate(_))
        ));

        let mut missing_cofactor = good.clone();
        missing_cofactor.cofactors.pop();
        assert!(matches!(
            verify_certificate(&missing_cofactor),
            Err(DecomposeError::MalformedCertificate(_))
        ));

        let mut unsorted = good;
        unsorted.primes = vec![3, 2];
        assert!(matches!(
            verify_certificate(&unsorted),
            Err(DecomposeError::MalformedCertificate(_))
        ));
    }

    #[test]
    fn theorem_check_smallest_case() {
        let report = theorem_check(2).unwrap();
        assert_eq!(report.forward, vec![(2, true)]);
        assert!(report.pass());
    }

    #[test]
    fn theorem_check_composite_cases() {
        let report = theorem_check(6).unwrap();
        assert_eq!(report.forward.len(), 3); // d in {2, 3, 6}
        assert!(report.pass());

        // first case with three distinct primes: two peeling levels
        let report = theorem_check(30).unwrap();
        assert_eq!(report.certificate.n, 30);
        assert!(report.pass());

        // exponent above 1 on the peeled prime
        let report = theorem_check(36).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn trace_is_outermost_first_and_bezout_steps_verify() {
        let (cert, trace) = decompose_with_trace(60).unwrap();
        assert!(verify_certificate(&cert).unwrap().pass());
        // 60 = 2²·3·5 peels 5 then 3, leaving the prime power 4
        assert_eq!(trace.levels.len(), 2);
        assert_eq!(trace.levels[0].n, 60);
        assert_eq!(trace.levels[0].peeled_prime, 5);
        assert_eq!(trace.levels[0].reduced, 12);
        assert_eq!(trace.levels[1].n, 12);
        assert_eq!(trace.levels[1].peeled_prime, 3);
        assert_eq!(trace.levels[1].reduced, 4);
        for level in &trace.levels {
            for cert in &level.bezout {
                assert!(verify_bezout(cert).pass());
            }
        }
    }

    #[test]
    fn trace_satisfies_the_pullback_identity() {
        // at each level: ∑ P_{n,p_i}·F_i = Φ_m(X^{p_k^{a_k}})
        for n in [6u64, 12, 30, 60, 90, 210] {
            let (_, trace) = decompose_with_trace(n).unwrap();
            for level in &trace.levels {
                let k = level.substituted.len();
                let primes = factorize(level.n).primes();
                assert_eq!(primes.len(), k + 1);
                let mut sum = IntPoly::zero();
                for (p, f) in primes.iter().zip(&level.substituted) {
                    sum = &sum + &(&p_poly(level.n, *p).unwrap() * f);
                }
                let rhs = phi_poly(level.reduced)
                    .compose_power(level.peeled_prime.pow(level.peeled_exponent));
                assert_eq!(sum, rhs, "n = {n}, level n = {}", level.n);
            }
        }
    }

    #[test]
    fn trace_g_satisfies_its_defining_equation() {
        // g_i·(X^{n/p_ip_k}−1)·Φ_m(X^{p_k^{a_k−1}}) = (X^{n/p_k}−1)·F_i
        for n in [12u64, 30, 60, 180] {
            let (_, trace) = decompose_with_trace(n).unwrap();
            for level in &trace.levels {
                let primes = factorize(level.n).primes();
                let pk = level.peeled_prime;
                let ak = prime_exponent(level.n, pk);
                let shrunk = phi_poly(level.reduced).compose_power(pk.pow(ak - 1));
                for (i, g) in level.g.iter().enumerate() {
                    let lhs = &(g * &IntPoly::xn_minus_1(level.n / (primes[i] * pk))) * &shrunk;
                    let rhs = &IntPoly::xn_minus_1(level.n / pk) * &level.substituted[i];
                    assert_eq!(lhs, rhs, "n = {n}, level n = {}, i = {i}", level.n);
                }
            }
        }
    }

    #[test]
    fn prime_powers_produce_no_trace_levels() {
        let (_, trace) = decompose_with_trace(32).unwrap();
        assert!(trace.levels.is_empty());
    }
}
