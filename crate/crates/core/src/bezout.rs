//! Explicit Bézout pairs for the ideal identity
//! `⟨X^a − 1, X^b − 1⟩ = ⟨X^d − 1⟩` with `d = gcd(a, b)` in ℤ[X].
//!
//! The Euclidean algorithm runs on the exponents: a remainder chain
//! `r₀ ≥ r₁ > r₂ > … > r_ℓ = d` with quotients `q_i`. Each step has an
//! integer-polynomial witness
//! `f_i(X) = ((X^{q_i r_i} − 1)/(X^{r_i} − 1))·X^{r_{i+1}}` satisfying
//! `(X^{r_{i−1}} − 1) − f_i(X)(X^{r_i} − 1) = X^{r_{i+1}} − 1`; back-
//! substituting the chain yields one explicit pair (A, B) with
//! `(X^a − 1)A + (X^b − 1)B = X^d − 1`. The chain and its step
//! polynomials are retained as a trace so certificates stay auditable.

use num_bigint::BigInt;

use crate::IntPoly;

/// Certificate for `(X^a − 1)·A + (X^b − 1)·B = X^d − 1`, `d = gcd(a, b)`.
#[derive(Debug, Clone)]
pub struct BezoutCertificate {
    pub a: u64,
    pub b: u64,
    pub d: u64,
    /// Cofactor A of `X^a − 1`.
    pub coeff_a: IntPoly,
    /// Cofactor B of `X^b − 1`.
    pub coeff_b: IntPoly,
    pub trace: BezoutTrace,
}

/// The exponent-level Euclid run behind a [`BezoutCertificate`].
#[derive(Debug, Clone)]
pub struct BezoutTrace {
    /// Whether the inputs were exchanged so the chain starts from the
    /// larger exponent.
    pub swapped: bool,
    /// `r₀ ≥ r₁ > r₂ > … > r_ℓ = d`.
    pub remainders: Vec<u64>,
    /// `q₁ … q_ℓ` with `r_{i−1} = q_i·r_i + r_{i+1}` (and `r_{ℓ+1} = 0`).
    pub quotients: Vec<u64>,
    /// Step polynomials `f₁ … f_{ℓ−1}`; empty when the chain has a single
    /// step (`b ∣ a`).
    pub steps: Vec<IntPoly>,
}

/// Outcome of re-checking a certificate: the identity compared
/// coefficientwise and the gcd compared against integer Euclid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutReport {
    pub identity_ok: bool,
    pub gcd_ok: bool,
    /// Lowest coefficient index where `(X^a−1)A + (X^b−1)B` differs from
    /// `X^d − 1`, when it does.
    pub first_mismatch: Option<usize>,
}

impl BezoutReport {
    pub fn pass(&self) -> bool {
        self.identity_ok && self.gcd_ok
    }
}

impl std::fmt::Display for BezoutReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass() {
            return write!(f, "bezout: pass");
        }
        write!(f, "bezout: FAIL (identity {}", ok_str(self.identity_ok))?;
        if let Some(i) = self.first_mismatch {
            write!(f, " at coefficient {i}")?;
        }
        write!(f, ", gcd {})", ok_str(self.gcd_ok))
    }
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "bad"
    }
}

/// The step polynomial `((X^{q·r} − 1)/(X^r − 1))·X^s`, built directly as
/// a geometric sum `∑_{j<q} X^{jr}` shifted by `s`.
fn step_poly(q: u64, r: u64, s: u64) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); ((q - 1) * r + s) as usize + 1];
    for j in 0..q {
        coeffs[(j * r + s) as usize] = BigInt::from(1);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Runs the exponent-level Euclidean algorithm on `(a, b)` and
/// back-substitutes the step relations into an explicit cofactor pair.
/// Either argument order is accepted; an internal swap is recorded in the
/// trace. When `b ∣ a` the chain has one step and the certificate
/// degenerates to A = 0, B = 1.
pub fn bezout_xn(a: u64, b: u64) -> BezoutCertificate {
    assert!(a >= 1 && b >= 1, "bezout_xn requires positive exponents");
    let swapped = b > a;
    let (hi, lo) = if swapped { (b, a) } else { (a, b) };

    let mut remainders = vec![hi, lo];
    let mut quotients = Vec::new();
    loop {
        let len = remainders.len();
        let (prev, cur) = (remainders[len - 2], remainders[len - 1]);
        let q = prev / cur;
        let r = prev % cur;
        quotients.push(q);
        if r == 0 {
            break;
        }
        remainders.push(r);
    }
    let d = *remainders.last().unwrap();

    // Write u_i = X^{r_i} − 1. The step relation u_{i+1} = u_{i−1} − f_i·u_i
    // keeps every u_i in the span of (u₀, u₁); accumulate the coordinates
    // (S_i, T_i) with u_i = S_i·u₀ + T_i·u₁ down to i = ℓ.
    let mut steps = Vec::new();
    let mut s_prev = IntPoly::one();
    let mut t_prev = IntPoly::zero();
    let mut s_cur = IntPoly::zero();
    let mut t_cur = IntPoly::one();
    for j in 1..remainders.len() - 1 {
        let f = step_poly(quotients[j - 1], remainders[j], remainders[j + 1]);
        let s_next = &s_prev - &(&f * &s_cur);
        let t_next = &t_prev - &(&f * &t_cur);
        steps.push(f);
        s_prev = std::mem::replace(&mut s_cur, s_next);
        t_prev = std::mem::replace(&mut t_cur, t_next);
    }

    let (coeff_hi, coeff_lo) = (s_cur, t_cur);
    let (coeff_a, coeff_b) = if swapped {
        (coeff_lo, coeff_hi)
    } else {
        (coeff_hi, coeff_lo)
    };

    BezoutCertificate {
        a,
        b,
        d,
        coeff_a,
        coeff_b,
        trace: BezoutTrace {
            swapped,
            remainders,
            quotients,
            steps,
        },
    }
}

/// Checks the identity `(X^a − 1)·A + (X^b − 1)·B = X^d − 1`
/// coefficientwise from its parts; shared by certificate files, which
/// carry no trace.
pub fn verify_bezout_parts(
    a: u64,
    b: u64,
    d: u64,
    coeff_a: &IntPoly,
    coeff_b: &IntPoly,
) -> BezoutReport {
    let gcd_ok = a >= 1 && b >= 1 && d == num_integer::gcd(a, b);
    if a == 0 || b == 0 || d == 0 {
        return BezoutReport {
            identity_ok: false,
            gcd_ok,
            first_mismatch: Some(0),
        };
    }
    let lhs = &(&IntPoly::xn_minus_1(a) * coeff_a) + &(&IntPoly::xn_minus_1(b) * coeff_b);
    let rhs = IntPoly::xn_minus_1(d);
    let first_mismatch = lhs.first_mismatch(&rhs);
    BezoutReport {
        identity_ok: first_mismatch.is_none(),
        gcd_ok,
        first_mismatch,
    }
}

/// Re-checks a full certificate: identity and gcd.
pub fn verify_bezout(cert: &BezoutCertificate) -> BezoutReport {
    verify_bezout_parts(cert.a, cert.b, cert.d, &cert.coeff_a, &cert.coeff_b)
}
