//! Exact arithmetic in the cyclotomic integers ℤ[ζₙ] ≅ ℤ[X]/⟨Φₙ⟩, used
//! to re-verify the induced-character computation at the level of
//! character values rather than multiplicity vectors.
//!
//! A [`CycInt`] is a residue mod Φₙ with ζₙ represented by X; equality
//! is exact residue equality, so there is no floating point anywhere.
//! [`verify_ind_char`] evaluates the induced character of the trivial
//! representation at every group element and compares against the
//! two-case form: index d on the subgroup, zero off it.

use num_bigint::BigInt;

use crate::cyclotomic::{phi_poly, CycError};
use crate::IntPoly;

/// A cyclotomic integer at conductor n: the reduced residue of an
/// integer polynomial mod Φₙ, with X standing for ζₙ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    n: u64,
    rep: IntPoly,
}

impl CycInt {
    /// Reduces an arbitrary integer polynomial at conductor n.
    pub fn new(n: u64, poly: &IntPoly) -> Self {
        assert!(n >= 1, "conductor must be at least 1");
        Self::reduce_with(n, poly, &phi_poly(n))
    }

    fn reduce_with(n: u64, poly: &IntPoly, phi: &IntPoly) -> Self {
        let rep = poly
            .rem_monic(phi)
            .expect("cyclotomic polynomials are monic");
        CycInt { n, rep }
    }

    pub fn from_int(n: u64, value: i64) -> Self {
        assert!(n >= 1, "conductor must be at least 1");
        // constants are already reduced: every Φₙ has degree at least 1
        CycInt {
            n,
            rep: IntPoly::constant(BigInt::from(value)),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// The reduced representative, degree < φ(n).
    pub fn rep(&self) -> &IntPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

/// Constants print as bare integers (`0`, `2`); anything of positive
/// degree prints as the coefficient list of its representative.
impl std::fmt::Display for CycInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.rep.degree() {
            None => write!(f, "0"),
            Some(0) => write!(f, "{}", self.rep.coeff(0)),
            Some(_) => write!(f, "{}", self.rep),
        }
    }
}

impl std::ops::Add for &CycInt {
    type Output = CycInt;

    fn add(self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.n, rhs.n, "conductors must match");
        // sums of reduced residues stay reduced
        CycInt {
            n: self.n,
            rep: &self.rep + &rhs.rep,
        }
    }
}

impl std::ops::Mul for &CycInt {
    type Output = CycInt;

    fn mul(self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.n, rhs.n, "conductors must match");
        CycInt::new(self.n, &(&self.rep * &rhs.rep))
    }
}

/// ζₙ^e as a reduced residue; the exponent may be any integer and is
/// taken mod n.
pub fn zeta_pow(n: u64, e: i64) -> CycInt {
    assert!(n >= 1, "conductor must be at least 1");
    let e = e.rem_euclid(n as i64) as usize;
    CycInt::new(n, &IntPoly::monomial(BigInt::from(1), e))
}

fn induced_value_with(n: u64, d: u64, m: i64, phi: &IntPoly) -> CycInt {
    let mm = m.rem_euclid(n as i64) as u64;
    let step = n / d;
    let mut coeffs = vec![BigInt::from(0); n as usize];
    for k in 0..d {
        let e = (k as u128 * step as u128 % n as u128) * mm as u128 % n as u128;
        coeffs[e as usize] += 1;
    }
    CycInt::reduce_with(n, &IntPoly::from_coeffs(coeffs), phi)
}

/// The induced character of the trivial representation of the index-d
/// subgroup, evaluated at the m-th power of the generator:
/// `∑_{k=0}^{d−1} ζₙ^{k·(n/d)·m}`, reduced mod Φₙ.
pub fn induced_char_value(n: u64, d: u64, m: i64) -> Result<CycInt, CycError> {
    if d == 0 || n == 0 || !n.is_multiple_of(d) {
        return Err(CycError::NotADivisor { d, n });
    }
    Ok(induced_value_with(n, d, m, &phi_poly(n)))
}

/// Outcome of the exhaustive character comparison at one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharReport {
    pub n: u64,
    /// Number of (subgroup, element) pairs checked: one per divisor of n
    /// per group element.
    pub checks: usize,
    /// Pairs (d, m) whose computed value differs from the two-case form.
    pub failures: Vec<(u64, u64)>,
}

impl CharReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for CharReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass() {
            write!(f, "characters n={}: {} values match", self.n, self.checks)
        } else {
            write!(
                f,
                "characters n={}: {} of {} values differ (first at d={}, m={})",
                self.n,
                self.failures.len(),
                self.checks,
                self.failures[0].0,
                self.failures[0].1
            )
        }
    }
}

/// For every divisor d of n and every element exponent m in 0..n,
/// compares the summed character value against the closed two-case
/// form: d when the element lies in the index-d subgroup (d ∣ m), and 0
/// otherwise.
pub fn verify_ind_char(n: u64) -> CharReport {
    assert!(n >= 1, "verify_ind_char requires n >= 1");
    let phi = phi_poly(n);
    let mut checks = 0;
    let mut failures = Vec::new();
    for d in crate::arith::divisors(n) {
        for m in 0..n {
            let got = induced_value_with(n, d, m as i64, &phi);
            let expected = if m % d == 0 {
                CycInt::from_int(n, d as i64)
            } else {
                CycInt::from_int(n, 0)
            };
            checks += 1;
            if got != expected {
                failures.push((d, m));
            }
        }
    }
    CharReport { n, checks, failures }
}
