//! Exact arithmetic for cyclotomic polynomials and the representation
//! ring of finite cyclic groups.
//!
//! The centerpiece is a constructive, machine-checkable certificate
//! that the ideal generated by the polynomials
//! P_{n,d} = 1 + X^{n/d} + X^{2n/d} + ... + X^{(d-1)n/d}, over the
//! divisors d > 1 of n, is exactly the principal ideal generated by
//! the n-th cyclotomic polynomial. Everything runs over arbitrary
//! precision integers; there is no floating point anywhere.
//!
//! Module tour:
//!
//! * [`poly`]: dense univariate polynomials over any signed integer
//!   coefficient type, with exact division and reduction by monic
//!   divisors. [`IntPoly`] is the alias used everywhere downstream.
//! * [`arith`]: factorization, divisors, Möbius, Euler phi.
//! * [`cyclotomic`]: cyclotomic polynomials by Möbius inversion, the
//!   sparse generators P_{n,d}, their quotients, and witness checks
//!   for the identities the construction leans on.
//! * [`bezout`]: Bézout cofactors for pairs X^a - 1, X^b - 1.
//! * [`decompose`]: the recursive cofactor construction expressing
//!   the n-th cyclotomic polynomial inside the ideal, plus the
//!   verifier that replays certificates against independent oracles.
//! * [`repring`]: the representation ring of a cyclic group with
//!   induction and restriction, and the ideal-membership statement
//!   replayed at ring level.
//! * [`charcheck`]: induced characters evaluated exactly in a
//!   cyclotomic integer ring.
//! * [`certfile`]: JSON serialization of certificates.

pub mod arith;
pub mod bezout;
pub mod certfile;
pub mod charcheck;
pub mod cyclotomic;
pub mod decompose;
pub mod poly;
pub mod repring;

/// Integer polynomials with arbitrary precision coefficients: the
/// concrete instantiation every higher module works with.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;

pub use arith::{divisors, euler_phi, factorize, is_prime, mobius, prime_exponent, Factorization};
pub use bezout::{
    bezout_xn, verify_bezout, verify_bezout_parts, BezoutCertificate, BezoutReport, BezoutTrace,
};
pub use certfile::{CertFileError, CertificateFile, VerifyOutcome};
pub use charcheck::{induced_char_value, verify_ind_char, zeta_pow, CharReport, CycInt};
pub use cyclotomic::{
    check_lemma41a, check_lemma41b, check_prop42, p_poly, phi_poly, phi_via_division,
    prop43_witness, q_poly, CycError, IdentityTag, IdentityWitness,
};
pub use decompose::{
    decompose, decompose_with_trace, theorem_check, verify_certificate, CertificateReport,
    DecomposeCertificate, DecomposeError, DecomposeLevel, DecomposeTrace, TheoremReport,
};
pub use poly::{Coeff, ParsePolyError, Poly, PolyError};
pub use repring::{
    ind, induced_ideal_generators, p_elem, quotient_theorem_report, res, ring_mul, ParseElemError,
    QuotientReport, RingElem, RingError,
};
