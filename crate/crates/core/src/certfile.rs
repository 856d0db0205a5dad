//! JSON interchange format for certificates.
//!
//! Certificates are meant to be auditable by an independent
//! reimplementation, so the format is plain JSON with every polynomial
//! as an array of decimal coefficient strings in ascending degree
//! (never floating point: decimal strings round-trip arbitrary
//! precision exactly). A `kind` field discriminates the two schemas;
//! unknown kinds are rejected at parse time.
//!
//! ```json
//! { "kind": "decompose", "n": 6, "primes": [2, 3],
//!   "phi": ["1", "-1", "1"],
//!   "cofactors": [["0", "-1"], ["1"]] }
//! ```
//!
//! ```json
//! { "kind": "bezout", "a": 3, "b": 2, "d": 1,
//!   "A": ["1"], "B": ["0", "-1"] }
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bezout::{verify_bezout_parts, BezoutCertificate, BezoutReport};
use crate::decompose::{
    verify_certificate, CertificateReport, DecomposeCertificate, DecomposeError,
};
use crate::IntPoly;

#[derive(Debug, Error)]
pub enum CertFileError {
    #[error("invalid certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

/// On-disk certificate: either a cofactor certificate for one n or a
/// Bézout pair for one exponent pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CertificateFile {
    Decompose {
        n: u64,
        primes: Vec<u64>,
        phi: Vec<String>,
        cofactors: Vec<Vec<String>>,
    },
    Bezout {
        a: u64,
        b: u64,
        d: u64,
        #[serde(rename = "A")]
        coeff_a: Vec<String>,
        #[serde(rename = "B")]
        coeff_b: Vec<String>,
    },
}

/// Verification result for whichever kind the file held.
#[derive(Debug, Clone)]
pub enum VerifyOutcome {
    Decompose(CertificateReport),
    Bezout(BezoutReport),
}

impl VerifyOutcome {
    pub fn pass(&self) -> bool {
        match self {
            VerifyOutcome::Decompose(r) => r.pass(),
            VerifyOutcome::Bezout(r) => r.pass(),
        }
    }
}

impl std::fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyOutcome::Decompose(r) => r.fmt(f),
            VerifyOutcome::Bezout(r) => r.fmt(f),
        }
    }
}

fn poly_to_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_from_strings(strings: &[String], what: &str) -> Result<IntPoly, CertFileError> {
    let mut coeffs = Vec::with_capacity(strings.len());
    for (i, s) in strings.iter().enumerate() {
        let c: BigInt = s.trim().parse().map_err(|e| {
            CertFileError::Malformed(format!("{what}, coefficient {i} ({s:?}): {e}"))
        })?;
        coeffs.push(c);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

impl From<&DecomposeCertificate> for CertificateFile {
    fn from(cert: &DecomposeCertificate) -> Self {
        CertificateFile::Decompose {
            n: cert.n,
            primes: cert.primes.clone(),
            phi: poly_to_strings(&cert.phi),
            cofactors: cert.cofactors.iter().map(poly_to_strings).collect(),
        }
    }
}

impl From<&BezoutCertificate> for CertificateFile {
    fn from(cert: &BezoutCertificate) -> Self {
        CertificateFile::Bezout {
            a: cert.a,
            b: cert.b,
            d: cert.d,
            coeff_a: poly_to_strings(&cert.coeff_a),
            coeff_b: poly_to_strings(&cert.coeff_b),
        }
    }
}

impl CertificateFile {
    pub fn from_json(s: &str) -> Result<Self, CertFileError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    /// Rebuilds the domain certificate and re-runs its verifier.
    /// Structural problems (unparseable coefficients, impossible
    /// parameters, wrong prime lists) surface as errors; a well-formed
    /// certificate whose identity fails yields a failing outcome.
    pub fn verify(&self) -> Result<VerifyOutcome, CertFileError> {
        match self {
            CertificateFile::Decompose {
                n,
                primes,
                phi,
                cofactors,
            } => {
                let cert = DecomposeCertificate {
                    n: *n,
                    primes: primes.clone(),
                    phi: poly_from_strings(phi, "phi")?,
                    cofactors: cofactors
                        .iter()
                        .enumerate()
                        .map(|(i, c)| poly_from_strings(c, &format!("cofactor {i}")))
                        .collect::<Result<_, _>>()?,
                };
                let report = verify_certificate(&cert).map_err(|e| match e {
                    DecomposeError::MalformedCertificate(msg)
                    | DecomposeError::BadInput(msg) => CertFileError::Malformed(msg),
                })?;
                Ok(VerifyOutcome::Decompose(report))
            }
            CertificateFile::Bezout {
                a,
                b,
                d,
                coeff_a,
                coeff_b,
            } => {
                if *a == 0 || *b == 0 || *d == 0 {
                    return Err(CertFileError::Malformed(format!(
                        "exponents must be positive, got a={a}, b={b}, d={d}"
                    )));
                }
                let pa = poly_from_strings(coeff_a, "A")?;
                let pb = poly_from_strings(coeff_b, "B")?;
                Ok(VerifyOutcome::Bezout(verify_bezout_parts(
                    *a, *b, *d, &pa, &pb,
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::bezout_xn;
    use crate::decompose::decompose;

    #[test]
    fn decompose_certificates_round_trip() {
        for n in [2u64, 6, 12, 30, 36] {
            let cert = decompose(n).unwrap();
            let file = CertificateFile::from(&cert);
            let json = file.to_json();
            let parsed = CertificateFile::from_json(&json).unwrap();
            assert_eq!(parsed, file);
            let outcome = parsed.verify().unwrap();
            assert!(outcome.pass(), "n = {n}: {outcome}");
        }
    }

    #[test]
    fn bezout_certificates_round_trip() {
        for (a, b) in [(3u64, 2u64), (6, 4), (4, 2), (7, 7), (300, 17)] {
            let file = CertificateFile::from(&bezout_xn(a, b));
            let parsed = CertificateFile::from_json(&file.to_json()).unwrap();
            assert_eq!(parsed, file);
            assert!(parsed.verify().unwrap().pass(), "a = {a}, b = {b}");
        }
    }

    #[test]
    fn zero_cofactors_round_trip_as_empty_arrays() {
        // the degenerate chain emits A = 0, serialized as []
        let file = CertificateFile::from(&bezout_xn(4, 2));
        let json = file.to_json();
        assert!(json.contains("\"A\": []"));
        assert!(CertificateFile::from_json(&json).unwrap().verify().unwrap().pass());
    }

    #[test]
    fn json_shape_is_stable() {
        let file = CertificateFile::from(&decompose(6).unwrap());
        let json = file.to_json();
        assert!(json.contains("\"kind\": \"decompose\""));
        assert!(json.contains("\"primes\""));
        assert!(json.contains("\"phi\""));
        assert!(json.contains("\"cofactors\""));

        let file = CertificateFile::from(&bezout_xn(3, 2));
        let json = file.to_json();
        assert!(json.contains("\"kind\": \"bezout\""));
        assert!(json.contains("\"A\""));
        assert!(json.contains("\"B\""));
    }

    #[test]
    fn unknown_kind_is_rejected() {
        let err = CertificateFile::from_json(r#"{"kind": "frobnicate", "n": 6}"#);
        assert!(matches!(err, Err(CertFileError::Json(_))));
    }

    #[test]
    fn truncated_json_is_rejected() {
        let json = CertificateFile::from(&decompose(6).unwrap()).to_json();
        let cut = &json[..json.len() / 2];
        assert!(matches!(
            CertificateFile::from_json(cut),
            Err(CertFileError::Json(_))
        ));
    }

    #[test]
    fn unparseable_coefficients_are_malformed() {
        let json = r#"{"kind": "bezout", "a": 3, "b": 2, "d": 1,
                       "A": ["1"], "B": ["0", "abc"]}"#;
        let file = CertificateFile::from_json(json).unwrap();
        assert!(matches!(file.verify(), Err(CertFileError::Malformed(_))));
    }

    #[test]
    fn zero_exponents_are_malformed() {
        let json = r#"{"kind": "bezout", "a": 0, "b": 2, "d": 1, "A": [], "B": []}"#;
        let file = CertificateFile::from_json(json).unwrap();
        assert!(matches!(file.verify(), Err(CertFileError::Malformed(_))));
    }

    #[test]
    fn tampered_coefficient_fails_verification_without_error() {
        let cert = decompose(12).unwrap();
        let mut file = CertificateFile::from(&cert);
        if let CertificateFile::Decompose { cofactors, .. } = &mut file {
            let target = &mut cofactors[0];
            if target.is_empty() {
                target.push("1".to_string());
            } else {
                let bumped: BigInt = target[0].parse::<BigInt>().unwrap() + 1;
                target[0] = bumped.to_string();
            }
        }
        let outcome = file.verify().unwrap();
        assert!(!outcome.pass());
    }

    #[test]
    fn wrong_prime_list_is_malformed() {
        let mut file = CertificateFile::from(&decompose(12).unwrap());
        if let CertificateFile::Decompose { primes, .. } = &mut file {
            primes[0] = 5;
        }
        assert!(matches!(file.verify(), Err(CertFileError::Malformed(_))));
    }
}
