//! Command-line front end: single-shot queries, certificate emission
//! and verification, and theorem sweeps.
//!
//! Exit codes are a stable contract for scripting: 0 when every check
//! passes, 1 when a verification fails, 2 for malformed input (bad
//! usage, unreadable files, broken JSON, unparseable elements).

use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use cyclorep::{
    bezout_xn, decompose, induced_char_value, ind, phi_poly, res, ring_mul, theorem_check,
    BezoutCertificate, CertificateFile, DecomposeCertificate, RingElem, RingError, TheoremReport,
};

#[derive(Parser)]
#[command(name = "cyclorep", version, about = "Exact cyclotomic ideal certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th cyclotomic polynomial (ascending coefficient CSV)
    Phi {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Emit a cofactor certificate expressing the cyclotomic polynomial
    /// in the ideal generated by the prime-indexed sums
    Decompose {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        /// Write the certificate JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a Bézout certificate for the pair X^a - 1, X^b - 1
    Bezout {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
        /// Write the certificate JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file (exit 0 pass, 1 fail, 2 malformed)
    Verify { path: PathBuf },
    /// Check the ideal equality end to end for one n
    Theorem {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// Check the ideal equality for every n in 2..=n_max
    Sweep {
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n_max: u64,
        /// Fan the checks out across worker threads (output order is
        /// still by n)
        #[arg(long)]
        parallel: bool,
    },
    /// Representation-ring operations for a cyclic group of order n
    Ring {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[command(subcommand)]
        op: RingOp,
    },
}

#[derive(Subcommand)]
enum RingOp {
    /// Multiply two elements (bare coefficient CSV of length n)
    Mul { u: String, v: String },
    /// Restrict an element to the subgroup of index d
    Res { d: u64, v: String },
    /// Induce an element of the subgroup of index d (CSV of length n/d)
    Ind { d: u64, w: String },
    /// Evaluate the character induced from the subgroup of index d at
    /// the m-th power of the generator
    Char { d: u64, m: i64 },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Box<dyn Error>> {
    match cli.command {
        Command::Phi { n } => {
            println!("{}", phi_poly(n));
            Ok(true)
        }
        Command::Decompose { n, out } => {
            let cert = decompose(n)?;
            emit(&CertificateFile::from(&cert), out, &decompose_summary(&cert))?;
            Ok(true)
        }
        Command::Bezout { a, b, out } => {
            let cert = bezout_xn(a, b);
            emit(&CertificateFile::from(&cert), out, &bezout_summary(&cert))?;
            Ok(true)
        }
        Command::Verify { path } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let outcome = CertificateFile::from_json(&text)?.verify()?;
            println!("{outcome}");
            Ok(outcome.pass())
        }
        Command::Theorem { n } => {
            let report = theorem_check(n)?;
            println!("{report}");
            Ok(report.pass())
        }
        Command::Sweep { n_max, parallel } => {
            let check = |n: u64| theorem_check(n).expect("sweep range starts at 2");
            let reports: Vec<TheoremReport> = if parallel {
                (2..=n_max).into_par_iter().map(check).collect()
            } else {
                (2..=n_max).map(check).collect()
            };
            let failed = reports.iter().filter(|r| !r.pass()).count();
            for report in &reports {
                println!("{report}");
            }
            println!(
                "sweep 2..={n_max}: {} passed, {failed} failed",
                reports.len() - failed
            );
            Ok(failed == 0)
        }
        Command::Ring { n, op } => {
            match op {
                RingOp::Mul { u, v } => {
                    let u = RingElem::parse_coeffs(n, &u)?;
                    let v = RingElem::parse_coeffs(n, &v)?;
                    println!("{}", ring_mul(&u, &v)?);
                }
                RingOp::Res { d, v } => {
                    let v = RingElem::parse_coeffs(n, &v)?;
                    println!("{}", res(&v, d)?);
                }
                RingOp::Ind { d, w } => {
                    if d == 0 || n % d != 0 {
                        return Err(RingError::NotADivisor { d, n }.into());
                    }
                    let w = RingElem::parse_coeffs(n / d, &w)?;
                    println!("{}", ind(n, d, &w)?);
                }
                RingOp::Char { d, m } => {
                    println!("{}", induced_char_value(n, d, m)?);
                }
            }
            Ok(true)
        }
    }
}

/// Certificate JSON goes to the file or stdout; the human summary goes
/// to the other stream so piped JSON stays clean.
fn emit(
    file: &CertificateFile,
    out: Option<PathBuf>,
    summary: &str,
) -> Result<(), Box<dyn Error>> {
    let json = file.to_json();
    match out {
        Some(path) => {
            fs::write(&path, json + "\n")
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            println!("wrote {}", path.display());
            println!("{summary}");
        }
        None => {
            println!("{json}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn degree_str(p: &cyclorep::IntPoly) -> String {
    match p.degree() {
        Some(d) => format!("degree {d}"),
        None => "zero".to_string(),
    }
}

fn decompose_summary(cert: &DecomposeCertificate) -> String {
    let mut lines = vec![format!(
        "n={}: phi {}, {} cofactors",
        cert.n,
        degree_str(&cert.phi),
        cert.cofactors.len()
    )];
    for (p, h) in cert.primes.iter().zip(&cert.cofactors) {
        lines.push(format!("  p={p}: cofactor {}", degree_str(h)));
    }
    lines.join("\n")
}

fn bezout_summary(cert: &BezoutCertificate) -> String {
    format!(
        "gcd({}, {}) = {}: A {}, B {}",
        cert.a,
        cert.b,
        cert.d,
        degree_str(&cert.coeff_a),
        degree_str(&cert.coeff_b)
    )
}
