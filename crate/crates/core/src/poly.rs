//! Dense univariate polynomial arithmetic over an exact integer scalar.
//!
//! [`Poly<T>`] is generic over the coefficient type through the [`Coeff`]
//! trait so the same routines run over machine integers or bignums; the
//! rest of the crate works with the [`crate::IntPoly`] alias
//! (arbitrary-precision coefficients), which is the only instantiation with
//! exactness guarantees at every scale.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial is the empty vector. All operations are pure and exact:
//! there is no rounding and no modular reduction anywhere in this module.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use thiserror::Error;

/// Scalar type usable as a polynomial coefficient: an exact signed integer.
pub trait Coeff:
    num_integer::Integer + Signed + Clone + fmt::Debug + fmt::Display
{
}

impl<T> Coeff for T where T: num_integer::Integer + Signed + Clone + fmt::Debug + fmt::Display {}

/// Below this operand length multiplication stays schoolbook; at or above
/// it the divide-and-conquer path takes over.
const KARATSUBA_THRESHOLD: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("no exact quotient: remainder is nonzero")]
    NotDivisible,
    #[error("divisor is not monic")]
    NotMonic,
}

/// Parse failure for the comma-separated coefficient form, with the byte
/// offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad coefficient {token:?} at position {position}: {reason}")]
pub struct ParsePolyError {
    pub position: usize,
    pub token: String,
    pub reason: String,
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `X^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros so the representation is canonical.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c·X^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The polynomial `X^m − 1`.
    pub fn xn_minus_1(m: u64) -> Self {
        assert!(m >= 1, "xn_minus_1 requires m >= 1");
        let mut coeffs = vec![T::zero(); m as usize + 1];
        coeffs[0] = -T::one();
        coeffs[m as usize] = T::one();
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial. `Option` ordering makes
    /// `p.degree() < q.degree()` well-defined when `p` is zero and `q` is
    /// not.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    fn add_impl(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (i, c) in short.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        Poly::from_coeffs(out)
    }

    fn sub_impl(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), T::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].clone() - c.clone();
        }
        Poly::from_coeffs(out)
    }

    fn neg_impl(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.clone().neg()).collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let out = if self.coeffs.len().min(other.coeffs.len()) < KARATSUBA_THRESHOLD {
            mul_schoolbook(&self.coeffs, &other.coeffs)
        } else {
            mul_karatsuba(&self.coeffs, &other.coeffs)
        };
        Poly::from_coeffs(out)
    }

    /// Exact quotient `self / divisor` over the coefficient ring.
    ///
    /// Long division that fails fast: the first leading step with a
    /// non-exact coefficient quotient, or a nonzero final remainder,
    /// reports [`PolyError::NotDivisible`].
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let dlead = divisor.leading_coeff().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(PolyError::NotDivisible);
        }
        let ddeg = divisor.coeffs.len() - 1;
        // Divisors here are often sparse (products of X^d − 1 factors), so
        // the subtraction step walks only their nonzero terms.
        let terms: Vec<(usize, &T)> = divisor.coeffs[..ddeg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();

        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - ddeg;
        let mut quot = vec![T::zero(); qlen];
        for step in (0..qlen).rev() {
            let lead = std::mem::replace(&mut rem[step + ddeg], T::zero());
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(dlead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for &(i, c) in &terms {
                let delta = c.clone() * q.clone();
                rem[step + i] = std::mem::replace(&mut rem[step + i], T::zero()) - delta;
            }
            quot[step] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Remainder of `self` modulo a monic divisor; exact over the integers
    /// because the leading coefficient is 1.
    pub fn rem_monic(&self, divisor: &Self) -> Result<Self, PolyError> {
        if !divisor.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return Ok(self.clone());
        }
        let terms: Vec<(usize, &T)> = divisor.coeffs[..ddeg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        for step in (0..rem.len() - ddeg).rev() {
            let lead = std::mem::replace(&mut rem[step + ddeg], T::zero());
            if lead.is_zero() {
                continue;
            }
            for &(i, c) in &terms {
                let delta = c.clone() * lead.clone();
                rem[step + i] = std::mem::replace(&mut rem[step + i], T::zero()) - delta;
            }
        }
        rem.truncate(ddeg);
        Ok(Poly::from_coeffs(rem))
    }

    /// The substitution `X ↦ X^k`, spreading each coefficient of `X^i`
    /// to `X^{k·i}`.
    pub fn compose_power(&self, k: u64) -> Self {
        assert!(k >= 1, "compose_power requires k >= 1");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let k = k as usize;
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        Poly { coeffs }
    }

    /// Index of the first coefficient where `self` and `other` differ,
    /// reading absent coefficients as zero; `None` when equal.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl<T: Coeff + FromStr> Poly<T>
where
    T::Err: fmt::Display,
{
    /// Parses the canonical text form: comma-separated decimal
    /// coefficients in ascending degree; the empty (or all-whitespace)
    /// string is the zero polynomial.
    pub fn parse_csv(s: &str) -> Result<Self, ParsePolyError> {
        if s.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let mut coeffs = Vec::new();
        let mut position = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            match trimmed.parse::<T>() {
                Ok(c) => coeffs.push(c),
                Err(e) => {
                    return Err(ParsePolyError {
                        position: position + (token.len() - token.trim_start().len()),
                        token: trimmed.to_string(),
                        reason: e.to_string(),
                    })
                }
            }
            position += token.len() + 1;
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl<T: Coeff + FromStr> FromStr for Poly<T>
where
    T::Err: fmt::Display,
{
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Poly::parse_csv(s)
    }
}

/// Canonical text form: `-1,0,1` for `X²−1`; empty output for zero.
impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

fn mul_schoolbook<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let prod = ai.clone() * bj.clone();
            out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + prod;
        }
    }
    out
}

fn mul_karatsuba<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        return mul_schoolbook(a, b);
    }
    let m = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));

    let z0 = mul_karatsuba(a0, b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        mul_karatsuba(a1, b1)
    };
    let a01 = slice_add(a0, a1);
    let b01 = slice_add(b0, b1);
    let z1 = mul_karatsuba(&a01, &b01);

    // a·b = z0 + (z1 − z0 − z2)·X^m + z2·X^{2m}
    //
    // With uneven splits the top entries of z1 can index past the true
    // product degree; those entries always cancel to zero, so the writes
    // are skipped rather than sized for.
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
    }
    let len = out.len();
    for (i, c) in z1.into_iter().enumerate() {
        let mid = c - z0.get(i).cloned().unwrap_or_else(T::zero)
            - z2.get(i).cloned().unwrap_or_else(T::zero);
        if m + i < len {
            out[m + i] = out[m + i].clone() + mid;
        } else {
            debug_assert!(mid.is_zero());
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[2 * m + i] = out[2 * m + i].clone() + c;
    }
    out
}

fn slice_add<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_method:ident) => {
        impl<'a, T: Coeff> $trait<&'a Poly<T>> for &'a Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &'a Poly<T>) -> Poly<T> {
                self.$impl_method(rhs)
            }
        }
        impl<T: Coeff> $trait<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$impl_method(&rhs)
            }
        }
        impl<T: Coeff> $trait<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                self.$impl_method(rhs)
            }
        }
        impl<T: Coeff> $trait<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$impl_method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_impl()
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.neg_impl()
    }
}
