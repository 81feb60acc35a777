//! Exact r-integrality certificates: every eigenvalue an integer
//! multiple of a single rational r, with the maximal such r reported.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::closedform::CoExpr;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spectrum::Spectrum;

/// Certificate that a spectrum is r-integral. `r` is the maximal ratio:
/// the gcd of the quotients over the nonzero eigenvalues is 1. An
/// all-zero spectrum carries no ratio (any r works).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityCertificate {
    pub r: Option<Rational>,
    /// One quotient per distinct eigenvalue, ascending.
    pub quotients: Vec<BigInt>,
}

/// The positive rational gcd of a list of non-negative rationals: the
/// largest rational dividing every entry to an integer. In lowest terms
/// this is gcd of the numerators over lcm of the denominators.
pub fn rational_gcd(values: &[Rational]) -> Result<Rational> {
    if values.iter().any(|v| v.is_negative()) {
        return Err(Error::NegativeValue);
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        return Err(Error::AllZero);
    }
    Ok(Rational::new(num_gcd, den_lcm))
}

/// Certifies a spectrum with its maximal ratio.
pub fn certify(spec: &Spectrum) -> IntegralityCertificate {
    let values: Vec<Rational> = spec.entries().iter().map(|(v, _)| v.clone()).collect();
    match rational_gcd(&values) {
        Ok(r) => {
            let quotients = values
                .iter()
                .map(|v| {
                    let q = v / &r;
                    debug_assert!(q.is_integer());
                    q.to_integer()
                })
                .collect();
            IntegralityCertificate { r: Some(r), quotients }
        }
        Err(_) => IntegralityCertificate {
            r: None,
            quotients: vec![BigInt::zero(); values.len()],
        },
    }
}

/// True iff every eigenvalue divided by `r` is an exact integer.
pub fn verify_integral(spec: &Spectrum, r: &Rational) -> Result<bool> {
    if !r.is_positive() {
        return Err(Error::NonPositiveR);
    }
    Ok(spec.entries().iter().all(|(v, _)| (v / r).is_integer()))
}

/// Composition-rule prediction of an integrality ratio for a
/// co-expression, always of the form 1/q: a leaf with domination size k
/// is 1/k-integral, a complement on n vertices divides the child ratio
/// by n-1, and a disjoint union multiplies the two denominators.
/// The certified maximal ratio is an integer multiple of this value.
pub fn predicted_ratio(expr: &CoExpr) -> Result<Rational> {
    let q = predicted_denominator(expr)?;
    Ok(Rational::new(BigInt::one(), q))
}

fn predicted_denominator(expr: &CoExpr) -> Result<BigInt> {
    Ok(match expr {
        CoExpr::Leaf { k, .. } => BigInt::from(*k),
        CoExpr::Complement(child) => {
            let n = child.vertex_count();
            if n < 2 {
                return Err(Error::UniformityExceedsOrder { m: 2, n });
            }
            predicted_denominator(child)? * BigInt::from(n - 1)
        }
        CoExpr::Union(a, b) => predicted_denominator(a)? * predicted_denominator(b)?,
    })
}
