use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::green::IntPolynomial;

/// Polynomial with exact rational coefficients, ascending degree, no
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn to_integer_polynomial(&self) -> Option<IntPolynomial> {
        self.is_integral()
            .then(|| IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points, by Lagrange's formula.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Self> {
        let m = points.len();
        let mut total = vec![BigRational::zero(); m];
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::Internal(format!("repeated interpolation node {xi}")));
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, c) in basis.iter().enumerate() {
                total[k] += c * &scale;
            }
        }
        Ok(Self::from_coeffs(total))
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if !abs.is_one() || i == 0 {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Fits the first `degree_bound + 1` samples and checks the rest.
pub(crate) fn fit_samples(samples: &[(u64, u64)], degree_bound: usize) -> Result<RatPolynomial> {
    if samples.len() < degree_bound + 1 {
        return Err(Error::InsufficientSamples {
            feasible: samples.iter().map(|s| s.0).collect(),
            needed: degree_bound + 1,
        });
    }
    let point = |&(x, y): &(u64, u64)| {
        (
            BigRational::from_integer(BigInt::from(x)),
            BigRational::from_integer(BigInt::from(y)),
        )
    };
    let fit: Vec<_> = samples[..=degree_bound].iter().map(point).collect();
    let poly = RatPolynomial::interpolate(&fit)?;
    for s in &samples[degree_bound + 1..] {
        let (x, y) = point(s);
        let predicted = poly.eval(&x);
        if predicted != y {
            return Err(Error::DegreeBoundViolated {
                degree: degree_bound,
                size: s.0,
                observed: y.to_string(),
                predicted: predicted.to_string(),
            });
        }
    }
    if !poly.is_integral() {
        return Err(Error::Internal(format!("fitted polynomial {poly} has non-integer coefficients")));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn fits_and_guards() {
        let p = fit_samples(&[(2, 3), (3, 4), (4, 5)], 1).unwrap();
        assert_eq!(p, RatPolynomial::from_integers(&[1, 1]));
        assert_eq!(p.to_string(), "x + 1");
        assert!(matches!(
            fit_samples(&[(2, 4), (3, 9), (4, 16)], 1),
            Err(Error::DegreeBoundViolated { degree: 1, size: 4, .. })
        ));
        assert!(matches!(fit_samples(&[(2, 1), (3, 2)], 0), Err(Error::DegreeBoundViolated { .. })));
        assert!(matches!(fit_samples(&[(2, 1)], 1), Err(Error::InsufficientSamples { .. })));
        // x(x-1)/2 + ... has half-integer coefficients
        assert!(matches!(fit_samples(&[(2, 1), (3, 3), (4, 6)], 2), Err(Error::Internal(_))));
        assert_eq!(RatPolynomial::from_integers(&[0, -1, 2]).to_string(), "2x^2 - x");
        assert_eq!(RatPolynomial::default().to_string(), "0");
    }

    proptest! {
        #[test]
        fn interpolation_recovers_integer_polynomials(
            coeffs in prop::collection::vec(-50i64..50, 1..6),
            extra in 0usize..3,
        ) {
            let p = RatPolynomial::from_integers(&coeffs);
            let m = coeffs.len() + extra;
            let points: Vec<_> = (0..m).map(|i| {
                let x = r(2 + 3 * i as i64);
                let y = p.eval(&x);
                (x, y)
            }).collect();
            prop_assert_eq!(RatPolynomial::interpolate(&points).unwrap(), p);
        }
    }
}
