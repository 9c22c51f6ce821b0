use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial with exact integer coefficients, ascending
/// degree. Empty for the zero polynomial, otherwise the top coefficient is
/// nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k − 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = -BigInt::one();
        coeffs[k] += BigInt::one();
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x^shift · f(1/x)` where every exponent of `f` is at most `shift`.
    /// Computed at the Laurent level; an exponent above `shift` would leave a
    /// negative power and is reported as an internal error.
    pub fn reflect(&self, shift: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > shift => Err(Error::Internal(format!(
                "x^{shift} * f(1/x) is not a polynomial for f = {self} of degree {d}"
            ))),
            Some(_) => {
                let mut coeffs = vec![BigInt::zero(); shift + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[shift - i] = c.clone();
                }
                Ok(Self::from_coeffs(coeffs))
            }
        }
    }

    /// Long division by a divisor whose top coefficient is a unit up to
    /// exact divisibility at every step; errors if the quotient would leave
    /// the integers.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Internal("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let (q, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "{self} is not divisible by {divisor} over the integers"
                )));
            }
            let shift = top - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; errors on a nonzero remainder.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "{divisor} does not divide {self}: remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Renders with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = abs.is_one() && i > 0;
            if !unit {
                out.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display_and_basic_ops() {
        assert_eq!(poly(&[1, -1]).to_string(), "-q + 1");
        assert_eq!(poly(&[0, 1, 1]).display_in("t"), "t^2 + t");
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(&poly(&[1, 1]) * &poly(&[-1, 1]), poly(&[-1, 0, 1]));
        assert_eq!(poly(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn reflection() {
        // t + t^2 reflected at 3 is q^2 + q
        assert_eq!(poly(&[0, 1, 1]).reflect(3).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(poly(&[1, 0, 2]).reflect(2).unwrap(), poly(&[2, 0, 1]));
        assert!(poly(&[0, 0, 0, 1]).reflect(2).is_err());
    }

    #[test]
    fn exact_division() {
        let num = &(&IntPolynomial::x_pow_minus_one(2) * &IntPolynomial::x_pow_minus_one(3))
            * &IntPolynomial::x_pow_minus_one(1);
        let q = num.div_exact(&IntPolynomial::x_pow_minus_one(3)).unwrap();
        assert_eq!(q, &IntPolynomial::x_pow_minus_one(1) * &IntPolynomial::x_pow_minus_one(2));
        assert!(poly(&[1, 0, 1]).div_exact(&poly(&[-1, 1])).is_err());
        assert!(poly(&[1, 1]).div_rem(&poly(&[1, 2])).is_err());
    }

    proptest! {
        #[test]
        fn product_then_divide_roundtrips(
            a in prop::collection::vec(-20i64..20, 1..6),
            b in prop::collection::vec(-20i64..20, 1..5),
        ) {
            let mut b = b;
            *b.last_mut().unwrap() = 1;
            let (a, b) = (poly(&a), poly(&b));
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
            let x = BigInt::from(3);
            prop_assert_eq!(prod.eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}
