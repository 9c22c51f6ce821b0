//! Symmetric functions as finite coefficient maps over a tagged basis, and
//! the monomial-coefficient route to `X_ρ^λ = ⟨p_ρ, h_λ⟩`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{all_partitions, Partition};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Power,
    Homogeneous,
}

/// A homogeneous symmetric function `Σ c_λ b_λ` in one of the classical
/// bases. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFunction {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymmetricFunction {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymmetricFunction {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(basis, lambda.weight());
        f.coeffs.insert(lambda.clone(), BigInt::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, lambda: Partition, c: BigInt) {
        debug_assert_eq!(lambda.weight(), self.degree);
        let entry = self.coeffs.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// `p_k · f` for `f` in the monomial basis.
    ///
    /// `p_k m_μ = Σ_ν c_ν m_ν` where `ν` runs over `μ` with `k` added to one
    /// part, or with a new part `k` appended. The coefficient `c_ν` counts
    /// the positions `i` of `ν` with `ν_i ≥ k` such that subtracting `k` at
    /// `i` and re-sorting gives back `μ`; this is where equal parts of `ν`
    /// contribute multiplicity.
    pub fn times_power_sum(&self, k: usize) -> SymmetricFunction {
        assert_eq!(self.basis, Basis::Monomial, "product rule is stated in the monomial basis");
        assert!(k > 0);
        let mut out = Self::zero(Basis::Monomial, self.degree + k);
        for (mu, c) in &self.coeffs {
            for (nu, mult) in power_sum_times_monomial(k, mu) {
                out.add_term(nu, c * BigInt::from(mult));
            }
        }
        out
    }
}

fn power_sum_times_monomial(k: usize, mu: &Partition) -> Vec<(Partition, usize)> {
    let mut candidates: Vec<Partition> = mu
        .multiplicities()
        .iter()
        .map(|&(value, _)| {
            let mut parts = mu.parts().to_vec();
            let pos = parts.iter().position(|&p| p == value).unwrap();
            parts[pos] += k;
            Partition::normalized(parts)
        })
        .collect();
    let mut appended = mu.parts().to_vec();
    appended.push(k);
    candidates.push(Partition::normalized(appended));
    candidates.sort();
    candidates.dedup();

    candidates
        .into_iter()
        .map(|nu| {
            let mult = (0..nu.len())
                .filter(|&i| nu.part(i) >= k)
                .filter(|&i| {
                    let mut parts = nu.parts().to_vec();
                    parts[i] -= k;
                    Partition::normalized(parts) == *mu
                })
                .count();
            (nu, mult)
        })
        .filter(|(_, m)| *m > 0)
        .collect()
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.basis {
            Basis::Monomial => "m",
            Basis::Power => "p",
            Basis::Homogeneous => "h",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{symbol}{lambda}")?;
            } else {
                write!(f, "{c}*{symbol}{lambda}")?;
            }
        }
        Ok(())
    }
}

/// `p_ρ` in the monomial basis, by multiplying in the factors `p_{ρ_i}` in
/// the order given.
pub fn power_product_to_monomial(factors: &[usize]) -> SymmetricFunction {
    factors.iter().fold(
        SymmetricFunction::basis_element(Basis::Monomial, &Partition::empty()),
        |acc, &k| acc.times_power_sum(k),
    )
}

/// `p_ρ = p_{ρ₁}⋯p_{ρ_s}` in the monomial basis.
pub fn power_to_monomial(rho: &Partition) -> SymmetricFunction {
    power_product_to_monomial(rho.parts())
}

/// `⟨p_ρ, h_λ⟩`, read off as the coefficient of `m_λ` in `p_ρ` since
/// `h` and `m` are dual bases.
pub fn scalar_product_ph(rho: &Partition, lambda: &Partition) -> Result<BigInt> {
    rho.check_same_weight(lambda)?;
    Ok(power_to_monomial(rho).coeff(lambda))
}

/// `h_λ` in the monomial basis. The coefficient of `m_μ` is the number of
/// non-negative integer matrices with row sums `λ` and column sums `μ`.
/// Used by the consistency checks; the scalar product never needs it.
pub fn homogeneous_to_monomial(lambda: &Partition) -> SymmetricFunction {
    let n = lambda.weight();
    let mut out = SymmetricFunction::zero(Basis::Monomial, n);
    for mu in all_partitions(n) {
        let count = count_matrices(lambda.parts(), mu.parts().to_vec());
        if !count.is_zero() {
            out.add_term(mu, BigInt::from(count));
        }
    }
    out
}

fn count_matrices(rows: &[usize], cols: Vec<usize>) -> BigUint {
    let Some((&first, rest)) = rows.split_first() else {
        return if cols.iter().all(|&c| c == 0) { BigUint::one() } else { BigUint::zero() };
    };
    let mut total = BigUint::zero();
    let mut row = vec![0; cols.len()];
    fill_row(first, 0, &cols, &mut row, &mut |row| {
        let remaining: Vec<usize> = cols.iter().zip(row).map(|(c, r)| c - r).collect();
        total += count_matrices(rest, remaining);
    });
    total
}

fn fill_row(left: usize, j: usize, cols: &[usize], row: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if j == cols.len() {
        if left == 0 {
            emit(row);
        }
        return;
    }
    for v in 0..=left.min(cols[j]) {
        row[j] = v;
        fill_row(left - v, j + 1, cols, row, emit);
    }
    row[j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    type Poly = HashMap<Vec<u32>, i64>;

    /// Multivariate polynomial product in a fixed number of variables.
    fn poly_mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn one(vars: usize) -> Poly {
        Poly::from([(vec![0; vars], 1)])
    }

    fn power_sum_poly(k: u32, vars: usize) -> Poly {
        (0..vars)
            .map(|i| {
                let mut e = vec![0; vars];
                e[i] = k;
                (e, 1)
            })
            .collect()
    }

    fn complete_poly(k: u32, vars: usize) -> Poly {
        // h_k = sum of all monomials of degree k
        let mut out = Poly::new();
        let mut e = vec![0u32; vars];
        fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Poly) {
            if i + 1 == e.len() {
                e[i] = left;
                out.insert(e.clone(), 1);
                return;
            }
            for v in 0..=left {
                e[i] = v;
                rec(i + 1, left - v, e, out);
            }
        }
        rec(0, k, &mut e, &mut out);
        out
    }

    fn monomial_coeff(poly: &Poly, lambda: &Partition, vars: usize) -> i64 {
        let e: Vec<u32> = (0..vars).map(|i| lambda.part(i) as u32).collect();
        poly.get(&e).copied().unwrap_or(0)
    }

    #[test]
    fn small_expansions() {
        assert_eq!(power_to_monomial(&p(&[1])), SymmetricFunction::basis_element(Basis::Monomial, &p(&[1])));
        for n in 1..=6 {
            assert_eq!(
                power_to_monomial(&Partition::row(n)),
                SymmetricFunction::basis_element(Basis::Monomial, &Partition::row(n))
            );
        }
        let f = power_to_monomial(&p(&[2, 1]));
        assert_eq!(f.to_string(), "m(3) + m(2,1)");
        assert_eq!(scalar_product_ph(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::one());
        assert_eq!(
            scalar_product_ph(&p(&[3, 2, 2, 2, 1]), &p(&[7, 3])).unwrap(),
            BigInt::from(4)
        );
        assert!(scalar_product_ph(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn product_rule_matches_concrete_variables() {
        for n in 1..=5 {
            for rho in all_partitions(n) {
                let expanded = rho
                    .parts()
                    .iter()
                    .fold(one(n), |acc, &k| poly_mul(&acc, &power_sum_poly(k as u32, n)));
                let f = power_to_monomial(&rho);
                for lambda in all_partitions(n) {
                    assert_eq!(
                        f.coeff(&lambda),
                        BigInt::from(monomial_coeff(&expanded, &lambda, n)),
                        "p{rho} at m{lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn homogeneous_expansion_matches_concrete_variables() {
        for n in 1..=5 {
            for lambda in all_partitions(n) {
                let expanded = lambda
                    .parts()
                    .iter()
                    .fold(one(n), |acc, &k| poly_mul(&acc, &complete_poly(k as u32, n)));
                let f = homogeneous_to_monomial(&lambda);
                for mu in all_partitions(n) {
                    assert_eq!(f.coeff(&mu), BigInt::from(monomial_coeff(&expanded, &mu, n)));
                }
            }
        }
    }

    /// `⟨h_λ, h_μ⟩ = Σ_ρ z_ρ⁻¹ ⟨p_ρ,h_λ⟩⟨p_ρ,h_μ⟩` ties the two expansions
    /// together through the power-sum orthogonality `⟨p_ρ,p_σ⟩ = δ z_ρ`.
    #[test]
    fn cauchy_identity() {
        use num_rational::BigRational;
        for n in 1..=6 {
            let parts = all_partitions(n);
            for lambda in &parts {
                let h = homogeneous_to_monomial(lambda);
                for mu in &parts {
                    let mut sum = BigRational::zero();
                    for rho in &parts {
                        let a = scalar_product_ph(rho, lambda).unwrap();
                        let b = scalar_product_ph(rho, mu).unwrap();
                        let z = BigInt::from(rho.centralizer_order());
                        sum += BigRational::new(a * b, z);
                    }
                    assert_eq!(sum, BigRational::from_integer(h.coeff(mu)));
                }
            }
        }
    }

    #[test]
    fn coefficients_nonnegative_and_top_coefficient_one() {
        for n in 1..=8 {
            for rho in all_partitions(n) {
                let f = power_to_monomial(&rho);
                assert!(f.terms().all(|(l, c)| c > &BigInt::zero() && l.weight() == n));
                assert_eq!(f.coeff(&Partition::row(n)), BigInt::one());
            }
        }
    }

    #[test]
    fn factor_order_does_not_matter() {
        let orders: [&[usize]; 4] = [&[3, 2, 1, 1], &[1, 3, 1, 2], &[2, 1, 1, 3], &[1, 1, 2, 3]];
        let reference = power_product_to_monomial(orders[0]);
        for order in orders {
            assert_eq!(power_product_to_monomial(order), reference);
        }
    }
}
