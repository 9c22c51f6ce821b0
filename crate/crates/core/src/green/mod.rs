//! Kostka–Foulkes polynomials from the charge statistic and Green
//! polynomials `Q_ρ^λ(q)` of `GL_n`.
//!
//! Normalization: `Q_ρ^λ(q) = q^{n(λ)} Σ_μ χ^μ(ρ) K_{μλ}(q⁻¹)`. With this
//! choice `Q_ρ^{(2)} = 1`, `Q_{(1,1)}^{(1,1)} = q + 1`, `Q_{(2)}^{(1,1)} = 1 − q`,
//! `Q_ρ^{(1ⁿ)}` is the signed ratio `Π(q^i−1)/Π(q^{ρ_j}−1)`, and
//! `Q_ρ^λ(1) = X_ρ^λ`.

mod polynomial;
mod tableau;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};

use crate::characters::CharacterTable;
use crate::combinatorics::{all_partitions, Partition};
use crate::error::Result;

pub use polynomial::IntPolynomial;
pub use tableau::{charge, ssyt_enumerate, word_charge, Tableau};

/// `K_{μλ}(t) = Σ_T t^{charge(T)}` over semistandard tableaux of shape `μ`
/// and content `λ`.
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> Result<IntPolynomial> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in ssyt_enumerate(mu, lambda)? {
        let c = charge(&t)?;
        if coeffs.len() <= c {
            coeffs.resize(c + 1, BigInt::default());
        }
        coeffs[c] += 1;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `K_{μλ} = K_{μλ}(1)`, the number of semistandard tableaux.
pub fn kostka_number(mu: &Partition, lambda: &Partition) -> Result<BigUint> {
    Ok(BigUint::from(ssyt_enumerate(mu, lambda)?.len()))
}

/// `Q_ρ^λ(q)`.
pub fn green_polynomial(rho: &Partition, lambda: &Partition) -> Result<IntPolynomial> {
    rho.check_same_weight(lambda)?;
    let table = CharacterTable::build(rho.weight());
    let kf: Vec<(Partition, IntPolynomial)> = table
        .labels()
        .map(|mu| kostka_foulkes(mu, lambda).map(|k| (mu.clone(), k)))
        .collect::<Result<_>>()?;
    assemble(&table, &kf, rho, lambda)
}

fn assemble(
    table: &CharacterTable,
    kf: &[(Partition, IntPolynomial)],
    rho: &Partition,
    lambda: &Partition,
) -> Result<IntPolynomial> {
    let combined = kf.iter().fold(IntPolynomial::zero(), |acc, (mu, k)| {
        &acc + &k.scale(&BigInt::from(table.value(mu, rho)))
    });
    combined.reflect(lambda.n_statistic())
}

/// All Green polynomials of `GL_n`, keyed by `(ρ, λ)`.
#[derive(Clone, Debug)]
pub struct GreenTable {
    pub n: usize,
    pub entries: BTreeMap<(Partition, Partition), IntPolynomial>,
}

impl GreenTable {
    pub fn build(n: usize) -> Result<Self> {
        let table = CharacterTable::build(n);
        let parts = all_partitions(n);
        let mut entries = BTreeMap::new();
        for lambda in &parts {
            let kf: Vec<(Partition, IntPolynomial)> = table
                .labels()
                .map(|mu| kostka_foulkes(mu, lambda).map(|k| (mu.clone(), k)))
                .collect::<Result<_>>()?;
            for rho in &parts {
                entries.insert((rho.clone(), lambda.clone()), assemble(&table, &kf, rho, lambda)?);
            }
        }
        Ok(GreenTable { n, entries })
    }

    pub fn get(&self, rho: &Partition, lambda: &Partition) -> Option<&IntPolynomial> {
        self.entries.get(&(rho.clone(), lambda.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::x_count;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn kostka_foulkes_small() {
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly(&[0, 1, 1]));
        for lambda in all_partitions(6) {
            assert_eq!(kostka_foulkes(&lambda, &lambda).unwrap(), IntPolynomial::one());
            assert_eq!(
                kostka_foulkes(&Partition::row(6), &lambda).unwrap(),
                IntPolynomial::monomial(BigInt::from(1), lambda.n_statistic())
            );
        }
    }

    #[test]
    fn green_n_two() {
        let (two, one_one) = (p(&[2]), p(&[1, 1]));
        assert_eq!(green_polynomial(&one_one, &one_one).unwrap(), poly(&[1, 1]));
        assert_eq!(green_polynomial(&two, &one_one).unwrap(), poly(&[1, -1]));
        assert_eq!(green_polynomial(&two, &two).unwrap(), IntPolynomial::one());
        assert_eq!(green_polynomial(&one_one, &two).unwrap(), IntPolynomial::one());
        assert!(green_polynomial(&two, &p(&[1])).is_err());
    }

    #[test]
    fn green_at_one_is_x_for_small_n() {
        for n in 1..=5 {
            let t = GreenTable::build(n).unwrap();
            for ((rho, lambda), q) in &t.entries {
                assert_eq!(q.eval_at_one(), BigInt::from(x_count(rho, lambda).unwrap()));
                assert_eq!(Some(q), green_polynomial(rho, lambda).ok().as_ref());
            }
        }
    }

    #[test]
    fn column_green_polynomial_closed_form() {
        for n in 1..=5 {
            let lambda = Partition::column(n);
            let numerator = (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &IntPolynomial::x_pow_minus_one(i));
            for rho in all_partitions(n) {
                let denominator = rho
                    .parts()
                    .iter()
                    .fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::x_pow_minus_one(r));
                let mut expected = numerator.div_exact(&denominator).unwrap();
                if (n - rho.len()) % 2 == 1 {
                    expected = -&expected;
                }
                assert_eq!(green_polynomial(&rho, &lambda).unwrap(), expected, "rho = {rho}");
            }
        }
    }
}
