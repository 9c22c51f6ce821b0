//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::combinatorics::{all_partitions, factorial, induced_trivial_value, Partition};
use crate::error::{Error, Result};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// `χ^μ(ρ)`.
pub fn mn_character(mu: &Partition, rho: &Partition) -> Result<i64> {
    mu.check_same_weight(rho)?;
    Ok(mn(mu.parts(), rho.parts(), &mut Memo::new()))
}

/// Border-strip recursion. Class parts are consumed largest first; removing
/// a strip of size `k` is moving a bead from `β` to `β − k` on the abacus of
/// beta-numbers, with sign `(−1)^{beads strictly between}`.
fn mn(shape: &[usize], classes: &[usize], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = classes.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    let key = (shape.to_vec(), classes.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = b - k;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let reduced: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&reduced, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The character table of `S_n`: `rows[μ][ρ] = χ^μ(ρ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    rows: BTreeMap<Partition, BTreeMap<Partition, i64>>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Self {
        let parts = all_partitions(n);
        let mut memo = Memo::new();
        let rows = parts
            .iter()
            .map(|mu| {
                let row = parts
                    .iter()
                    .map(|rho| (rho.clone(), mn(mu.parts(), rho.parts(), &mut memo)))
                    .collect();
                (mu.clone(), row)
            })
            .collect();
        CharacterTable { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `χ^μ(ρ)`; panics if either label is not a partition of `n`.
    pub fn value(&self, mu: &Partition, rho: &Partition) -> i64 {
        self.rows[mu][rho]
    }

    pub fn rows(&self) -> &BTreeMap<Partition, BTreeMap<Partition, i64>> {
        &self.rows
    }

    /// Labels in table order (ascending lexicographic).
    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.rows.keys()
    }

    /// `χ^μ(1ⁿ)`.
    pub fn dimension(&self, mu: &Partition) -> i64 {
        self.value(mu, &Partition::column(self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityViolation {
    pub left: Partition,
    pub right: Partition,
    pub sum: BigInt,
    pub expected: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub violations: Vec<OrthogonalityViolation>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&OrthogonalityViolation> {
        self.violations.first()
    }
}

/// `Σ_μ χ^μ(ρ)χ^μ(ρ′) = δ_{ρρ′} z_ρ` over all class pairs.
pub fn column_orthogonality_check(n: usize) -> OrthogonalityReport {
    let table = CharacterTable::build(n);
    let classes = all_partitions(n);
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for rho in &classes {
        for sigma in &classes {
            pairs_checked += 1;
            let sum: i64 = table.labels().map(|mu| table.value(mu, rho) * table.value(mu, sigma)).sum();
            let expected = if rho == sigma {
                BigInt::from(rho.centralizer_order())
            } else {
                BigInt::zero()
            };
            if BigInt::from(sum) != expected {
                violations.push(OrthogonalityViolation {
                    left: rho.clone(),
                    right: sigma.clone(),
                    sum: BigInt::from(sum),
                    expected,
                });
            }
        }
    }
    OrthogonalityReport {
        n,
        pairs_checked,
        violations,
    }
}

/// `Σ_ρ (n!/z_ρ) χ^μ(ρ)χ^ν(ρ) = n! δ_{μν}` over all irreducible pairs.
pub fn row_orthogonality_check(n: usize) -> OrthogonalityReport {
    let table = CharacterTable::build(n);
    let classes = all_partitions(n);
    let order = BigInt::from(factorial(n));
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for mu in table.labels() {
        for nu in table.labels() {
            pairs_checked += 1;
            let sum: BigInt = classes
                .iter()
                .map(|rho| {
                    let class_size = &order / BigInt::from(rho.centralizer_order());
                    class_size * table.value(mu, rho) * table.value(nu, rho)
                })
                .sum();
            let expected = if mu == nu { order.clone() } else { BigInt::zero() };
            if sum != expected {
                violations.push(OrthogonalityViolation {
                    left: mu.clone(),
                    right: nu.clone(),
                    sum,
                    expected,
                });
            }
        }
    }
    OrthogonalityReport {
        n,
        pairs_checked,
        violations,
    }
}

/// Multiplicities of the irreducibles in `ind_{S_λ}^{S_n} 1`, recovered as
/// inner products `⟨ind 1, χ^μ⟩ = Σ_ρ z_ρ⁻¹ ind1(ρ) χ^μ(ρ)` with the induced
/// character evaluated by coset counting. Zero multiplicities are omitted.
pub fn youngs_rule_decomposition(lambda: &Partition) -> Result<BTreeMap<Partition, BigUint>> {
    let n = lambda.weight();
    let table = CharacterTable::build(n);
    let classes = all_partitions(n);
    let induced: Vec<BigInt> = classes
        .iter()
        .map(|rho| induced_trivial_value(lambda, rho).map(BigInt::from))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for mu in table.labels() {
        let mut sum = BigRational::zero();
        for (rho, value) in classes.iter().zip(&induced) {
            sum += BigRational::new(
                value * BigInt::from(table.value(mu, rho)),
                BigInt::from(rho.centralizer_order()),
            );
        }
        if !sum.is_integer() || sum.is_negative() {
            return Err(Error::Internal(format!(
                "multiplicity of {mu} in the induced trivial character of {lambda} is {sum}"
            )));
        }
        let m = sum.to_integer();
        if !m.is_zero() {
            out.insert(mu.clone(), m.to_biguint().expect("non-negative"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=7 {
            for rho in all_partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &rho).unwrap(), 1);
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::column(n), &rho).unwrap(), sign);
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn orthogonality_up_to_eight() {
        for n in 1..=8 {
            let col = column_orthogonality_check(n);
            assert!(col.passed(), "{:?}", col.first_violation());
            let row = row_orthogonality_check(n);
            assert!(row.passed(), "{:?}", row.first_violation());
        }
    }

    #[test]
    fn column_sum_for_three_cycle() {
        let t = CharacterTable::build(3);
        let three = p(&[3]);
        let sum: i64 = t.labels().map(|mu| t.value(mu, &three).pow(2)).sum();
        assert_eq!(sum, 3);
        let cross: i64 = t
            .labels()
            .map(|mu| t.value(mu, &three) * t.value(mu, &Partition::column(3)))
            .sum();
        assert_eq!(cross, 0);
    }

    #[test]
    fn table_shape() {
        for n in 1..=8 {
            let t = CharacterTable::build(n);
            assert_eq!(t.rows().len(), all_partitions(n).len());
            assert!(t.rows()[&Partition::row(n)].values().all(|&v| v == 1));
            assert!(t.labels().all(|mu| t.dimension(mu) > 0));
        }
    }

    #[test]
    fn young_rule_small_cases() {
        let d = youngs_rule_decomposition(&p(&[2, 1])).unwrap();
        assert_eq!(
            d,
            BTreeMap::from([(p(&[3]), BigUint::from(1u32)), (p(&[2, 1]), BigUint::from(1u32))])
        );
        for n in 1..=6 {
            let d = youngs_rule_decomposition(&Partition::row(n)).unwrap();
            assert_eq!(d, BTreeMap::from([(Partition::row(n), BigUint::from(1u32))]));
        }
    }

    /// Standard Young tableaux counted by the hook length formula.
    fn hook_length_count(mu: &Partition) -> BigUint {
        let conj = mu.conjugate();
        let mut hooks = BigUint::from(1u32);
        for (i, &row) in mu.parts().iter().enumerate() {
            for j in 0..row {
                hooks *= BigUint::from(row - j + conj.part(j) - i - 1);
            }
        }
        factorial(mu.weight()) / hooks
    }

    #[test]
    fn regular_representation_multiplicities_are_dimensions() {
        for n in 1..=6 {
            let t = CharacterTable::build(n);
            let d = youngs_rule_decomposition(&Partition::column(n)).unwrap();
            for mu in t.labels() {
                assert_eq!(d[mu], hook_length_count(mu));
                assert_eq!(BigUint::from(t.dimension(mu) as u64), hook_length_count(mu));
            }
        }
    }
}
