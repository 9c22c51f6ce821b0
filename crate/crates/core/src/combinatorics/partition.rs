use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition, stored with parts sorted non-increasing.
///
/// The derived ordering compares part sequences lexicographically, so
/// `(1,1,1) < (2,1) < (3)`. Tables are laid out in this order;
/// [`all_partitions`] yields the reverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Drops zero parts and sorts. For internal recursions that produce
    /// zero parts as a matter of course.
    pub(crate) fn normalized(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::normalized(vec![n])
    }

    /// The partition `(1,...,1)` of `n`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Distinct part values with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `λ! = λ₁!⋯λ_r!`, the order of the Young subgroup.
    pub fn factorial_product(&self) -> BigUint {
        self.parts
            .iter()
            .map(|&p| factorial(p))
            .fold(BigUint::one(), |acc, f| acc * f)
    }

    /// Centralizer order `z_λ = Π_i i^{m_i} m_i!` of a permutation of cycle type `λ`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (i, m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// `n(λ) = Σ (i−1)λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self ⊵ other` iff every partial sum of `self` is at
    /// least the corresponding partial sum of `other`. Weights must agree.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Errors unless both partitions have the same weight.
    pub(crate) fn check_same_weight(&self, other: &Partition) -> Result<()> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch {
                left: self.to_string(),
                left_weight: self.weight(),
                right: other.to_string(),
                right_weight: other.weight(),
            });
        }
        Ok(())
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `3,2,2,2,1`, `(3,2,2,2,1)` and the empty forms `` / `()`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Every partition of `n` exactly once, in reverse-lexicographic order:
/// `(n)` first, `(1,…,1)` last.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition numbers from the pentagonal-number recurrence, independent
    /// of the generator above.
    fn partition_count(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for k in 1.. {
                let k = k as i64;
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * table[m - g1];
                if g2 <= m {
                    total += sign * table[m - g2];
                }
            }
            table[m] = total;
        }
        table[n]
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all_partitions(0), vec![Partition::empty()]);
        assert_eq!(all_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(all_partitions(8).len(), 22);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        for n in 0..=20 {
            assert_eq!(all_partitions(n).len() as i64, partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let all = all_partitions(9);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|l| l.weight() == 9));
    }

    #[test]
    fn construction_normalizes_and_rejects_zero() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("3,2,2,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 2, 2, 1]));
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn derived_quantities() {
        let rho = p(&[3, 2, 2, 2, 1]);
        // z = 3 * 2^3 * 3! * 1
        assert_eq!(rho.centralizer_order(), BigUint::from(144u32));
        assert_eq!(p(&[7, 3]).factorial_product(), BigUint::from(5040u32 * 6));
        assert_eq!(p(&[3, 2, 1]).n_statistic(), 2 + 2);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(rho.multiplicities(), vec![(3, 1), (2, 3), (1, 1)]);
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[2, 1])));
        assert!(p(&[2, 1]).dominates(&p(&[1, 1, 1])));
        assert!(!p(&[2, 1, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }
}
