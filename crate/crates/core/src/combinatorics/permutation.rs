use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

use super::Partition;

/// A permutation of `{1..n}`, an element of the Weyl group `S_n` of `GL_n`.
///
/// Stored 0-based; [`PermutationW::one_line`] and the cycle notation used by
/// `Display` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationW {
    images: Vec<usize>,
}

impl PermutationW {
    pub fn identity(n: usize) -> Self {
        PermutationW {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(PermutationW { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(format!(
                "{one_line:?} is not 1-based"
            )));
        }
        Self::from_images(one_line.iter().map(|&x| x - 1).collect())
    }

    /// Simple reflection `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!(
                "s_{i} does not exist in S_{n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(PermutationW { images })
    }

    /// The product of consecutive cycles `(1..ρ₁)(ρ₁+1..ρ₁+ρ₂)⋯`, a
    /// minimal-length element of cycle type `ρ`.
    pub fn class_representative(rho: &Partition) -> Self {
        let n = rho.weight();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in rho.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        PermutationW { images }
    }

    /// Parses cycle notation such as `(12)(34)`, `(1,2,3)` or `id`.
    /// Without commas each digit is one point, which limits that form to n ≤ 9.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut images: Vec<usize> = (0..n).collect();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(PermutationW { images });
        }
        let mut rest = s;
        let mut used = vec![false; n];
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let points: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("bad cycle {body:?}")))?
            } else {
                body.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad cycle {body:?}")))?
            };
            for &x in &points {
                if x == 0 || x > n || used[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} invalid or repeated in {s:?} for n = {n}"
                    )));
                }
                used[x - 1] = true;
            }
            for (k, &x) in points.iter().enumerate() {
                images[x - 1] = points[(k + 1) % points.len()] - 1;
            }
        }
        Ok(PermutationW { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        PermutationW { images }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles (0-based), each starting at its smallest point,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::normalized(self.cycles().iter().map(Vec::len).collect())
    }

    /// Rank of this permutation in the lexicographic order of `S_n`.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.images)
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Self {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial_usize(i);
            images.push(pool.remove(rank / f));
            rank %= f;
        }
        PermutationW { images }
    }
}

pub(crate) fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

pub(crate) fn lex_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank += smaller * factorial_usize(n - 1 - i);
    }
    rank
}

/// `(u * v)(x) = u(v(x))`.
impl Mul for &PermutationW {
    type Output = PermutationW;

    fn mul(self, rhs: &PermutationW) -> PermutationW {
        assert_eq!(self.n(), rhs.n(), "composing permutations of different degree");
        PermutationW {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }
}

impl fmt::Display for PermutationW {
    /// Cycle notation without fixed points, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        let sep = if self.n() > 9 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<PermutationW> {
    (0..factorial_usize(n))
        .map(|r| PermutationW::from_lex_rank(n, r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::all_partitions;
    use num_bigint::BigUint;
    use std::collections::BTreeMap;

    #[test]
    fn parse_and_display_cycles() {
        let w = PermutationW::parse_cycles("(12)(34)", 4).unwrap();
        assert_eq!(w.one_line(), vec![2, 1, 4, 3]);
        assert_eq!(w.to_string(), "(12)(34)");
        let c = PermutationW::parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(c.one_line(), vec![2, 3, 1]);
        assert!(PermutationW::parse_cycles("(11)", 3).is_err());
        assert!(PermutationW::parse_cycles("(14)", 3).is_err());
        assert!(PermutationW::parse_cycles("id", 3).unwrap().is_identity());
    }

    #[test]
    fn length_and_inverse() {
        for w in all_permutations(5) {
            assert_eq!(w.length(), w.inverse().length());
            assert!((&w * &w.inverse()).is_identity());
        }
        assert_eq!(PermutationW::identity(4).length(), 0);
        let w0 = PermutationW::from_one_line(&[4, 3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn class_representatives_are_minimal() {
        for n in 1..=6 {
            let perms = all_permutations(n);
            for rho in all_partitions(n) {
                let w = PermutationW::class_representative(&rho);
                assert_eq!(w.cycle_type(), rho);
                let min = perms
                    .iter()
                    .filter(|v| v.cycle_type() == rho)
                    .map(PermutationW::length)
                    .min()
                    .unwrap();
                assert_eq!(w.length(), min);
                assert_eq!(w.length(), n - rho.len());
            }
        }
    }

    #[test]
    fn class_sizes_times_centralizers_give_group_order() {
        for n in 1..=8 {
            let mut sizes: BTreeMap<Partition, usize> = BTreeMap::new();
            for w in all_permutations(n) {
                *sizes.entry(w.cycle_type()).or_default() += 1;
                assert_eq!(w.cycle_type().weight(), n);
            }
            assert_eq!(sizes.len(), all_partitions(n).len());
            for (rho, count) in sizes {
                assert_eq!(
                    rho.centralizer_order() * BigUint::from(count),
                    BigUint::from(factorial_usize(n)),
                    "rho = {rho}"
                );
            }
        }
    }

    #[test]
    fn lex_rank_roundtrip() {
        let all = all_permutations(4);
        for (r, w) in all.iter().enumerate() {
            assert_eq!(w.lex_rank(), r);
        }
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn composition_convention() {
        let s1 = PermutationW::simple_reflection(3, 1).unwrap();
        let s2 = PermutationW::simple_reflection(3, 2).unwrap();
        // s1 s2 sends 1 -> s1(1) = 2, 3 -> s1(2) = 1.
        let w = &s1 * &s2;
        assert_eq!(w.one_line(), vec![2, 3, 1]);
        assert!(PermutationW::simple_reflection(3, 3).is_err());
    }
}
