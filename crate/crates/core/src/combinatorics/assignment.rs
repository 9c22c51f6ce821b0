//! The sets `P(ρ,λ)` of assignments of the parts of `ρ` to the parts of `λ`
//! and their quotient `[P(ρ,λ)]` by reordering equal parts.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::Partition;

/// An element `ζ` of `P(ρ,λ)`: part `j` of `ρ` is sent to part `target[j]`
/// of `λ`, and each `λ_i` is the sum of the `ρ_j` sent to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssignmentMap {
    target: Vec<usize>,
    rho: Partition,
    lambda: Partition,
}

impl AssignmentMap {
    /// Builds `ζ` from 1-based targets, checking the defining sum condition.
    pub fn new(rho: &Partition, lambda: &Partition, targets: &[usize]) -> Result<Self> {
        if targets.len() != rho.len() {
            return Err(Error::InvalidPartition(format!(
                "{} targets given for the {} parts of {rho}",
                targets.len(),
                rho.len()
            )));
        }
        if targets.iter().any(|&t| t == 0 || t > lambda.len()) {
            return Err(Error::InvalidPartition(format!(
                "targets {targets:?} out of range for {lambda}"
            )));
        }
        let map = AssignmentMap {
            target: targets.iter().map(|t| t - 1).collect(),
            rho: rho.clone(),
            lambda: lambda.clone(),
        };
        if !map.satisfies_sum_condition() {
            return Err(Error::InvalidPartition(format!(
                "targets {targets:?} do not assemble {lambda} from {rho}"
            )));
        }
        Ok(map)
    }

    /// 1-based target sequence `(ζ(1),…,ζ(s))`.
    pub fn targets(&self) -> Vec<usize> {
        self.target.iter().map(|t| t + 1).collect()
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn satisfies_sum_condition(&self) -> bool {
        let mut sums = vec![0; self.lambda.len()];
        for (j, &i) in self.target.iter().enumerate() {
            sums[i] += self.rho.part(j);
        }
        sums == self.lambda.parts()
    }
}

/// A class `[ζ] ∈ [P(ρ,λ)]`: a multiset of blocks, each a `λ` part value
/// together with the multiset of `ρ` part values assigned to it.
///
/// Blocks are kept sorted (assigned values descending, blocks descending),
/// so structural equality is equality of classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnorderedAssignment {
    blocks: Vec<(usize, Vec<usize>)>,
}

impl UnorderedAssignment {
    /// Builds a class from `(target value, assigned values)` blocks, checking
    /// that each target value is the sum of its assigned values.
    pub fn from_blocks(blocks: Vec<(usize, Vec<usize>)>) -> Result<Self> {
        for (value, assigned) in &blocks {
            if assigned.is_empty() || assigned.iter().sum::<usize>() != *value || assigned.contains(&0) {
                return Err(Error::InvalidPartition(format!(
                    "block {assigned:?} does not sum to {value}"
                )));
            }
        }
        Ok(Self::canonical(blocks))
    }

    fn canonical(mut blocks: Vec<(usize, Vec<usize>)>) -> Self {
        for (_, assigned) in blocks.iter_mut() {
            assigned.sort_unstable_by(|a, b| b.cmp(a));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        UnorderedAssignment { blocks }
    }

    pub fn blocks(&self) -> &[(usize, Vec<usize>)] {
        &self.blocks
    }

    /// The partition formed by the block values (the codomain multiset).
    pub fn target_partition(&self) -> Partition {
        Partition::normalized(self.blocks.iter().map(|(v, _)| *v).collect())
    }

    /// The partition formed by all assigned values (the domain multiset).
    pub fn source_partition(&self) -> Partition {
        Partition::normalized(self.blocks.iter().flat_map(|(_, a)| a.iter().copied()).collect())
    }
}

impl fmt::Display for UnorderedAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (value, assigned)) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            let a: Vec<String> = assigned.iter().map(usize::to_string).collect();
            write!(f, "{} -> {}", a.join(","), value)?;
        }
        Ok(())
    }
}

/// All of `P(ρ,λ)`, in lexicographic order of the target sequence.
pub fn enumerate_p(rho: &Partition, lambda: &Partition) -> Result<Vec<AssignmentMap>> {
    rho.check_same_weight(lambda)?;
    let mut out = Vec::new();
    let mut capacity: Vec<usize> = lambda.parts().to_vec();
    let mut target = Vec::with_capacity(rho.len());
    assign(rho.parts(), &mut capacity, &mut target, &mut |t| {
        out.push(AssignmentMap {
            target: t.to_vec(),
            rho: rho.clone(),
            lambda: lambda.clone(),
        })
    });
    Ok(out)
}

fn assign(
    rho: &[usize],
    capacity: &mut [usize],
    target: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let j = target.len();
    if j == rho.len() {
        // Weights agree, so placing every part exhausts every capacity.
        debug_assert!(capacity.iter().all(|&c| c == 0));
        emit(target);
        return;
    }
    for i in 0..capacity.len() {
        if capacity[i] >= rho[j] {
            capacity[i] -= rho[j];
            target.push(i);
            assign(rho, capacity, target, emit);
            target.pop();
            capacity[i] += rho[j];
        }
    }
}

/// The class `[ζ]`, forgetting the order of equal parts.
pub fn collapse(zeta: &AssignmentMap) -> UnorderedAssignment {
    let mut blocks: Vec<(usize, Vec<usize>)> =
        zeta.lambda.parts().iter().map(|&v| (v, Vec::new())).collect();
    for (j, &i) in zeta.target.iter().enumerate() {
        blocks[i].1.push(zeta.rho.part(j));
    }
    UnorderedAssignment::canonical(blocks)
}

/// The distinct classes `[P(ρ,λ)]`, sorted.
pub fn enumerate_unordered(rho: &Partition, lambda: &Partition) -> Result<Vec<UnorderedAssignment>> {
    let classes: BTreeSet<_> = enumerate_p(rho, lambda)?.iter().map(collapse).collect();
    Ok(classes.into_iter().collect())
}

/// `X_ρ^λ = |P(ρ,λ)|`, counted by exhaustive search without materializing
/// the maps.
pub fn x_count(rho: &Partition, lambda: &Partition) -> Result<BigUint> {
    rho.check_same_weight(lambda)?;
    let mut capacity: Vec<usize> = lambda.parts().to_vec();
    let mut count = 0u64;
    let mut target = Vec::with_capacity(rho.len());
    assign(rho.parts(), &mut capacity, &mut target, &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// `X_ρ^λ` by peeling off the largest cycle: the largest part `ρ₁` goes into
/// some part `λ_i ≥ ρ₁`, and the rest is an instance of size `n − ρ₁`.
pub fn x_recursive(rho: &Partition, lambda: &Partition) -> Result<BigUint> {
    rho.check_same_weight(lambda)?;
    let mut memo = HashMap::new();
    Ok(recurse(rho, lambda, &mut memo))
}

fn recurse(
    rho: &Partition,
    lambda: &Partition,
    memo: &mut HashMap<(Partition, Partition), BigUint>,
) -> BigUint {
    if rho.is_empty() {
        return if lambda.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    if let Some(v) = memo.get(&(rho.clone(), lambda.clone())) {
        return v.clone();
    }
    let first = rho.part(0);
    let rest = Partition::normalized(rho.parts()[1..].to_vec());
    let mut total = BigUint::zero();
    for i in 0..lambda.len() {
        if lambda.part(i) >= first {
            let mut reduced = lambda.parts().to_vec();
            reduced[i] -= first;
            total += recurse(&rest, &Partition::normalized(reduced), memo);
        }
    }
    memo.insert((rho.clone(), lambda.clone()), total.clone());
    total
}
