use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use crate::error::Result;

use super::{Partition, PermutationW};

/// Block index of each point under the consecutive-block embedding
/// `S_λ = S_{λ₁} × ⋯ × S_{λ_r} ⊂ S_n`.
fn block_labels(lambda: &Partition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
        .collect()
}

/// Minimal-length representatives of the left cosets `vS_λ`: the
/// permutations increasing on every block. Generated breadth-first from the
/// identity by left multiplication with simple reflections.
pub fn minimal_coset_representatives(lambda: &Partition) -> Vec<PermutationW> {
    let n = lambda.weight();
    let blocks = block_labels(lambda);
    let is_minimal = |images: &[usize]| {
        (1..n).all(|x| blocks[x] != blocks[x - 1] || images[x - 1] < images[x])
    };
    let start: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for i in 0..n.saturating_sub(1) {
            // s_i v swaps the values i and i+1.
            let next: Vec<usize> = v
                .iter()
                .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                .collect();
            if is_minimal(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(PermutationW::from_images(v).expect("coset representative is a permutation"));
    }
    out
}

/// `ind_{S_λ}^{S_n} 1` evaluated at a permutation of cycle type `ρ`: the
/// number of cosets `vS_λ` fixed by `w`, i.e. with `v⁻¹wv ∈ S_λ`.
pub fn induced_trivial_value(lambda: &Partition, rho: &Partition) -> Result<BigUint> {
    lambda.check_same_weight(rho)?;
    let w = PermutationW::class_representative(rho);
    let blocks = block_labels(lambda);
    let fixed = minimal_coset_representatives(lambda)
        .into_iter()
        .filter(|v| {
            let conj = &(&v.inverse() * &w) * v;
            (0..conj.n()).all(|x| blocks[conj.image(x)] == blocks[x])
        })
        .count();
    Ok(BigUint::from(fixed))
}
