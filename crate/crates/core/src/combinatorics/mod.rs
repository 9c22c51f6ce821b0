//! Partitions, permutations, the assignment sets `P(ρ,λ)` and three of the
//! routes to `X_ρ^λ`: enumeration, recursion and coset counting.

mod assignment;
mod induced;
mod partition;
mod permutation;

pub use assignment::{
    collapse, enumerate_p, enumerate_unordered, x_count, x_recursive, AssignmentMap,
    UnorderedAssignment,
};
pub use induced::{induced_trivial_value, minimal_coset_representatives};
pub use partition::{all_partitions, Partition};
pub use permutation::{all_permutations, PermutationW};

pub(crate) use partition::factorial;
pub(crate) use permutation::lex_rank;
