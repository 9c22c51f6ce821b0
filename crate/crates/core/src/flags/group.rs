use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::combinatorics::{all_partitions, Partition, UnorderedAssignment};
use crate::error::{Error, Result};
use crate::field::{Fe, FiniteField, MatrixGF};

/// Jordan data of a split element `g = g_s g_u` of `GL_n`: one partition of
/// unipotent block sizes per distinct eigenvalue slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElementSpec {
    slots: Vec<Partition>,
}

impl GroupElementSpec {
    pub fn new(slots: Vec<Partition>) -> Result<Self> {
        if slots.is_empty() || slots.iter().any(Partition::is_empty) {
            return Err(Error::InvalidPartition("every eigenvalue slot needs a nonempty partition".into()));
        }
        Ok(GroupElementSpec { slots })
    }

    /// A unipotent element of Jordan type `lambda`.
    pub fn unipotent(lambda: &Partition) -> Self {
        GroupElementSpec {
            slots: vec![lambda.clone()],
        }
    }

    /// A regular semisimple element: `n` distinct eigenvalues.
    pub fn regular_semisimple(n: usize) -> Self {
        GroupElementSpec {
            slots: vec![Partition::row(1); n],
        }
    }

    pub fn slots(&self) -> &[Partition] {
        &self.slots
    }

    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn n(&self) -> usize {
        self.slots.iter().map(Partition::weight).sum()
    }

    /// Jordan type of `g_u`: all block sizes together.
    pub fn lambda(&self) -> Partition {
        Partition::new(self.slots.iter().flat_map(|p| p.parts().iter().copied()).collect())
            .expect("slots are nonempty partitions")
    }

    /// Jordan type of `g_s`: the eigenspace dimensions.
    pub fn lambda_prime(&self) -> Partition {
        Partition::new(self.slots.iter().map(Partition::weight).collect()).expect("slot weights are positive")
    }

    /// `φ_g ∈ [P(λ, λ′)]`: which unipotent blocks sit in which eigenspace.
    pub fn phi(&self) -> UnorderedAssignment {
        UnorderedAssignment::from_blocks(self.slots.iter().map(|p| (p.weight(), p.parts().to_vec())).collect())
            .expect("each slot sums to its weight")
    }
}

impl fmt::Display for GroupElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.slots.iter().map(Partition::to_string).collect();
        write!(f, "{}", slots.join("|"))
    }
}

/// Parses `(2,1)|(1)`: slot partitions separated by `|`.
impl FromStr for GroupElementSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let slots = s
            .split('|')
            .map(|part| {
                let p: Partition = part.trim().parse()?;
                if p.is_empty() {
                    return Err(Error::Parse(format!("empty slot in spec '{s}'")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        GroupElementSpec::new(slots)
    }
}

/// Eigenvalues assigned to the slots of a spec.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum EigenvalueChoice {
    /// The first nonzero elements in enumeration order: 1, 2, 3, …
    #[default]
    First,
    /// Explicit element encodings, one per slot.
    Explicit(Vec<u32>),
}

impl EigenvalueChoice {
    pub fn resolve(&self, field: &FiniteField, slots: usize) -> Result<Vec<Fe>> {
        match self {
            EigenvalueChoice::First => {
                if slots as u64 > field.order() as u64 - 1 {
                    return Err(Error::TooFewEigenvalues {
                        order: field.order() as u64,
                        needed: slots,
                    });
                }
                Ok((1..=slots as u32).map(Fe).collect())
            }
            EigenvalueChoice::Explicit(values) => {
                if values.len() != slots {
                    return Err(Error::InvalidEigenvalues(format!(
                        "{} eigenvalues given for {slots} slots",
                        values.len()
                    )));
                }
                let mut seen = values.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != values.len() {
                    return Err(Error::InvalidEigenvalues(format!("{values:?} are not distinct")));
                }
                values
                    .iter()
                    .map(|&v| match field.element(v) {
                        Ok(e) if !e.is_zero() => Ok(e),
                        _ => Err(Error::InvalidEigenvalues(format!("{v} is not a nonzero element of {field}"))),
                    })
                    .collect()
            }
        }
    }

    /// Whether every eigenvalue lies in the prime subfield of fields of
    /// characteristic `p`.
    pub fn fits_prime_field(&self, p: u32, slots: usize) -> bool {
        match self {
            EigenvalueChoice::First => (slots as u32) < p,
            EigenvalueChoice::Explicit(v) => v.iter().all(|&x| x < p),
        }
    }

    /// Whether the choice resolves in a field of order `q`.
    pub fn admissible(&self, q: u32, slots: usize) -> bool {
        match self {
            EigenvalueChoice::First => slots < q as usize,
            EigenvalueChoice::Explicit(v) => v.iter().all(|&x| x < q),
        }
    }
}

impl fmt::Display for EigenvalueChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueChoice::First => write!(f, "first"),
            EigenvalueChoice::Explicit(v) => {
                let s: Vec<String> = v.iter().map(u32::to_string).collect();
                write!(f, "{}", s.join(","))
            }
        }
    }
}

/// Block diagonal matrix with one upper triangular Jordan block
/// `J_b(a)` per block size `b` of each slot, `a` the slot's eigenvalue.
pub fn build_group_element(
    spec: &GroupElementSpec,
    field: &Arc<FiniteField>,
    choice: &EigenvalueChoice,
) -> Result<MatrixGF> {
    let eigenvalues = choice.resolve(field, spec.num_slots())?;
    let n = spec.n();
    let mut g = MatrixGF::zeros(field, n, n);
    let mut start = 0;
    for (slot, &a) in spec.slots().iter().zip(&eigenvalues) {
        for &b in slot.parts() {
            for i in start..start + b {
                g.set(i, i, a);
                if i + 1 < start + b {
                    g.set(i, i + 1, Fe::ONE);
                }
            }
            start += b;
        }
    }
    Ok(g)
}

/// Every spec of size `n` up to reordering slots: slots by decreasing
/// weight, equal weights by decreasing partition.
pub fn all_specs(n: usize) -> Vec<GroupElementSpec> {
    let mut out = Vec::new();
    for weights in all_partitions(n) {
        let mut slots = Vec::new();
        fill_slots(weights.parts(), &mut slots, &mut out);
    }
    out
}

fn fill_slots(weights: &[usize], slots: &mut Vec<Partition>, out: &mut Vec<GroupElementSpec>) {
    let i = slots.len();
    if i == weights.len() {
        out.push(GroupElementSpec { slots: slots.clone() });
        return;
    }
    let mut options = all_partitions(weights[i]);
    if i > 0 && weights[i] == weights[i - 1] {
        options.retain(|p| p <= &slots[i - 1]);
    }
    for p in options {
        slots.push(p);
        fill_slots(weights, slots, out);
        slots.pop();
    }
}
