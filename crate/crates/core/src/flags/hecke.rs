use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{enumerate_flags, pivot_permutation, Flag};
use crate::combinatorics::{all_permutations, PermutationW};
use crate::error::{Error, Result};
use crate::field::{FiniteField, MatrixGF};

/// Largest flag count for which operator matrices are built.
pub const HECKE_MAX_FLAGS: u64 = 400;

/// Square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.size + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.size;
        let mut out = IntMatrix::zeros(n);
        out.data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            for l in 0..n {
                let a = self.data[i * n + l];
                if a != 0 {
                    for (x, &b) in row.iter_mut().zip(&other.data[l * n..(l + 1) * n]) {
                        *x += a * b;
                    }
                }
            }
        });
        out
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &IntMatrix, b: i64) -> IntMatrix {
        IntMatrix {
            size: self.size,
            data: self.data.iter().zip(&other.data).map(|(x, y)| a * x + b * y).collect(),
        }
    }

    pub fn trace(&self) -> i64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }
}

/// Functions on the flags over a finite field, with the operators
/// `(𝕋_w f)(B) = Σ_{B ∼_w B′} f(B′)` given by their matrices
/// `𝕋_w[B][B′] = [pos(B, B′) = w]`.
pub struct HeckeModule {
    n: usize,
    field: Arc<FiniteField>,
    flags: Vec<Flag>,
    index: HashMap<Flag, usize>,
    positions: Vec<u32>,
}

impl HeckeModule {
    pub fn new(n: usize, field: &Arc<FiniteField>) -> Result<Self> {
        let flags: Vec<Flag> = enumerate_flags(n, field, HECKE_MAX_FLAGS)?.collect();
        let index = flags.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let inverses = flags
            .iter()
            .map(|f| f.basis().inverse())
            .collect::<Result<Vec<_>>>()?;
        let size = flags.len();
        let positions = (0..size)
            .into_par_iter()
            .flat_map_iter(|a| {
                let inv = &inverses[a];
                flags.iter().map(move |b| {
                    let x = inv.mul(b.basis()).expect("same field and size");
                    pivot_permutation(&x).lex_rank() as u32
                })
            })
            .collect();
        Ok(HeckeModule {
            n,
            field: Arc::clone(field),
            flags,
            index,
            positions,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn operator(&self, w: &PermutationW) -> IntMatrix {
        let rank = w.lex_rank() as u32;
        let size = self.flags.len();
        IntMatrix {
            size,
            data: self.positions.iter().map(|&p| i64::from(p == rank)).collect(),
        }
    }

    /// The matrix of `(g·f)(B) = f(g⁻¹B)`: entry `[B][g⁻¹B] = 1`.
    pub fn group_operator(&self, g: &MatrixGF) -> Result<IntMatrix> {
        let inv = g.inverse()?;
        let size = self.flags.len();
        let mut m = IntMatrix::zeros(size);
        for (i, fl) in self.flags.iter().enumerate() {
            let image = fl.apply(&inv)?;
            let j = self.index[&image];
            m.data[i * size + j] = 1;
        }
        Ok(m)
    }

    /// Verifies the quadratic, braid and commutation relations among the
    /// `𝕋_{s_i}` with `q = Q`, and `𝕋_u𝕋_v = 𝕋_{uv}` whenever
    /// `l(uv) = l(u) + l(v)`: over all pairs for `n ≤ 3`, with `u` a simple
    /// reflection beyond that.
    pub fn relations_check(&self) -> HeckeReport {
        let n = self.n;
        let q = self.field.order() as i64;
        let size = self.flags.len();
        let s: Vec<IntMatrix> = (1..n)
            .map(|i| self.operator(&PermutationW::simple_reflection(n, i).expect("1 ≤ i < n")))
            .collect();
        let id = IntMatrix::identity(size);
        let mut relations = Vec::new();
        for (i, t) in s.iter().enumerate() {
            relations.push(RelationCheck {
                relation: format!("T{0}^2 = (q-1)T{0} + q", i + 1),
                holds: t.mul(t) == t.combine(q - 1, &id, q),
            });
        }
        for i in 0..s.len().saturating_sub(1) {
            let (a, b) = (&s[i], &s[i + 1]);
            relations.push(RelationCheck {
                relation: format!("T{0}T{1}T{0} = T{1}T{0}T{1}", i + 1, i + 2),
                holds: a.mul(b).mul(a) == b.mul(a).mul(b),
            });
        }
        for i in 0..s.len() {
            for j in i + 2..s.len() {
                relations.push(RelationCheck {
                    relation: format!("T{0}T{1} = T{1}T{0}", i + 1, j + 1),
                    holds: s[i].mul(&s[j]) == s[j].mul(&s[i]),
                });
            }
        }
        let perms = all_permutations(n);
        let lefts: Vec<PermutationW> = if n <= 3 {
            perms.clone()
        } else {
            (1..n).map(|i| PermutationW::simple_reflection(n, i).expect("1 ≤ i < n")).collect()
        };
        let mut pairs = 0;
        let mut failures = Vec::new();
        for u in &lefts {
            let tu = self.operator(u);
            for v in &perms {
                let uv = u * v;
                if uv.length() != u.length() + v.length() {
                    continue;
                }
                pairs += 1;
                if tu.mul(&self.operator(v)) != self.operator(&uv) {
                    failures.push(format!("u = {u}, v = {v}"));
                }
            }
        }
        relations.push(RelationCheck {
            relation: format!(
                "TuTv = Tuv when l(uv) = l(u) + l(v) ({pairs} pairs{})",
                if failures.is_empty() {
                    String::new()
                } else {
                    format!("; fails for {}", failures.join(", "))
                }
            ),
            holds: failures.is_empty(),
        });
        HeckeReport {
            n,
            order: self.field.order() as u64,
            flag_count: size,
            relations,
        }
    }

    /// `tr(g𝕋_w)` against `|𝒴_{w,g}|` counted directly on the flags.
    pub fn trace_identity(&self, w: &PermutationW, g: &MatrixGF) -> Result<TraceReport> {
        if w.n() != self.n || g.rows() != self.n || g.field() != &self.field {
            return Err(Error::DimensionMismatch(format!(
                "w in S_{} and g over {} do not act on flags of dimension {} over {}",
                w.n(),
                g.field(),
                self.n,
                self.field
            )));
        }
        let trace = self.group_operator(g)?.mul(&self.operator(w)).trace();
        let rank = w.lex_rank() as u32;
        let size = self.flags.len();
        let mut count = 0u64;
        for (i, fl) in self.flags.iter().enumerate() {
            let j = self.index[&fl.apply(g)?];
            if self.positions[i * size + j] == rank {
                count += 1;
            }
        }
        Ok(TraceReport {
            w: w.clone(),
            trace,
            count,
            holds: trace == count as i64,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeReport {
    pub n: usize,
    pub order: u64,
    pub flag_count: usize,
    pub relations: Vec<RelationCheck>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub w: PermutationW,
    pub trace: i64,
    pub count: u64,
    pub holds: bool,
}

pub fn hecke_relations_check(n: usize, field: &Arc<FiniteField>) -> Result<HeckeReport> {
    Ok(HeckeModule::new(n, field)?.relations_check())
}

pub fn trace_identity_check(w: &PermutationW, g: &MatrixGF) -> Result<TraceReport> {
    HeckeModule::new(g.rows(), g.field())?.trace_identity(w, g)
}
