//! Complete flags over finite fields, their relative position in `S_n`,
//! Jordan-form group elements, the point counts `|𝒴_{w,g}(F_Q)|` and the
//! Hecke operators on functions on flags.
//!
//! A flag is stored through its canonical basis: the column echelon form in
//! which column `j` has a 1 in its pivot row `π(j)`, zeros below it and zeros
//! in the pivot rows of earlier columns. The permutation `π` is the relative
//! position of the standard flag and the flag, and the remaining `inv(π)`
//! entries are free, so there are `[n]_Q!` flags.

mod count;
mod group;
mod hecke;

use std::sync::Arc;

use crate::combinatorics::{all_permutations, PermutationW};
use crate::error::{Error, Result};
use crate::field::{intersection_dim, Fe, FiniteField, MatrixGF};

pub use count::{count_y, point_count_histogram, PointCountHistogram};
pub use group::{all_specs, build_group_element, EigenvalueChoice, GroupElementSpec};
pub use hecke::{
    hecke_relations_check, trace_identity_check, HeckeModule, HeckeReport, IntMatrix, RelationCheck, TraceReport,
    HECKE_MAX_FLAGS,
};

/// Default limit on the number of flags a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// `[n]_Q! = Π_{i=1}^{n} (1 + Q + ⋯ + Q^{i−1})`, saturating at `u128::MAX`.
pub fn flag_count(n: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut total: u128 = 1;
    let mut bracket: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        bracket = bracket.saturating_add(power);
        power = power.saturating_mul(q);
        total = total.saturating_mul(bracket);
    }
    total
}

pub(crate) fn check_budget(n: usize, q: u64, budget: u64) -> Result<u128> {
    let count = flag_count(n, q);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(count)
}

/// A complete flag `0 ⊂ V_1 ⊂ ⋯ ⊂ V_n`, `V_i` the span of the first `i`
/// basis columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    basis: MatrixGF,
    pivots: Vec<usize>,
}

impl std::hash::Hash for Flag {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.basis.entries().hash(state);
    }
}

impl Flag {
    /// The flag of an invertible matrix's column prefixes, in canonical form.
    pub fn from_basis(m: &MatrixGF) -> Result<Self> {
        let n = m.rows();
        if m.cols() != n || !m.is_invertible() {
            return Err(Error::Singular(format!("{m} does not define a complete flag")));
        }
        let f = Arc::clone(m.field());
        let mut basis = MatrixGF::zeros(&f, n, n);
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v: Vec<Fe> = (0..n).map(|i| m.get(i, j)).collect();
            let pivot = loop {
                let r = (0..n).rev().find(|&i| !v[i].is_zero()).expect("independent columns");
                match pivots.iter().position(|&p| p == r) {
                    Some(k) => {
                        let c = v[r];
                        subtract_column(&f, &mut v, &basis, k, c)
                    }
                    None => break r,
                }
            };
            let mut earlier: Vec<usize> = (0..j).filter(|&k| pivots[k] < pivot).collect();
            earlier.sort_by(|&a, &b| pivots[b].cmp(&pivots[a]));
            for k in earlier {
                let c = v[pivots[k]];
                if !c.is_zero() {
                    subtract_column(&f, &mut v, &basis, k, c);
                }
            }
            let inv = f.inv(v[pivot]).expect("pivot is nonzero");
            for (i, x) in v.iter().enumerate() {
                basis.set(i, j, f.mul(inv, *x));
            }
            pivots.push(pivot);
        }
        Ok(Flag { basis, pivots })
    }

    /// The standard flag `V_i = span(e_1, …, e_i)`.
    pub fn standard(field: &Arc<FiniteField>, n: usize) -> Self {
        Flag {
            basis: MatrixGF::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    /// `w·E`, spanned by `e_{w(1)}, e_{w(2)}, …`.
    pub fn permuted(field: &Arc<FiniteField>, w: &PermutationW) -> Self {
        let n = w.n();
        let basis = MatrixGF::from_fn(field, n, n, |i, j| if w.image(j) == i { Fe::ONE } else { Fe::ZERO });
        Flag {
            basis,
            pivots: w.images().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.basis.field()
    }

    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    /// `V_i` as the span of the first `i` basis columns.
    pub fn subspace(&self, i: usize) -> MatrixGF {
        self.basis.leading_columns(i)
    }

    /// Relative position of the standard flag and this flag.
    pub fn pivot_permutation(&self) -> PermutationW {
        PermutationW::from_images(self.pivots.clone()).expect("pivots are distinct")
    }

    /// `g·F`, with `g` applied to every subspace.
    pub fn apply(&self, g: &MatrixGF) -> Result<Flag> {
        Flag::from_basis(&g.mul(&self.basis)?)
    }
}

fn subtract_column(f: &FiniteField, v: &mut [Fe], basis: &MatrixGF, k: usize, c: Fe) {
    for (i, x) in v.iter_mut().enumerate() {
        *x = f.sub(*x, f.mul(c, basis.get(i, k)));
    }
}

/// Rows above `π(j)` that are not pivot rows of earlier columns, column by
/// column: the free entries of the canonical bases with pivots `π`.
pub(crate) fn free_positions(pi: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (j, &pj) in pi.iter().enumerate() {
        for i in 0..pj {
            if !pi[..j].contains(&i) {
                out.push((i, j));
            }
        }
    }
    out
}

/// All flags, each once, ordered by pivot permutation (lexicographic) and
/// then by the free entries read as a base-`Q` number, first entry least
/// significant.
pub fn enumerate_flags(n: usize, field: &Arc<FiniteField>, budget: u64) -> Result<FlagIter> {
    check_budget(n, field.order() as u64, budget)?;
    Ok(FlagIter {
        field: Arc::clone(field),
        perms: all_permutations(n),
        perm: 0,
        free: Vec::new(),
        index: 0,
        total: 0,
    })
}

pub struct FlagIter {
    field: Arc<FiniteField>,
    perms: Vec<PermutationW>,
    perm: usize,
    free: Vec<(usize, usize)>,
    index: u64,
    total: u64,
}

impl Iterator for FlagIter {
    type Item = Flag;

    fn next(&mut self) -> Option<Flag> {
        while self.index == self.total {
            if self.total > 0 {
                self.perm += 1;
            }
            let pi = self.perms.get(self.perm)?;
            self.free = free_positions(pi.images());
            self.index = 0;
            self.total = (self.field.order() as u64).pow(self.free.len() as u32);
        }
        let pi = &self.perms[self.perm];
        let n = pi.n();
        let q = self.field.order() as u64;
        let mut basis = MatrixGF::zeros(&self.field, n, n);
        for (j, &p) in pi.images().iter().enumerate() {
            basis.set(p, j, Fe::ONE);
        }
        let mut code = self.index;
        for &(i, j) in &self.free {
            basis.set(i, j, Fe((code % q) as u32));
            code /= q;
        }
        self.index += 1;
        Some(Flag {
            basis,
            pivots: pi.images().to_vec(),
        })
    }
}

/// The `w` with `F1 ∼_w F2`, read off the rank matrix
/// `d_{ij} = dim(V_i ∩ V′_j)`: `w(j) = i` exactly where
/// `d_{ij} − d_{i−1,j} − d_{i,j−1} + d_{i−1,j−1} = 1`.
pub fn relative_position(f1: &Flag, f2: &Flag) -> Result<PermutationW> {
    if f1.n() != f2.n() || f1.field() != f2.field() {
        return Err(Error::DimensionMismatch(format!(
            "flags in dimension {} over {} and dimension {} over {}",
            f1.n(),
            f1.field(),
            f2.n(),
            f2.field()
        )));
    }
    let n = f1.n();
    let mut d = vec![vec![0usize; n + 1]; n + 1];
    for i in 1..=n {
        let u = f1.subspace(i);
        for j in 1..=n {
            d[i][j] = intersection_dim(&u, &f2.subspace(j))?;
        }
    }
    let mut images = vec![usize::MAX; n];
    for i in 1..=n {
        for j in 1..=n {
            if d[i][j] + d[i - 1][j - 1] == d[i - 1][j] + d[i][j - 1] + 1 {
                images[j - 1] = i - 1;
            }
        }
    }
    PermutationW::from_images(images)
        .map_err(|e| Error::Internal(format!("rank matrix does not define a permutation: {e}")))
}

/// Relative position as the pivot permutation of `M1⁻¹M2`.
pub fn relative_position_by_elimination(f1: &Flag, f2: &Flag) -> Result<PermutationW> {
    let x = f1.basis.inverse()?.mul(&f2.basis)?;
    Ok(pivot_permutation(&x))
}

/// Pivot rows of the column echelon form of an invertible matrix: each
/// column is reduced against the earlier ones until its lowest nonzero entry
/// is in a fresh row.
pub fn pivot_permutation(x: &MatrixGF) -> PermutationW {
    let n = x.rows();
    let f = x.field();
    let mut cols: Vec<Vec<Fe>> = (0..n).map(|j| (0..n).map(|i| x.get(i, j)).collect()).collect();
    let images = pivot_rows(f, n, &mut cols);
    PermutationW::from_images(images).expect("invertible input")
}

/// Column reduction on `cols` (column-major), returning the pivot row of
/// each column; the reduced columns have their pivot entry normalized to 1.
pub(crate) fn pivot_rows(f: &FiniteField, n: usize, cols: &mut [Vec<Fe>]) -> Vec<usize> {
    let mut row_owner = vec![usize::MAX; n];
    let mut images = Vec::with_capacity(n);
    for j in 0..cols.len() {
        let (done, rest) = cols.split_at_mut(j);
        let v = &mut rest[0];
        let mut r = n;
        loop {
            r = match (0..r).rev().find(|&i| !v[i].is_zero()) {
                Some(r) => r,
                None => panic!("singular matrix in pivot_rows"),
            };
            let owner = row_owner[r];
            if owner == usize::MAX {
                break;
            }
            let c = v[r];
            for (i, x) in v.iter_mut().enumerate().take(r + 1) {
                *x = f.sub(*x, f.mul(c, done[owner][i]));
            }
        }
        let inv = f.inv(v[r]).expect("nonzero");
        for x in v.iter_mut().take(r + 1) {
            *x = f.mul(inv, *x);
        }
        row_owner[r] = j;
        images.push(r);
    }
    images
}
