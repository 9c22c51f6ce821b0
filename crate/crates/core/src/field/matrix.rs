use std::fmt;
use std::sync::Arc;

use super::{Fe, FiniteField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<FiniteField>,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl MatrixGF {
    pub fn zeros(field: &Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        MatrixGF {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Arc<FiniteField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_fn(field: &Arc<FiniteField>, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// From rows of element encodings.
    pub fn from_rows(field: &Arc<FiniteField>, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows have different lengths".into()));
        }
        let data = rows
            .iter()
            .flatten()
            .map(|&c| field.element(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixGF {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.iter().map(|e| e.0).collect()).collect()
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> MatrixGF {
        MatrixGF::from_fn(&self.field, self.rows, k, |i, j| self.get(i, j))
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {}x{} beside {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(MatrixGF::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = MatrixGF::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let f = Arc::clone(&self.field);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pr * self.cols + j);
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                self.set(r, j, f.mul(inv, self.get(r, j)));
            }
            for i in 0..self.rows {
                let factor = self.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<MatrixGF> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = self.hconcat(&MatrixGF::identity(&self.field, n))?;
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular(format!("{n}x{n} matrix over {} has rank below {n}", self.field)));
        }
        Ok(MatrixGF::from_fn(&self.field, n, n, |i, j| aug.get(i, n + j)))
    }

    fn same_field(&self, other: &MatrixGF) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "matrices over {} and {}",
                self.field, other.field
            )));
        }
        Ok(())
    }
}

impl fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// `dim(U ∩ W) = dim U + dim W − rank[U | W]` for the column spans of `u` and `w`.
pub fn intersection_dim(u: &MatrixGF, w: &MatrixGF) -> Result<usize> {
    let joint = u.hconcat(w)?;
    Ok(u.rank() + w.rank() - joint.rank())
}
