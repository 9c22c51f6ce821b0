use rayon::prelude::*;

use super::{check_budget, free_positions, pivot_rows};
use crate::combinatorics::{all_permutations, lex_rank, PermutationW};
use crate::error::{Error, Result};
use crate::field::{Fe, MatrixGF};

/// Flags per work item for the parallel count.
const CHUNK: u64 = 1 << 14;

/// `|{F : pos(F, g·F) = w}|` for every `w ∈ S_n`, indexed by lexicographic
/// rank of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCountHistogram {
    n: usize,
    counts: Vec<u64>,
}

impl PointCountHistogram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &PermutationW) -> u64 {
        self.counts[w.lex_rank()]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Counts every flag by the relative position of `F` and `g·F`.
///
/// With `F` in canonical form `M = P_π N` (`N` lower unitriangular), the
/// position is the pivot permutation of `M⁻¹gM = N⁻¹ P_π⁻¹ g M`, obtained
/// by forward substitution. Work is split over pivot permutations and
/// chunks of free-entry codes and summed.
pub fn point_count_histogram(g: &MatrixGF, budget: u64) -> Result<PointCountHistogram> {
    let n = g.rows();
    if g.cols() != n || !g.is_invertible() {
        return Err(Error::Singular(format!("{g} is not an element of GL_{n}")));
    }
    let field = g.field();
    let q = field.order() as u64;
    check_budget(n, q, budget)?;
    let perms = all_permutations(n);
    let mut items = Vec::new();
    for pi in &perms {
        let total = q.pow(pi.length() as u32);
        let mut start = 0;
        while start < total {
            items.push((pi.images().to_vec(), start, (start + CHUNK).min(total)));
            start += CHUNK;
        }
    }
    let size = perms.len();
    let counts = items
        .par_iter()
        .map(|(pi, start, end)| count_range(g, pi, *start, *end, size))
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(PointCountHistogram { n, counts })
}

fn count_range(g: &MatrixGF, pi: &[usize], start: u64, end: u64, size: usize) -> Vec<u64> {
    let f = g.field();
    let n = pi.len();
    let q = f.order() as u64;
    let free = free_positions(pi);
    let mut hist = vec![0u64; size];
    let mut m = vec![Fe::ZERO; n * n];
    for (j, &p) in pi.iter().enumerate() {
        m[p * n + j] = Fe::ONE;
    }
    let mut b = vec![Fe::ZERO; n * n];
    let mut cols: Vec<Vec<Fe>> = vec![vec![Fe::ZERO; n]; n];
    for code in start..end {
        let mut c = code;
        for &(i, j) in &free {
            m[i * n + j] = Fe((c % q) as u32);
            c /= q;
        }
        // B = g M
        for i in 0..n {
            for j in 0..n {
                let mut s = Fe::ZERO;
                for l in 0..n {
                    s = f.add(s, f.mul(g.get(i, l), m[l * n + j]));
                }
                b[i * n + j] = s;
            }
        }
        // X[k] = B[π(k)] − Σ_{j<k} N[k][j] X[j], N[k][j] = M[π(k)][j]; stored column-major.
        for k in 0..n {
            for col in 0..n {
                let mut s = b[pi[k] * n + col];
                for j in 0..k {
                    let nkj = m[pi[k] * n + j];
                    if !nkj.is_zero() {
                        s = f.sub(s, f.mul(nkj, cols[col][j]));
                    }
                }
                cols[col][k] = s;
            }
        }
        let images = pivot_rows(f, n, &mut cols);
        hist[lex_rank(&images)] += 1;
    }
    hist
}

/// `|𝒴_{w,g}(F_Q)|` over the field of `g`.
pub fn count_y(w: &PermutationW, g: &MatrixGF, budget: u64) -> Result<u64> {
    if w.n() != g.rows() {
        return Err(Error::DimensionMismatch(format!("w in S_{} but g is {}x{}", w.n(), g.rows(), g.cols())));
    }
    Ok(point_count_histogram(g, budget)?.get(w))
}
