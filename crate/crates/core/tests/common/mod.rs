//! Independent oracles for the integration tests. Nothing here calls into
//! the library; partitions are plain descending `Vec<usize>`.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z(rho: &[usize]) -> u64 {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &r in rho {
        *mult.entry(r).or_default() += 1;
    }
    mult.iter().map(|(&i, &m)| (i as u64).pow(m as u32) * factorial(m)).product()
}

/// Number of `f: cycles → blocks` with block sums `alpha`, i.e. the value at
/// cycle type `rho` of the permutation character on set compositions of type
/// `alpha`. Zero parts of `alpha` are allowed; a negative part gives 0.
pub fn permutation_character(alpha: &[i64], rho: &[usize]) -> i64 {
    if alpha.iter().any(|&a| a < 0) {
        return 0;
    }
    fn go(rho: &[usize], cap: &mut [i64]) -> i64 {
        let Some((&r, rest)) = rho.split_first() else {
            return i64::from(cap.iter().all(|&c| c == 0));
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= r as i64 {
                cap[i] -= r as i64;
                total += go(rest, cap);
                cap[i] += r as i64;
            }
        }
        total
    }
    let mut cap = alpha.to_vec();
    go(rho, &mut cap)
}

/// Fixed points of a permutation (given by its images) on the maps
/// `{0..n} → {0..k}` with fibre sizes `alpha`, by listing every map.
pub fn fixed_set_compositions(alpha: &[usize], images: &[usize]) -> u64 {
    let n = images.len();
    let k = alpha.len();
    let mut count = 0;
    let mut f = vec![0usize; n];
    loop {
        let mut sizes = vec![0usize; k];
        for &b in &f {
            sizes[b] += 1;
        }
        if sizes == alpha && (0..n).all(|i| f[images[i]] == f[i]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            f[i] += 1;
            if f[i] < k {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

pub fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if prefix.len() == k {
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `χ^μ(ρ) = Σ_σ sgn(σ) π_{(μ_i − i + σ(i))}(ρ)`, the determinantal formula
/// with permutation characters in place of complete symmetric functions.
pub fn jacobi_trudi_character(mu: &[usize], rho: &[usize]) -> i64 {
    let l = mu.len();
    permutations(l)
        .iter()
        .map(|(sigma, sign)| {
            let alpha: Vec<i64> = (0..l).map(|i| mu[i] as i64 - i as i64 + sigma[i] as i64).collect();
            sign * permutation_character(&alpha, rho)
        })
        .sum()
}

/// Semistandard fillings of `shape` with content `content`, by listing all
/// words with that content and reading them row by row.
pub fn kostka_brute(shape: &[usize], content: &[usize]) -> u64 {
    fn words(rem: &mut Vec<usize>, cur: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..rem.len() {
            if rem[v] > 0 {
                rem[v] -= 1;
                cur.push(v);
                words(rem, cur, len, out);
                cur.pop();
                rem[v] += 1;
            }
        }
    }
    let n: usize = shape.iter().sum();
    let mut all = Vec::new();
    words(&mut content.to_vec(), &mut Vec::new(), n, &mut all);
    all.iter()
        .filter(|w| {
            let mut rows = Vec::new();
            let mut start = 0;
            for &len in shape {
                rows.push(&w[start..start + len]);
                start += len;
            }
            let rows_ok = rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
            let cols_ok = (1..rows.len()).all(|i| (0..rows[i].len()).all(|j| rows[i - 1][j] < rows[i][j]));
            rows_ok && cols_ok
        })
        .count() as u64
}

/// Symmetric function of fixed degree in the power-sum basis.
pub type PowerSum = HashMap<Vec<usize>, BigRational>;

fn add_into(acc: &mut PowerSum, f: &PowerSum, c: &BigRational) {
    for (k, v) in f {
        *acc.entry(k.clone()).or_insert_with(BigRational::zero) += v * c;
    }
}

fn mul(a: &PowerSum, b: &PowerSum) -> PowerSum {
    let mut out = PowerSum::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k: Vec<usize> = ka.iter().chain(kb).copied().collect();
            k.sort_unstable_by(|x, y| y.cmp(x));
            *out.entry(k).or_insert_with(BigRational::zero) += va * vb;
        }
    }
    out
}

/// `h_k = Σ_{ρ⊢k} p_ρ / z_ρ`.
fn complete(k: i64) -> PowerSum {
    let mut out = PowerSum::new();
    if k < 0 {
        return out;
    }
    for rho in partitions(k as usize) {
        out.insert(rho.clone(), BigRational::new(BigInt::one(), BigInt::from(z(&rho))));
    }
    out
}

/// `s_λ = det(h_{λ_i − i + j})`.
pub fn schur(lambda: &[usize]) -> PowerSum {
    let l = lambda.len();
    let mut out = PowerSum::new();
    for (sigma, sign) in permutations(l) {
        let mut term = complete(0);
        for i in 0..l {
            term = mul(&term, &complete(lambda[i] as i64 - i as i64 + sigma[i] as i64));
        }
        add_into(&mut out, &term, &BigRational::from_integer(sign.into()));
    }
    out
}

/// Hall–Littlewood form `⟨p_ρ, p_σ⟩_t = δ_{ρσ} z_ρ Π_i (1 − t^{ρ_i})⁻¹`.
pub fn hl_inner(a: &PowerSum, b: &PowerSum, t: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (k, va) in a {
        if let Some(vb) = b.get(k) {
            let mut w = BigRational::from_integer(z(k).into());
            for &r in k {
                w /= BigRational::one() - num_traits::pow(t.clone(), r);
            }
            total += va * vb * w;
        }
    }
    total
}

/// `K_{λμ}(t)` at a rational `t`, for all `λ, μ ⊢ n`, by Gram–Schmidt on
/// Schur functions taken in increasing lexicographic order. Valid while
/// dominance is a total order, i.e. `n ≤ 5`.
pub fn hall_littlewood_kostka(n: usize, t: &BigRational) -> HashMap<(Vec<usize>, Vec<usize>), BigRational> {
    assert!(n <= 5);
    let mut order = partitions(n);
    order.reverse();
    let mut basis: Vec<(Vec<usize>, PowerSum, BigRational)> = Vec::new();
    for lambda in &order {
        let s = schur(lambda);
        let mut p = s.clone();
        for (_, q, norm) in &basis {
            let c = hl_inner(&s, q, t) / norm;
            add_into(&mut p, q, &-c);
        }
        let norm = hl_inner(&p, &p, t);
        basis.push((lambda.clone(), p, norm));
    }
    let mut out = HashMap::new();
    for lambda in &order {
        let s = schur(lambda);
        for (mu, p, norm) in &basis {
            out.insert((lambda.clone(), mu.clone()), hl_inner(&s, p, t) / norm);
        }
    }
    out
}
