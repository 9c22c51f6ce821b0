use num_bigint::BigInt;

use crate::combinatorics::{PermutationW, Partition};
use crate::error::Result;
use crate::green::IntPolynomial;

/// `χ(X(w)) = (−1)^{l(w)} Π_{i=1}^{n}(q^i−1) / Π_j(q^{ρ_j}−1)` for the
/// Deligne–Lusztig variety of a `w` of cycle type `ρ`, and its value at
/// `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DlRemark {
    pub rho: Partition,
    /// `(−1)^{l(w)} = (−1)^{n−s}`, `s` the number of cycles.
    pub sign: i32,
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    /// `numerator / denominator` as a polynomial, sign not applied.
    pub ratio: IntPolynomial,
    /// `sign · ratio`.
    pub value: IntPolynomial,
    /// `value(1)`.
    pub limit: BigInt,
}

pub fn dl_remark(n: usize, rho: &Partition) -> Result<DlRemark> {
    rho.check_same_weight(&Partition::column(n))?;
    let w = PermutationW::class_representative(rho);
    let sign = if w.length().is_multiple_of(2) { 1 } else { -1 };
    let numerator = (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &IntPolynomial::x_pow_minus_one(i));
    let denominator = rho
        .parts()
        .iter()
        .fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::x_pow_minus_one(r));
    let ratio = numerator.div_exact(&denominator)?;
    let value = if sign == 1 { ratio.clone() } else { -&ratio };
    let limit = value.eval_at_one();
    Ok(DlRemark {
        rho: rho.clone(),
        sign,
        numerator,
        denominator,
        ratio,
        value,
        limit,
    })
}
