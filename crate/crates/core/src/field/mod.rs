//! Arithmetic in `GF(p^k)` for `p^k ≤ 2^16`, and dense matrices over it.
//!
//! An element is stored as the integer `Σ c_i p^i` encoding the residue
//! `Σ c_i x^i` modulo the field's modulus, so the prime subfield is exactly
//! the encodings `0..p` and element enumeration order is integer order.

mod matrix;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use matrix::{intersection_dim, MatrixGF};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// A field element by its integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

enum Addition {
    Prime,
    Xor,
    Table(Vec<u16>),
    Digits,
}

/// `GF(p^k)` with the smallest monic irreducible modulus, where monic
/// polynomials of degree `k` are ordered by the encoding of their lower
/// coefficients. Multiplication goes through log/exp tables built from the
/// first primitive element in enumeration order.
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    addition: Addition,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FiniteField {}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

/// `GF(p^k)`, shared.
pub fn make_field(p: u64, k: u32) -> Result<Arc<FiniteField>> {
    FiniteField::new(p, k).map(Arc::new)
}

/// The field with `q` elements; `q` must be a prime power.
pub fn field_of_order(q: u64) -> Result<Arc<FiniteField>> {
    if q < 2 {
        return Err(Error::InvalidField(format!("no field has {q} elements")));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q ≥ 2 has a divisor");
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::InvalidField(format!("{q} is not a prime power")));
    }
    make_field(p, k)
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn is_prime_power(q: u64) -> bool {
    match (2..=q).find(|d| q.is_multiple_of(*d)) {
        None => false,
        Some(p) => {
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            rest == 1
        }
    }
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        let (p, order) = (p as u32, order as u32);
        let modulus = (0..order)
            .map(|code| {
                let mut m = to_digits(code, p, k as usize);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .ok_or_else(|| Error::Internal(format!("no irreducible polynomial of degree {k} over GF({p})")))?;

        let mul = |a: u32, b: u32| {
            let prod = poly_mul_mod(&to_digits(a, p, k as usize), &to_digits(b, p, k as usize), &modulus, p);
            from_digits(&prod, p)
        };
        let group = order - 1;
        let generator = (1..order)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = mul(x, g);
                    ord += 1;
                }
                ord == group
            })
            .ok_or_else(|| Error::Internal(format!("GF({order}) has no primitive element")))?;

        let mut exp = vec![0u32; 2 * group as usize];
        let mut log = vec![0u32; order as usize];
        let mut x = 1;
        for i in 0..group {
            exp[i as usize] = x;
            exp[(i + group) as usize] = x;
            log[x as usize] = i;
            x = mul(x, generator);
        }

        let digit_add = |a: u32, b: u32| {
            let (da, db) = (to_digits(a, p, k as usize), to_digits(b, p, k as usize));
            from_digits(&da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect::<Vec<_>>(), p)
        };
        let neg = (0..order)
            .map(|a| from_digits(&to_digits(a, p, k as usize).iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p))
            .collect();
        let addition = if k == 1 {
            Addition::Prime
        } else if p == 2 {
            Addition::Xor
        } else if order <= 256 {
            let mut table = vec![0u16; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    table[(a * order + b) as usize] = digit_add(a, b) as u16;
                }
            }
            Addition::Table(table)
        } else {
            Addition::Digits
        };

        Ok(FiniteField {
            p,
            k,
            order,
            modulus,
            generator: Fe(generator),
            exp,
            log,
            neg,
            addition,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of the modulus in ascending degree, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    /// Element with the given encoding.
    pub fn element(&self, code: u32) -> Result<Fe> {
        if code < self.order {
            Ok(Fe(code))
        } else {
            Err(Error::InvalidField(format!("{code} is not an element of {self}")))
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn in_prime_subfield(&self, a: Fe) -> bool {
        a.0 < self.p
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        to_digits(a.0, self.p, self.k as usize)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(match &self.addition {
            Addition::Prime => {
                let s = a.0 + b.0;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Addition::Xor => a.0 ^ b.0,
            Addition::Table(t) => t[(a.0 * self.order + b.0) as usize] as u32,
            Addition::Digits => {
                let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
                while x > 0 || y > 0 {
                    out += ((x % self.p + y % self.p) % self.p) * place;
                    x /= self.p;
                    y /= self.p;
                    place *= self.p;
                }
                out
            }
        })
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            Fe::ZERO
        } else {
            Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let group = self.order - 1;
        Some(Fe(self.exp[((group - self.log[a.0 as usize]) % group) as usize]))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let group = (self.order - 1) as u64;
        Fe(self.exp[((self.log[a.0 as usize] as u64 * (e % group)) % group) as usize])
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }
}

fn to_digits(mut code: u32, p: u32, k: usize) -> Vec<u32> {
    let mut d = Vec::with_capacity(k);
    for _ in 0..k {
        d.push(code % p);
        code /= p;
    }
    d
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues reduced by the monic `modulus`.
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod.resize(k, 0);
    prod
}

/// Reduces `a` in place modulo the monic `divisor`.
fn poly_rem(a: &mut Vec<u32>, divisor: &[u32], p: u32) {
    let d = divisor.len() - 1;
    while a.len() > d {
        let top = a.pop().expect("nonempty");
        if top != 0 {
            let shift = a.len() - d;
            for (i, &c) in divisor[..d].iter().enumerate() {
                let sub = (top as u64 * c as u64 % p as u64) as u32;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
    }
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = to_digits(code, p, d);
            divisor.push(1);
            let mut r = f.to_vec();
            poly_rem(&mut r, &divisor, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const SMALL: [(u64, u32); 10] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)];

    #[test]
    fn construction_and_errors() {
        assert_eq!(make_field(2, 1).unwrap().order(), 2);
        assert_eq!(make_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime { p: 4 });
        assert_eq!(make_field(1, 1).unwrap_err(), Error::NotPrime { p: 1 });
        assert_eq!(make_field(2, 17).unwrap_err(), Error::FieldTooLarge { p: 2, k: 17 });
        assert!(make_field(2, 0).is_err());
        assert!(make_field(2, 16).is_ok());
        assert_eq!(field_of_order(9).unwrap().k(), 2);
        assert!(field_of_order(6).is_err());
        assert!(field_of_order(1).is_err());
        let powers: Vec<u64> = (1..=20).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(powers, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
    }

    /// A monic polynomial is irreducible iff its residue ring has no zero
    /// divisors.
    fn residue_ring_is_domain(m: &[u32], p: u32) -> bool {
        let k = m.len() - 1;
        let q = p.pow(k as u32);
        (1..q).all(|a| {
            (1..q).all(|b| poly_mul_mod(&to_digits(a, p, k), &to_digits(b, p, k), m, p).iter().any(|&c| c != 0))
        })
    }

    #[test]
    fn modulus_is_smallest_irreducible() {
        for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (2, 5), (3, 3), (7, 2)] {
            let f = make_field(p, k).unwrap();
            let p = p as u32;
            let chosen = from_digits(&f.modulus()[..k as usize], p);
            assert!(residue_ring_is_domain(f.modulus(), p));
            for code in 0..chosen {
                let mut m = to_digits(code, p, k as usize);
                m.push(1);
                assert!(!residue_ring_is_domain(&m, p), "{m:?} over GF({p})");
            }
        }
    }

    #[test]
    fn gf9_multiplicative_group_has_order_eight() {
        let f = make_field(3, 2).unwrap();
        let order_of = |a: Fe| (1..).find(|&e| f.pow(a, e) == Fe::ONE).unwrap();
        let orders: Vec<u64> = f.elements().skip(1).map(order_of).collect();
        assert_eq!(*orders.iter().max().unwrap(), 8);
        assert!(orders.iter().all(|o| 8 % o == 0));
        let mut x = Fe::ONE;
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..8 {
            seen.insert(x);
            x = f.mul(x, f.generator());
        }
        assert_eq!(seen.len(), 8);
    }

    fn check_axioms(f: &FiniteField, triples: &[(Fe, Fe, Fe)]) {
        for &(a, b, c) in triples {
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in SMALL {
            let f = make_field(p, k).unwrap();
            let q = f.order() as u64;
            let els: Vec<Fe> = f.elements().collect();
            let mut triples = Vec::new();
            for &a in &els {
                for &b in &els {
                    triples.extend(els.iter().map(|&c| (a, b, c)));
                }
            }
            check_axioms(&f, &triples);
            for &a in &els {
                assert_eq!(f.add(a, Fe::ZERO), a);
                assert_eq!(f.mul(a, Fe::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                assert_eq!(f.sub(a, a), Fe::ZERO);
                assert_eq!(f.pow(a, q), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
            }
            assert_eq!(f.inv(Fe::ZERO), None);
        }
    }

    #[test]
    fn field_axioms_sampled_large() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(3, 5), (2, 10), (2, 16), (251, 2), (65521, 1), (17, 3)] {
            let f = make_field(p, k).unwrap();
            let q = f.order();
            let triples: Vec<_> = (0..2000)
                .map(|_| (Fe(rng.gen_range(0..q)), Fe(rng.gen_range(0..q)), Fe(rng.gen_range(0..q))))
                .collect();
            check_axioms(&f, &triples);
            for &(a, _, _) in triples.iter().take(200) {
                assert_eq!(f.pow(a, q as u64), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_map_fixing_the_prime_field() {
        for (p, k) in SMALL {
            let f = make_field(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius(a) == a, f.in_prime_subfield(a));
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn prime_subfield_embedding() {
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.from_int(-1), Fe(2));
        assert_eq!(f.from_int(4), Fe(1));
        assert_eq!(f.add(Fe(2), Fe(2)), Fe(1));
        assert_eq!(f.digits(Fe(5)), vec![2, 1]);
        assert!(f.element(9).is_err());
    }
}
