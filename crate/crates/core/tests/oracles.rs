mod common;

use dlchi_core::characters::CharacterTable;
use dlchi_core::combinatorics::{all_permutations, induced_trivial_value, x_count, Partition, PermutationW};
use dlchi_core::green::{kostka_foulkes, kostka_number, IntPolynomial};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn eval_rational(p: &IntPolynomial, t: &BigRational) -> BigRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
}

#[test]
fn permutation_character_matches_fixed_point_count() {
    for n in 1..=5 {
        for w in all_permutations(n) {
            let rho: Vec<usize> = w.cycle_type().parts().to_vec();
            for lambda in common::partitions(n) {
                let alpha: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
                assert_eq!(
                    common::permutation_character(&alpha, &rho) as u64,
                    common::fixed_set_compositions(&lambda, w.images()),
                    "w = {w}, lambda = {lambda:?}"
                );
            }
        }
    }
}

#[test]
fn x_values_match_permutation_module() {
    for n in 1..=7 {
        for rho in common::partitions(n) {
            for lambda in common::partitions(n) {
                let alpha: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
                let expected = BigUint::from(common::permutation_character(&alpha, &rho) as u64);
                assert_eq!(x_count(&part(&rho), &part(&lambda)).unwrap(), expected);
                assert_eq!(induced_trivial_value(&part(&lambda), &part(&rho)).unwrap(), expected);
            }
        }
    }
}

#[test]
fn character_table_matches_determinantal_formula() {
    for n in 1..=7 {
        let table = CharacterTable::build(n);
        for mu in common::partitions(n) {
            for rho in common::partitions(n) {
                assert_eq!(
                    table.value(&part(&mu), &part(&rho)),
                    common::jacobi_trudi_character(&mu, &rho),
                    "mu = {mu:?}, rho = {rho:?}"
                );
            }
        }
    }
}

#[test]
fn kostka_numbers_match_brute_force() {
    for n in 1..=6 {
        for shape in common::partitions(n) {
            for content in common::partitions(n) {
                let k = kostka_number(&part(&shape), &part(&content)).unwrap();
                assert_eq!(k, BigUint::from(common::kostka_brute(&shape, &content)));
                let kf = kostka_foulkes(&part(&shape), &part(&content)).unwrap();
                assert_eq!(kf.eval_at_one(), BigInt::from(k));
            }
        }
    }
}

#[test]
fn kostka_foulkes_matches_hall_littlewood_gram_schmidt() {
    let ts: Vec<BigRational> = [(2, 1), (3, 1), (5, 1), (-2, 1), (-3, 1), (1, 2), (1, 3), (-1, 2), (2, 3)]
        .iter()
        .map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect();
    for n in 1..=4 {
        for t in &ts {
            let oracle = common::hall_littlewood_kostka(n, t);
            for ((lambda, mu), value) in &oracle {
                let kf = kostka_foulkes(&part(lambda), &part(mu)).unwrap();
                assert_eq!(&eval_rational(&kf, t), value, "K_{lambda:?},{mu:?} at t = {t}");
            }
        }
    }
}

#[test]
fn coset_count_at_cycle_representatives() {
    for n in 1..=6 {
        for rho in common::partitions(n) {
            let w = PermutationW::class_representative(&part(&rho));
            assert_eq!(w.cycle_type(), part(&rho));
            for lambda in common::partitions(n) {
                assert_eq!(
                    BigUint::from(common::fixed_set_compositions(&lambda, w.images())),
                    x_count(&part(&rho), &part(&lambda)).unwrap()
                );
            }
        }
    }
}
