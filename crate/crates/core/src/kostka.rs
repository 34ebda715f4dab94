//! Kostka numbers and Kostka-Foulkes polynomials.
//!
//! `K_{λμ}(t)` is computed as the charge generating function over the
//! semistandard tableaux of shape `λ` and weight `μ`. When `λ ⋡ μ` there are
//! no such tableaux and the polynomial is zero; otherwise it is monic of
//! degree `b(μ) - b(λ)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Result;
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::tableau::{charge_tableau, enumerate_ssyt};

/// Number of semistandard tableaux of the given shape and weight.
pub fn kostka_number(shape: &Partition, weight: &Partition) -> Result<BigInt> {
    Ok(BigInt::from(enumerate_ssyt(shape, weight)?.len()))
}

/// `Σ_T t^{charge(T)}` over `SSYT(shape, weight)`.
pub fn kostka_foulkes(shape: &Partition, weight: &Partition) -> Result<IntPolynomial> {
    let tableaux = enumerate_ssyt(shape, weight)?;
    let charges = tableaux
        .par_iter()
        .map(charge_tableau)
        .collect::<Result<Vec<u64>>>()?;
    let top = charges.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; top + 1];
    for c in charges {
        counts[c as usize] += 1;
    }
    if tableaux.is_empty() {
        return Ok(IntPolynomial::zero());
    }
    Ok(IntPolynomial::new(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gini::{b_stat, gini_nk};
    use crate::partition::{dominates, enumerate_partitions, enumerate_partitions_bounded};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn kf(shape: &[usize], weight: &[usize]) -> IntPolynomial {
        kostka_foulkes(&p(shape), &p(weight)).unwrap()
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(kostka_number(&p(&[4, 2]), &p(&[2, 2, 2])).unwrap(), BigInt::from(3));
        let lam = p(&[4, 2, 2, 1]);
        assert_eq!(kostka_number(&lam, &lam).unwrap(), BigInt::from(1));
        assert!(kostka_number(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(kf(&[2, 1], &[1, 1, 1]), IntPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(kf(&[2, 2], &[1, 1, 1, 1]), IntPolynomial::from_i64s(&[0, 0, 1, 0, 1]));
        assert_eq!(kf(&[4, 2], &[2, 2, 2]), IntPolynomial::from_i64s(&[0, 0, 1, 1, 1]));
        assert_eq!(kf(&[1, 1, 1], &[2, 1]), IntPolynomial::zero());
        assert_eq!(kf(&[], &[]), IntPolynomial::one());
    }

    #[test]
    fn vanishing_and_monic_degree() {
        for n in 1..=7 {
            let all = enumerate_partitions(n);
            for lam in &all {
                for mu in &all {
                    let k = kostka_foulkes(lam, mu).unwrap();
                    if dominates(lam, mu).unwrap() {
                        assert!(k.is_monic());
                        let deg = b_stat(mu, n).unwrap() - b_stat(lam, n).unwrap();
                        assert_eq!(BigInt::from(k.degree().unwrap()), deg);
                        assert_eq!(k.eval_one(), kostka_number(lam, mu).unwrap());
                    } else {
                        assert!(k.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn degree_is_gini_nk() {
        for n in 1..=3 {
            for k in 1..=3 {
                let flat = Partition::rectangle(n, k);
                for lam in enumerate_partitions_bounded(n * k, n) {
                    let poly = kostka_foulkes(&lam, &flat).unwrap();
                    assert_eq!(BigInt::from(poly.degree().unwrap()), gini_nk(&lam, n, k).unwrap());
                }
            }
        }
    }
}
