//! The Gini index of a partition and the statistics it is built from.
//!
//! For `lam ⊢ n` the index is the area between the line of equality and the
//! Lorenz step curve of `lam` padded to `n` people. It equals
//! `C(n,2) - b(lam)` with `b(lam) = Σ (i-1) lam_i`, and also `e2` of the
//! conjugate partition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub(crate) fn binom2(n: usize) -> BigInt {
    let n = BigInt::from(n);
    (&n * (&n - 1u32)) >> 1
}

/// Second elementary symmetric polynomial of the parts, via
/// `e2(lam) = C(n,2) - Σ C(lam_i, 2)`.
pub fn e2(lam: &Partition) -> BigInt {
    let pairs_in_parts: BigInt = lam.parts().iter().map(|&p| binom2(p)).sum();
    binom2(lam.size()) - pairs_in_parts
}

/// `Σ (i-1) lam_i` over the zero-padded view of length `pad_to`.
pub fn b_stat(lam: &Partition, pad_to: usize) -> Result<BigInt> {
    if lam.len() > pad_to {
        return Err(Error::TooManyParts {
            parts: lam.len(),
            max: pad_to,
        });
    }
    Ok(b_value(lam))
}

// Zero parts contribute nothing, so padding never changes the sum.
fn b_value(lam: &Partition) -> BigInt {
    lam.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| BigInt::from(i) * p)
        .sum()
}

/// `g(lam) = C(n,2) - b(lam)` where `n = |lam|`.
pub fn gini(lam: &Partition) -> BigInt {
    binom2(lam.size()) - b_value(lam)
}

fn check_nk(lam: &Partition, n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!(
            "population and per-capita amount must be positive (n = {}, k = {})",
            n, k
        )));
    }
    if lam.size() != n * k {
        return Err(Error::SizeMismatch {
            left: lam.size() as u64,
            right: (n * k) as u64,
        });
    }
    if lam.len() > n {
        return Err(Error::TooManyParts {
            parts: lam.len(),
            max: n,
        });
    }
    Ok(())
}

/// Gini index of `nk` dollars spread over `n` people: `b(k^n) - b(lam)`.
pub fn gini_nk(lam: &Partition, n: usize, k: usize) -> Result<BigInt> {
    check_nk(lam, n, k)?;
    Ok(b_value(&Partition::rectangle(n, k)) - b_value(lam))
}

/// `g(lam) / C(n,2)`, an exact rational in `[0, 1]`.
pub fn normalized_gini(lam: &Partition) -> Result<BigRational> {
    let n = lam.size();
    if n < 2 {
        return Err(Error::Domain(format!(
            "normalized Gini index needs n >= 2, got n = {}",
            n
        )));
    }
    Ok(BigRational::new(gini(lam), binom2(n)))
}

/// One breakpoint of a Lorenz step curve, taken at integer `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LorenzPoint {
    pub x: usize,
    #[serde(serialize_with = "ser_big")]
    pub equality_y: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub lorenz_y: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::json::bigint(v).serialize(s)
}

/// Lorenz curve of a partition of `nk` among `n` people, together with the
/// line of equality `y = k⌈x⌉`. Both are step functions, constant on each
/// `(x-1, x]`, so the values at the integers describe them completely.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LorenzSample {
    pub breakpoints: Vec<LorenzPoint>,
    pub population: usize,
    pub total: usize,
}

impl LorenzSample {
    /// Area between the equality line and the Lorenz curve.
    pub fn gap_area(&self) -> BigInt {
        self.breakpoints
            .iter()
            .fold(BigInt::zero(), |acc, p| acc + &p.equality_y - &p.lorenz_y)
    }

    /// CSV with header `x,equality_y,lorenz_y` and CRLF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,equality_y,lorenz_y\r\n");
        for p in &self.breakpoints {
            out.push_str(&format!("{},{},{}\r\n", p.x, p.equality_y, p.lorenz_y));
        }
        out
    }
}

/// Breakpoints of `L_{nk,n,lam}`: the poorest person first, so the step
/// heights are the padded parts read in reverse.
pub fn lorenz_points(lam: &Partition, n: usize, k: usize) -> Result<LorenzSample> {
    check_nk(lam, n, k)?;
    let padded = lam.padded(n)?;
    let mut breakpoints = Vec::with_capacity(n + 1);
    let mut cumulative = 0usize;
    breakpoints.push(LorenzPoint {
        x: 0,
        equality_y: BigInt::zero(),
        lorenz_y: BigInt::zero(),
    });
    for (j, part) in padded.iter().rev().enumerate() {
        cumulative += part;
        breakpoints.push(LorenzPoint {
            x: j + 1,
            equality_y: BigInt::from(k * (j + 1)),
            lorenz_y: BigInt::from(cumulative),
        });
    }
    Ok(LorenzSample {
        breakpoints,
        population: n,
        total: n * k,
    })
}

/// Area form of the index: `C(n+1,2) - Σ i lam_i` with 1-based `i`.
pub fn gini_by_area(lam: &Partition) -> BigInt {
    let n = lam.size();
    let weighted: BigInt = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| BigInt::from(i + 1) * p)
        .sum();
    binom2(n + 1) - weighted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{conjugate, dominates, enumerate_partitions, enumerate_partitions_bounded};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn e2_pairwise(lam: &Partition) -> BigInt {
        let parts = lam.parts();
        let mut s = BigInt::zero();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                s += parts[i] * parts[j];
            }
        }
        s
    }

    #[test]
    fn e2_examples() {
        assert_eq!(e2(&p(&[4, 3, 1, 1])), big(27));
        assert_eq!(e2(&p(&[9])), big(0));
        assert_eq!(e2(&p(&[1, 1, 1, 1, 1, 1])), big(15));
        for n in 0..=12 {
            for lam in enumerate_partitions(n) {
                assert_eq!(e2(&lam), e2_pairwise(&lam));
            }
        }
    }

    #[test]
    fn b_stat_examples() {
        assert_eq!(b_stat(&p(&[4, 4, 4, 4]), 4).unwrap(), big(24));
        assert_eq!(b_stat(&p(&[7, 6, 3]), 4).unwrap(), big(12));
        assert_eq!(b_stat(&p(&[5]), 1).unwrap(), big(0));
        assert_eq!(b_stat(&p(&[7, 6, 3]), 3).unwrap(), b_stat(&p(&[7, 6, 3]), 9).unwrap());
        assert!(matches!(
            b_stat(&p(&[1, 1, 1]), 2),
            Err(Error::TooManyParts { parts: 3, max: 2 })
        ));
    }

    #[test]
    fn gini_examples() {
        assert_eq!(gini(&p(&[3, 2, 1])), big(11));
        assert_eq!(gini(&p(&[1, 1, 1, 1, 1, 1])), big(0));
        assert_eq!(gini(&p(&[6])), big(15));
        assert_eq!(gini(&Partition::empty()), big(0));
        assert_eq!(gini(&p(&[1])), big(0));
    }

    #[test]
    fn gini_nk_examples() {
        assert_eq!(gini_nk(&p(&[4, 2]), 3, 2).unwrap(), big(4));
        assert_eq!(gini_nk(&p(&[5, 4, 3]), 4, 3).unwrap(), big(8));
        assert_eq!(gini_nk(&p(&[7, 7, 4, 4, 3]), 5, 5).unwrap(), big(11));
        assert!(gini_nk(&p(&[4, 2]), 3, 3).is_err());
        assert!(gini_nk(&p(&[3, 1, 1, 1]), 3, 2).is_err());
        for n in 1..=10 {
            for lam in enumerate_partitions(n) {
                assert_eq!(gini_nk(&lam, n, 1).unwrap(), gini(&lam));
            }
        }
    }

    #[test]
    fn normalized_examples() {
        let r = |a: i64, b: i64| BigRational::new(big(a), big(b));
        assert_eq!(normalized_gini(&p(&[6])).unwrap(), r(1, 1));
        assert_eq!(normalized_gini(&p(&[1, 1, 1, 1, 1, 1])).unwrap(), r(0, 1));
        assert_eq!(normalized_gini(&p(&[3, 2, 1])).unwrap(), r(11, 15));
        assert!(normalized_gini(&p(&[1])).is_err());
        assert!(normalized_gini(&Partition::empty()).is_err());
    }

    #[test]
    fn lorenz_examples() {
        let s = lorenz_points(&p(&[4, 2]), 3, 2).unwrap();
        let ys: Vec<_> = s.breakpoints.iter().map(|b| b.lorenz_y.clone()).collect();
        assert_eq!(ys, vec![big(0), big(0), big(2), big(6)]);
        assert_eq!(s.gap_area(), big(4));
        assert_eq!(
            s.to_csv(),
            "x,equality_y,lorenz_y\r\n0,0,0\r\n1,2,0\r\n2,4,2\r\n3,6,6\r\n"
        );

        let flat = lorenz_points(&Partition::rectangle(4, 3), 4, 3).unwrap();
        assert!(flat.breakpoints.iter().all(|b| b.equality_y == b.lorenz_y));
        assert_eq!(flat.gap_area(), big(0));

        assert_eq!(lorenz_points(&p(&[5, 5, 2, 2, 1]), 5, 3).unwrap().gap_area(), big(11));
    }

    #[test]
    fn lorenz_area_reproduces_gini_nk() {
        for n in 1..=5 {
            for k in 1..=4 {
                for lam in enumerate_partitions_bounded(n * k, n) {
                    let s = lorenz_points(&lam, n, k).unwrap();
                    assert_eq!(s.gap_area(), gini_nk(&lam, n, k).unwrap());
                    assert_eq!(s.breakpoints.last().unwrap().lorenz_y, big((n * k) as i64));
                    assert!(s.breakpoints.windows(2).all(|w| w[0].lorenz_y <= w[1].lorenz_y));
                }
            }
        }
    }

    #[test]
    fn gini_is_e2_of_conjugate() {
        for n in 0..=14 {
            for lam in enumerate_partitions(n) {
                assert_eq!(gini(&lam), e2(&conjugate(&lam)), "{}", lam);
                assert_eq!(gini(&lam), gini_by_area(&lam));
            }
        }
    }

    #[test]
    fn range_and_extremes() {
        for n in 1..=12 {
            let max = binom2(n);
            for lam in enumerate_partitions(n) {
                let g = gini(&lam);
                assert!(g >= BigInt::zero() && g <= max);
                assert_eq!(g.is_zero(), lam == Partition::column(n));
                assert_eq!(g == max, lam == Partition::row(n));
            }
        }
    }

    #[test]
    fn strict_schur_convexity() {
        for n in 1..=10 {
            let all = enumerate_partitions(n);
            for lam in &all {
                for mu in &all {
                    if lam != mu && dominates(lam, mu).unwrap() {
                        assert!(gini(mu) < gini(lam));
                        assert!(e2(lam) < e2(mu));
                    }
                }
            }
        }
    }

    #[test]
    fn shift_invariance() {
        for n in 1..=5 {
            for k in 1..=3 {
                for j in k..=5 {
                    for lam in enumerate_partitions_bounded(n * k, n) {
                        let shifted: Vec<usize> =
                            lam.padded(n).unwrap().iter().map(|&x| x + j - k).collect();
                        let mu = Partition::new(shifted).unwrap();
                        assert_eq!(gini_nk(&lam, n, k).unwrap(), gini_nk(&mu, n, j).unwrap());
                    }
                }
            }
        }
    }
}
