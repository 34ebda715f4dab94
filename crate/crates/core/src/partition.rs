//! Integer partitions, conjugation and the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored; operations that need a fixed-length
/// view pad on the fly (see [`Partition::padded`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the sequence
    /// increases anywhere.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not weakly decreasing ({} < {})",
                parts, w[0], w[1]
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(k^n)`, i.e. `n` rows of length `k`.
    pub fn rectangle(rows: usize, k: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![k; rows],
        }
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::rectangle(1, n)
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::rectangle(n, 1)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The total `n = sum of parts`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded view of length `len`. Fails if there are more parts.
    pub fn padded(&self, len: usize) -> Result<Vec<usize>> {
        if self.parts.len() > len {
            return Err(Error::TooManyParts {
                parts: self.parts.len(),
                max: len,
            });
        }
        let mut v = self.parts.clone();
        v.resize(len, 0);
        Ok(v)
    }

    /// Multiplicity of each part size: `m[i]` = number of parts equal to `i`,
    /// for `i >= 1`. Index 0 is left at zero.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list such as `4,3,1,1`. Trailing zeros are
    /// accepted and dropped.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?} in {:?}", tok, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Column lengths of the Young diagram.
pub fn conjugate(lam: &Partition) -> Partition {
    let width = lam.part(0);
    let parts = (0..width)
        .map(|j| lam.parts.iter().take_while(|&&p| p > j).count())
        .collect();
    Partition { parts }
}

fn check_same_size(lam: &Partition, mu: &Partition) -> Result<()> {
    let (a, b) = (lam.size(), mu.size());
    if a != b {
        return Err(Error::SizeMismatch {
            left: a as u64,
            right: b as u64,
        });
    }
    Ok(())
}

/// `lam ⪰ mu` in dominance order: every prefix sum of `lam` is at least the
/// matching prefix sum of `mu`.
pub fn dominates(lam: &Partition, mu: &Partition) -> Result<bool> {
    check_same_size(lam, mu)?;
    let len = lam.len().max(mu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..len {
        a += lam.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `lam` covers `mu` in the dominance lattice.
///
/// Uses the box-move characterisation: `lam` arises from `mu` by moving one
/// box from row `k` up to row `i < k`, where either `k = i + 1` or
/// `mu_i = mu_k`.
pub fn covers(lam: &Partition, mu: &Partition) -> Result<bool> {
    check_same_size(lam, mu)?;
    let len = lam.len().max(mu.len());
    let mut up = None;
    let mut down = None;
    for r in 0..len {
        match lam.part(r).cmp(&mu.part(r)) {
            Ordering::Equal => {}
            Ordering::Greater if lam.part(r) == mu.part(r) + 1 && up.is_none() => up = Some(r),
            Ordering::Less if mu.part(r) == lam.part(r) + 1 && down.is_none() => down = Some(r),
            _ => return Ok(false),
        }
    }
    match (up, down) {
        (Some(i), Some(k)) if i < k => Ok(k == i + 1 || mu.part(i) == mu.part(k)),
        _ => Ok(false),
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions_bounded(n, n.max(1))
}

/// All partitions of `total` with at most `max_parts` parts, in
/// reverse-lexicographic order.
pub fn enumerate_partitions_bounded(total: usize, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(total, total, max_parts, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 || remaining > max_part * slots {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Number of partitions of `n`, by Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigInt {
    partition_counts(n).pop().unwrap_or_else(BigInt::one)
}

/// `[P(0), P(1), ..., P(n)]`.
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for i in 1..=n {
        let mut sum = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    table
}
