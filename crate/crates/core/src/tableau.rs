//! Young tableaux, hook lengths, reading words and the charge statistic.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{conjugate, dominates, Partition};

/// A filling of a Young diagram, stored row by row (English notation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from its rows; the row lengths must form a partition
    /// and entries must be positive. No ordering condition is imposed.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidPartition("tableau has an empty row".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidPartition("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Occurrence counts: `weight[i]` is the number of entries equal to `i + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; max];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// Semistandard with every value in `1..=n` used exactly once.
    pub fn is_standard(&self) -> bool {
        self.is_semistandard() && self.weight().iter().all(|&c| c == 1)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// A word in the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    /// Parses either `2111423` (single-digit letters) or `2,1,1,1,4,2,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().ok())
                .collect::<Option<Vec<_>>>()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
        };
        letters
            .map(Word::new)
            .ok_or_else(|| Error::Domain(format!("cannot parse word {:?}", s)))
    }

    /// `counts[i]` = occurrences of letter `i + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &x in &self.letters {
            if x > 0 {
                counts[x - 1] += 1;
            }
        }
        counts
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let wide = self.letters.iter().any(|&x| x > 9);
        for (i, x) in self.letters.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

/// Depth-first filler for semistandard tableaux, cell by cell in row-major
/// order with values tried in increasing order. Emission order is therefore
/// lexicographic in the concatenated rows.
struct Filler<'a> {
    shape: &'a [usize],
    max_entry: usize,
    remaining: Option<Vec<usize>>,
    rows: Vec<Vec<usize>>,
}

impl Filler<'_> {
    fn run(&mut self, out: &mut Vec<Tableau>) {
        self.step(0, 0, out);
    }

    fn step(&mut self, i: usize, j: usize, out: &mut Vec<Tableau>) {
        if i == self.shape.len() {
            out.push(Tableau {
                shape: Partition::new(self.shape.to_vec()).expect("shape is a partition"),
                rows: self.rows.clone(),
            });
            return;
        }
        let (ni, nj) = if j + 1 == self.shape[i] { (i + 1, 0) } else { (i, j + 1) };
        let left = if j > 0 { self.rows[i][j - 1] } else { 1 };
        let above = if i > 0 { self.rows[i - 1][j] + 1 } else { 1 };
        let lo = left.max(above);
        for v in lo..=self.max_entry {
            if let Some(rem) = &mut self.remaining {
                if rem[v - 1] == 0 {
                    continue;
                }
                rem[v - 1] -= 1;
            }
            self.rows[i].push(v);
            self.step(ni, nj, out);
            self.rows[i].pop();
            if let Some(rem) = &mut self.remaining {
                rem[v - 1] += 1;
            }
        }
    }
}

/// Semistandard tableaux of `shape` whose content is exactly `content`
/// (`content[i]` copies of `i + 1`). The content need not be a partition.
pub fn ssyt_with_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<usize>() {
        return out;
    }
    let mut filler = Filler {
        shape: shape.parts(),
        max_entry: content.len(),
        remaining: Some(content.to_vec()),
        rows: vec![Vec::new(); shape.len()],
    };
    filler.run(&mut out);
    out
}

/// Semistandard tableaux of `shape` with entries in `1..=max_entry`.
pub fn ssyt_bounded(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut filler = Filler {
        shape: shape.parts(),
        max_entry,
        remaining: None,
        rows: vec![Vec::new(); shape.len()],
    };
    filler.run(&mut out);
    out
}

/// All semistandard tableaux of the given shape and partition weight.
pub fn enumerate_ssyt(shape: &Partition, weight: &Partition) -> Result<Vec<Tableau>> {
    if !dominates(shape, weight)? {
        return Ok(Vec::new());
    }
    Ok(ssyt_with_content(shape, weight.parts()))
}

/// All standard tableaux of the shape.
pub fn enumerate_standard(shape: &Partition) -> Vec<Tableau> {
    ssyt_with_content(shape, &vec![1; shape.size()])
}

/// Hook length of every box, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let cols = conjugate(shape);
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| len - j + cols.part(j) - i - 1).collect())
        .collect()
}

pub fn hook_product(shape: &Partition) -> BigInt {
    hook_lengths(shape)
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, &h| acc * h)
}

/// Number of standard tableaux, `n! / Π hooks`.
pub fn standard_count(shape: &Partition) -> BigInt {
    let factorial = (1..=shape.size()).fold(BigInt::one(), |acc, k| acc * k);
    factorial / hook_product(shape)
}

/// Rows read right to left, from the top row down.
pub fn reading_word(t: &Tableau) -> Word {
    Word::new(
        t.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect(),
    )
}

fn check_partition_weight(w: &Word) -> Result<Vec<usize>> {
    let counts = w.multiplicities();
    let zero_letter = w.letters.contains(&0);
    let decreasing = counts.windows(2).all(|p| p[0] >= p[1]);
    let no_gaps = counts.iter().all(|&c| c > 0);
    if zero_letter || !decreasing || !no_gaps {
        return Err(Error::NotPartitionWeight(counts));
    }
    Ok(counts)
}

/// Charge of a word whose letter multiplicities form a partition.
///
/// Standard subwords are peeled off one at a time: take the leftmost
/// unused `1`, then the first unused `2` to its right (wrapping around to
/// the start if needed), then `3`, and so on up to the largest letter still
/// present. Each letter's subscript is the number of wrap-arounds taken to
/// reach it; the charge is the sum of all subscripts.
pub fn charge(w: &Word) -> Result<u64> {
    let mut remaining = check_partition_weight(w)?;
    let letters = &w.letters;
    let mut used = vec![false; letters.len()];
    let mut total = 0u64;
    while remaining.first().is_some_and(|&c| c > 0) {
        let top = remaining.iter().take_while(|&&c| c > 0).count();
        let mut pos = (0..letters.len())
            .find(|&p| !used[p] && letters[p] == 1)
            .expect("a 1 remains while its count is positive");
        used[pos] = true;
        remaining[0] -= 1;
        let mut index = 0u64;
        for r in 2..=top {
            let ahead = (pos + 1..letters.len()).find(|&p| !used[p] && letters[p] == r);
            pos = match ahead {
                Some(p) => p,
                None => {
                    index += 1;
                    (0..pos)
                        .find(|&p| !used[p] && letters[p] == r)
                        .expect("letter r remains while its count is positive")
                }
            };
            used[pos] = true;
            remaining[r - 1] -= 1;
            total += index;
        }
    }
    Ok(total)
}

pub fn charge_tableau(t: &Tableau) -> Result<u64> {
    charge(&reading_word(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ssyt_examples() {
        let three = enumerate_ssyt(&p(&[4, 2]), &p(&[2, 2, 2])).unwrap();
        assert_eq!(
            three,
            vec![
                t(&[&[1, 1, 2, 2], &[3, 3]]),
                t(&[&[1, 1, 2, 3], &[2, 3]]),
                t(&[&[1, 1, 3, 3], &[2, 2]]),
            ]
        );
        let lam = p(&[3, 2, 2]);
        assert_eq!(
            enumerate_ssyt(&lam, &lam).unwrap(),
            vec![t(&[&[1, 1, 1], &[2, 2], &[3, 3]])]
        );
        assert_eq!(enumerate_ssyt(&p(&[5, 4, 3]), &p(&[3, 3, 3, 3])).unwrap().len(), 8);
        assert_eq!(enumerate_ssyt(&p(&[7, 6, 3]), &p(&[4, 4, 4, 4])).unwrap().len(), 16);
        assert!(enumerate_ssyt(&p(&[2, 2]), &p(&[3, 1])).unwrap().is_empty());
        assert!(enumerate_ssyt(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        for n in 1..=7 {
            let all = enumerate_partitions(n);
            for shape in &all {
                for weight in &all {
                    let list = enumerate_ssyt(shape, weight).unwrap();
                    for w in list.windows(2) {
                        assert!(w[0].rows.concat() < w[1].rows.concat());
                    }
                    for tab in list {
                        assert!(tab.is_semistandard());
                        assert_eq!(tab.weight(), weight.parts());
                        assert_eq!(tab.shape(), shape);
                    }
                }
            }
        }
    }

    #[test]
    fn standard_examples() {
        assert_eq!(
            enumerate_standard(&p(&[2, 1])),
            vec![t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]])]
        );
        assert_eq!(enumerate_standard(&p(&[5])).len(), 1);
        assert_eq!(enumerate_standard(&p(&[2, 2])).len(), 2);
        assert!(enumerate_standard(&p(&[2, 2])).iter().all(Tableau::is_standard));
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_lengths(&p(&[3, 2, 1])), vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(hook_product(&p(&[3, 2, 1])), BigInt::from(45));
        assert_eq!(standard_count(&p(&[3, 2, 1])), BigInt::from(16));
        assert_eq!(standard_count(&p(&[1, 1, 1])), BigInt::from(1));
        assert_eq!(standard_count(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 0..=8 {
            for shape in enumerate_partitions(n) {
                assert_eq!(
                    standard_count(&shape),
                    BigInt::from(enumerate_standard(&shape).len()),
                    "{}",
                    shape
                );
            }
        }
    }

    #[test]
    fn reading_words() {
        let tab = t(&[&[1, 1, 1, 2], &[2, 4], &[3]]);
        assert_eq!(reading_word(&tab), Word::new(vec![2, 1, 1, 1, 4, 2, 3]));
        assert_eq!(reading_word(&t(&[&[1, 2, 3]])).letters, vec![3, 2, 1]);
        assert_eq!(reading_word(&t(&[&[1], &[2], &[3]])).letters, vec![1, 2, 3]);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&Word::parse("2111423").unwrap()).unwrap(), 2);
        assert_eq!(charge(&Word::parse("123456").unwrap()).unwrap(), 0);
        assert_eq!(charge(&Word::new(vec![])).unwrap(), 0);
        assert_eq!(charge_tableau(&t(&[&[1, 2], &[3], &[4]])).unwrap(), 3);
        assert_eq!(charge_tableau(&t(&[&[1, 3], &[2], &[4]])).unwrap(), 2);
        assert_eq!(charge_tableau(&t(&[&[1, 4], &[2], &[3]])).unwrap(), 1);
    }

    #[test]
    fn charges_of_standard_tableaux_of_size_four() {
        let cases: &[(&[&[usize]], u64)] = &[
            (&[&[1], &[2], &[3], &[4]], 0),
            (&[&[1, 2], &[3, 4]], 4),
            (&[&[1, 3], &[2, 4]], 2),
            (&[&[1, 2, 3], &[4]], 5),
            (&[&[1, 2, 4], &[3]], 4),
            (&[&[1, 3, 4], &[2]], 3),
            (&[&[1, 2, 3, 4]], 6),
        ];
        for (rows, expected) in cases {
            assert_eq!(charge_tableau(&t(rows)).unwrap(), *expected, "{:?}", rows);
        }
    }

    #[test]
    fn charges_of_the_rectangle_weight_examples() {
        // Charges by the reading-word definition. For 1133/22 and 1123/23
        // this gives 2 and 3; the pair is symmetric so K is unaffected.
        let cases: &[(&[&[usize]], u64)] = &[
            (&[&[1, 1, 2, 2], &[3, 3]], 4),
            (&[&[1, 1, 3, 3], &[2, 2]], 2),
            (&[&[1, 1, 2, 3], &[2, 3]], 3),
            (&[&[1, 1, 1, 2, 2], &[2, 3, 3, 3], &[4, 4, 4]], 8),
            (&[&[1, 1, 1, 2, 3], &[2, 2, 3, 4], &[3, 4, 4]], 6),
            (&[&[1, 1, 1, 3, 4], &[2, 2, 2, 4], &[3, 3, 4]], 4),
            (&[&[1, 1, 1, 1, 2, 2, 2], &[2, 3, 3, 3, 3, 4], &[4, 4, 4]], 12),
            (&[&[1, 1, 1, 1, 3, 3, 4], &[2, 2, 2, 2, 4, 4], &[3, 3, 4]], 6),
            (&[&[1, 1, 1, 1, 2, 3, 4], &[2, 2, 2, 4, 4, 4], &[3, 3, 3]], 8),
        ];
        for (rows, expected) in cases {
            assert_eq!(charge_tableau(&t(rows)).unwrap(), *expected, "{:?}", rows);
        }
    }

    #[test]
    fn charge_rejects_non_partition_weights() {
        assert!(matches!(
            charge(&Word::new(vec![1, 2, 2])),
            Err(Error::NotPartitionWeight(_))
        ));
        assert!(charge(&Word::new(vec![1, 3])).is_err());
        assert!(charge(&Word::new(vec![2])).is_err());
        assert!(charge(&Word::new(vec![0, 1])).is_err());
    }

    #[test]
    fn charge_is_deterministic() {
        let w = Word::parse("3,2,1,1,2,1,3,2,4").unwrap();
        let first = charge(&w).unwrap();
        for _ in 0..5 {
            assert_eq!(charge(&w).unwrap(), first);
        }
    }

    #[test]
    fn tableau_json() {
        let tab = t(&[&[1, 1, 1, 2], &[2, 4], &[3]]);
        let s = serde_json::to_string(&tab).unwrap();
        assert_eq!(s, "[[1,1,1,2],[2,4],[3]]");
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), tab);
        assert!(serde_json::from_str::<Tableau>("[[1],[2,3]]").is_err());
    }
}
