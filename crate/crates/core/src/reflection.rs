//! Graded multiplicities of irreducible representations and the Gini index
//! they induce, for symmetric groups, dihedral groups and `GL_n`.
//!
//! - `S_n`: the graded multiplicity of `S^λ` in the coinvariants is
//!   `K_{λ̃,(1^n)}(t)`.
//! - `D_{2n}`: Stanley's Molien-type sum
//!   `p_χ(t) = (1/2n)(1 - t^2)(1 - t^n) Σ_T conj(χ(T)) / det(I - tT)`
//!   evaluated exactly over the cyclotomic integers.
//! - `GL_n`: for a dominant weight `α` with `Σ α = 0`, the graded
//!   multiplicity in the harmonics is `K_{α+(k^n),(k^n)}(t)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cyclotomic::CyclotomicElement;
use crate::error::{Error, Result};
use crate::gini::gini_nk;
use crate::kostka::kostka_foulkes;
use crate::partition::{conjugate, Partition};
use crate::poly::IntPolynomial;

/// `p_λ(t) = K_{λ̃,(1^n)}(t)`.
pub fn sym_graded_multiplicity(lam: &Partition) -> Result<IntPolynomial> {
    kostka_foulkes(&conjugate(lam), &Partition::column(lam.size()))
}

/// `g_{S_n}(S^λ) = deg p_{λ̃}(t) = deg K_{λ,(1^n)}(t)`.
pub fn sym_gini(lam: &Partition) -> Result<u64> {
    let p = sym_graded_multiplicity(&conjugate(lam))?;
    Ok(p.degree().expect("K_{λ,(1^n)} is nonzero") as u64)
}

/// The irreducible characters of `D_{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    /// Trivial.
    Chi1,
    /// Sign on reflections.
    Chi2,
    /// `(-1)^k` on `r^k` and `s r^k`; `n` even only.
    Chi3,
    /// `(-1)^k` on `r^k`, `(-1)^{k+1}` on `s r^k`; `n` even only.
    Chi4,
    /// Two-dimensional `ρ_j`, `0 < j < n/2`.
    Rho(usize),
}

/// An irreducible character of the dihedral group of order `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralCharacter {
    n: usize,
    kind: CharacterKind,
}

impl DihedralCharacter {
    pub fn new(n: usize, kind: CharacterKind) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidCharacter(format!("dihedral parameter must be >= 3, got {}", n)));
        }
        match kind {
            CharacterKind::Chi3 | CharacterKind::Chi4 if n % 2 == 1 => Err(Error::InvalidCharacter(
                format!("chi3 and chi4 exist only for even n, got n = {}", n),
            )),
            CharacterKind::Rho(j) if j == 0 || 2 * j >= n => Err(Error::InvalidCharacter(format!(
                "rho_j needs 0 < j < n/2, got j = {}, n = {}",
                j, n
            ))),
            _ => Ok(DihedralCharacter { n, kind }),
        }
    }

    /// Every irreducible character, one-dimensional ones first.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        let mut kinds = vec![CharacterKind::Chi1, CharacterKind::Chi2];
        if n.is_multiple_of(2) {
            kinds.extend([CharacterKind::Chi3, CharacterKind::Chi4]);
        }
        kinds.extend((1..).take_while(|j| 2 * j < n).map(CharacterKind::Rho));
        kinds.into_iter().map(|k| DihedralCharacter::new(n, k)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            CharacterKind::Rho(_) => 2,
            _ => 1,
        }
    }

    /// Character value on a group element.
    pub fn value(&self, g: &DihedralElement) -> CyclotomicElement {
        let n = self.n;
        let k = g.k as i64;
        let sign = |odd: bool| CyclotomicElement::from_integer(n, BigInt::from(if odd { -1 } else { 1 }));
        match (self.kind, g.reflection) {
            (CharacterKind::Chi1, _) => CyclotomicElement::one(n),
            (CharacterKind::Chi2, reflection) => sign(reflection),
            (CharacterKind::Chi3, _) => sign(k % 2 == 1),
            (CharacterKind::Chi4, false) => sign(k % 2 == 1),
            (CharacterKind::Chi4, true) => sign(k % 2 == 0),
            (CharacterKind::Rho(j), _) => rho_matrix(n, j as i64, g).trace(),
        }
    }

    /// Closed-form graded multiplicity: `1`, `t^n`, `t^{n/2}`, `t^{n/2}`,
    /// or `t^{n-j} + t^j`.
    pub fn expected_multiplicity(&self) -> IntPolynomial {
        let n = self.n;
        let one = BigInt::from(1);
        match self.kind {
            CharacterKind::Chi1 => IntPolynomial::one(),
            CharacterKind::Chi2 => IntPolynomial::monomial(n, one),
            CharacterKind::Chi3 | CharacterKind::Chi4 => IntPolynomial::monomial(n / 2, one),
            CharacterKind::Rho(j) => {
                &IntPolynomial::monomial(n - j, one.clone()) + &IntPolynomial::monomial(j, one)
            }
        }
    }
}

impl fmt::Display for DihedralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CharacterKind::Chi1 => write!(f, "chi1"),
            CharacterKind::Chi2 => write!(f, "chi2"),
            CharacterKind::Chi3 => write!(f, "chi3"),
            CharacterKind::Chi4 => write!(f, "chi4"),
            CharacterKind::Rho(j) => write!(f, "rho{}", j),
        }
    }
}

/// `r^k` (rotation) or `s r^k` (reflection), `0 <= k < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralElement {
    pub k: usize,
    pub reflection: bool,
}

/// All `2n` elements of `D_{2n}`.
pub fn dihedral_elements(n: usize) -> Vec<DihedralElement> {
    (0..n)
        .flat_map(|k| {
            [
                DihedralElement { k, reflection: false },
                DihedralElement { k, reflection: true },
            ]
        })
        .collect()
}

/// A 2×2 matrix over the cyclotomic integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub entries: [[CyclotomicElement; 2]; 2],
}

impl Matrix2 {
    pub fn trace(&self) -> CyclotomicElement {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn det(&self) -> CyclotomicElement {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    /// Coefficients `[1, -tr, det]` of `det(I - tM)` as a polynomial in `t`.
    pub fn char_coefficients(&self) -> [CyclotomicElement; 3] {
        let n = self.entries[0][0].order();
        [CyclotomicElement::one(n), -&self.trace(), self.det()]
    }
}

/// `ρ_j(r^k) = diag(ζ^{jk}, ζ^{-jk})`, `ρ_j(s r^k) = [[0, ζ^{-jk}], [ζ^{jk}, 0]]`.
pub fn rho_matrix(n: usize, j: i64, g: &DihedralElement) -> Matrix2 {
    let e = j * g.k as i64;
    let z = CyclotomicElement::zero(n);
    let entries = if g.reflection {
        [
            [z.clone(), CyclotomicElement::root(n, -e)],
            [CyclotomicElement::root(n, e), z],
        ]
    } else {
        [
            [CyclotomicElement::root(n, e), z.clone()],
            [z, CyclotomicElement::root(n, -e)],
        ]
    };
    Matrix2 { entries }
}

/// Power series of `1/det(I - tM)` up to `t^max_degree`, using
/// `s_m = tr·s_{m-1} - det·s_{m-2}`.
pub fn inverse_char_series(m: &Matrix2, max_degree: usize) -> Vec<CyclotomicElement> {
    let n = m.entries[0][0].order();
    let tr = m.trace();
    let det = m.det();
    let mut s = Vec::with_capacity(max_degree + 1);
    s.push(CyclotomicElement::one(n));
    if max_degree >= 1 {
        s.push(tr.clone());
    }
    for d in 2..=max_degree {
        let next = &(&tr * &s[d - 1]) - &(&det * &s[d - 2]);
        s.push(next);
    }
    s
}

/// `(1 - t^2)(1 - t^n) Σ_T conj(χ(T)) / det(I - tT)` truncated at degree
/// `n + 1`, before reduction and before dividing by `2n`. The group acts on
/// `C^2` through `ρ_1`.
pub fn dihedral_molien_residues(chi: &DihedralCharacter) -> Vec<CyclotomicElement> {
    let n = chi.n;
    let top = n + 1;
    let mut total = vec![CyclotomicElement::zero(n); top + 1];
    for g in dihedral_elements(n) {
        let weight = chi.value(&g).conj();
        let series = inverse_char_series(&rho_matrix(n, 1, &g), top);
        for (acc, term) in total.iter_mut().zip(&series) {
            *acc += &(&weight * term);
        }
    }
    let invariant_degrees =
        &IntPolynomial::from_i64s(&[1, 0, -1]) * &(&IntPolynomial::one() - &IntPolynomial::monomial(n, BigInt::from(1)));
    (0..=top)
        .map(|d| {
            let mut acc = CyclotomicElement::zero(n);
            for i in 0..=d {
                let c = invariant_degrees.coeff(i);
                if !c.is_zero() {
                    acc += &total[d - i].scale(&c);
                }
            }
            acc
        })
        .collect()
}

/// Graded multiplicity of a dihedral irrep in the coinvariants of `D_{2n}`.
pub fn dihedral_graded_multiplicity(n: usize, chi: &DihedralCharacter) -> Result<IntPolynomial> {
    if chi.n != n {
        return Err(Error::InvalidCharacter(format!(
            "character belongs to n = {}, not n = {}",
            chi.n, n
        )));
    }
    let order = BigInt::from(2 * n);
    let mut coeffs = Vec::with_capacity(n + 2);
    for (d, residue) in dihedral_molien_residues(chi).iter().enumerate() {
        let value = residue.to_integer()?;
        let (q, r) = value.div_rem(&order);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "coefficient of t^{} is {}/{}, not an integer",
                d, value, order
            )));
        }
        coeffs.push(q);
    }
    if coeffs.last().is_some_and(|c| !c.is_zero()) {
        return Err(Error::Inconsistent(format!(
            "nonzero coefficient at guard degree {}",
            n + 1
        )));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Degree of the dihedral graded multiplicity.
pub fn dihedral_gini(n: usize, chi: &DihedralCharacter) -> Result<u64> {
    let p = dihedral_graded_multiplicity(n, chi)?;
    p.degree()
        .map(|d| d as u64)
        .ok_or_else(|| Error::Inconsistent(format!("zero graded multiplicity for {}", chi)))
}

/// A weakly decreasing integer vector, the highest weight of an irreducible
/// rational representation of `GL_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("a dominant weight needs at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{:?} is not weakly decreasing", entries)));
        }
        Ok(DominantWeight { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Default shift: `k = max(1, -α_n)`.
    pub fn default_shift(&self) -> usize {
        let last = *self.entries.last().expect("nonempty");
        (-last).max(1) as usize
    }

    /// `α + (k^n)` as a partition. Needs `k >= -α_n`.
    pub fn shifted(&self, k: usize) -> Result<Partition> {
        let parts = self
            .entries
            .iter()
            .map(|&a| {
                let v = a + k as i64;
                v.to_usize().ok_or_else(|| {
                    Error::Domain(format!("shift {} leaves a negative entry in {:?}", k, self.entries))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Domain(format!("bad weight entry {:?} in {:?}", t, s)))
            })
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(entries)
    }
}

/// Gini index of a `GL_n` irrep: `-∞` when the weight does not sum to zero
/// (the irrep never occurs in the harmonics).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlGini {
    NegInfinity,
    Finite(BigInt),
}

impl Serialize for GlGini {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GlGini::NegInfinity => s.serialize_str("-inf"),
            GlGini::Finite(v) => crate::json::bigint(v).serialize(s),
        }
    }
}

impl fmt::Display for GlGini {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlGini::NegInfinity => write!(f, "-inf"),
            GlGini::Finite(v) => write!(f, "{}", v),
        }
    }
}

/// `K_{α+(k^n),(k^n)}(t)` for an explicit shift `k >= max(1, -α_n)`.
pub fn gl_graded_multiplicity_with_shift(alpha: &DominantWeight, k: usize) -> Result<IntPolynomial> {
    if alpha.sum() != 0 {
        return Err(Error::Domain(format!(
            "weight {:?} sums to {}, not 0",
            alpha.entries(),
            alpha.sum()
        )));
    }
    if k == 0 {
        return Err(Error::Domain("shift must be at least 1".into()));
    }
    let lam = alpha.shifted(k)?;
    kostka_foulkes(&lam, &Partition::rectangle(alpha.rank(), k))
}

/// Graded multiplicity of `V^α` in the harmonics, with `k = max(1, -α_n)`.
pub fn gl_graded_multiplicity(alpha: &DominantWeight) -> Result<IntPolynomial> {
    gl_graded_multiplicity_with_shift(alpha, alpha.default_shift())
}

/// Degree of the graded multiplicity, checked against `g_{nk,n}(α + (k^n))`.
pub fn gl_gini(alpha: &DominantWeight) -> Result<GlGini> {
    if alpha.sum() != 0 {
        return Ok(GlGini::NegInfinity);
    }
    let k = alpha.default_shift();
    let p = gl_graded_multiplicity_with_shift(alpha, k)?;
    let degree = BigInt::from(p.degree().expect("dominant weights give nonzero K"));
    let expected = gini_nk(&alpha.shifted(k)?, alpha.rank(), k)?;
    if degree != expected {
        return Err(Error::Inconsistent(format!(
            "deg K = {} but g_nk = {} for {:?}",
            degree,
            expected,
            alpha.entries()
        )));
    }
    Ok(GlGini::Finite(degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gini::gini;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chi(n: usize, kind: CharacterKind) -> DihedralCharacter {
        DihedralCharacter::new(n, kind).unwrap()
    }

    #[test]
    fn symmetric_group_examples() {
        assert_eq!(sym_graded_multiplicity(&p(&[3])).unwrap(), IntPolynomial::one());
        assert_eq!(
            sym_graded_multiplicity(&p(&[2, 1])).unwrap(),
            IntPolynomial::from_i64s(&[0, 1, 1])
        );
        assert_eq!(
            sym_graded_multiplicity(&p(&[1, 1, 1, 1])).unwrap(),
            IntPolynomial::monomial(6, BigInt::from(1))
        );
        assert_eq!(sym_gini(&p(&[2, 1])).unwrap(), 2);
        assert_eq!(sym_gini(&p(&[3, 1])).unwrap(), 5);
        assert_eq!(sym_gini(&p(&[1, 1, 1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn sym_gini_is_gini() {
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                assert_eq!(BigInt::from(sym_gini(&lam).unwrap()), gini(&lam), "{}", lam);
            }
        }
    }

    #[test]
    fn character_validation() {
        assert!(DihedralCharacter::new(5, CharacterKind::Chi3).is_err());
        assert!(DihedralCharacter::new(6, CharacterKind::Rho(3)).is_err());
        assert!(DihedralCharacter::new(6, CharacterKind::Rho(0)).is_err());
        assert!(DihedralCharacter::new(2, CharacterKind::Chi1).is_err());
        assert_eq!(DihedralCharacter::all(5).unwrap().len(), 4);
        assert_eq!(DihedralCharacter::all(6).unwrap().len(), 6);
    }

    #[test]
    fn reflections_have_char_poly_one_minus_t_squared() {
        for n in 3..=8 {
            for k in 0..n {
                let g = DihedralElement { k, reflection: true };
                let [c0, c1, c2] = rho_matrix(n, 1, &g).char_coefficients();
                assert_eq!(c0.to_integer().unwrap(), BigInt::from(1));
                assert_eq!(c1.to_integer().unwrap(), BigInt::from(0));
                assert_eq!(c2.to_integer().unwrap(), BigInt::from(-1));
            }
        }
    }

    #[test]
    fn characters_are_orthonormal() {
        for n in 3..=10 {
            let chars = DihedralCharacter::all(n).unwrap();
            for a in &chars {
                for b in &chars {
                    let mut s = CyclotomicElement::zero(n);
                    for g in dihedral_elements(n) {
                        s += &(&a.value(&g) * &b.value(&g).conj());
                    }
                    let expected = if a == b { 2 * n as i64 } else { 0 };
                    assert_eq!(s.to_integer().unwrap(), BigInt::from(expected), "{} {}", a, b);
                }
            }
        }
    }

    #[test]
    fn dihedral_examples() {
        let one = BigInt::from(1);
        for n in 3..=6 {
            assert_eq!(
                dihedral_graded_multiplicity(n, &chi(n, CharacterKind::Chi1)).unwrap(),
                IntPolynomial::one()
            );
        }
        assert_eq!(
            dihedral_graded_multiplicity(5, &chi(5, CharacterKind::Chi2)).unwrap(),
            IntPolynomial::monomial(5, one.clone())
        );
        assert_eq!(
            dihedral_graded_multiplicity(5, &chi(5, CharacterKind::Rho(1))).unwrap(),
            IntPolynomial::from_i64s(&[0, 1, 0, 0, 1])
        );
        assert_eq!(
            dihedral_graded_multiplicity(6, &chi(6, CharacterKind::Chi3)).unwrap(),
            IntPolynomial::monomial(3, one)
        );
        assert!(dihedral_graded_multiplicity(7, &chi(5, CharacterKind::Chi1)).is_err());
    }

    #[test]
    fn dihedral_gini_values() {
        assert_eq!(dihedral_gini(7, &chi(7, CharacterKind::Chi2)).unwrap(), 7);
        assert_eq!(dihedral_gini(8, &chi(8, CharacterKind::Chi3)).unwrap(), 4);
        assert_eq!(dihedral_gini(9, &chi(9, CharacterKind::Rho(4))).unwrap(), 5);
        assert_eq!(dihedral_gini(4, &chi(4, CharacterKind::Chi1)).unwrap(), 0);
    }

    #[test]
    fn gl_examples() {
        let w = |s: &str| s.parse::<DominantWeight>().unwrap();
        assert_eq!(gl_gini(&w("2,0,-2")).unwrap(), GlGini::Finite(BigInt::from(4)));
        assert_eq!(gl_gini(&w("2,1,0,-3")).unwrap(), GlGini::Finite(BigInt::from(8)));
        assert_eq!(gl_gini(&w("3,2,-1,-4")).unwrap(), GlGini::Finite(BigInt::from(12)));
        assert_eq!(gl_gini(&w("1,0,0")).unwrap(), GlGini::NegInfinity);
        assert_eq!(gl_graded_multiplicity(&w("0,0,0")).unwrap(), IntPolynomial::one());
        assert_eq!(
            gl_graded_multiplicity(&w("2,0,-2")).unwrap(),
            IntPolynomial::from_i64s(&[0, 0, 1, 1, 1])
        );
        assert!(gl_graded_multiplicity(&w("1,0")).is_err());
        assert!("0,1".parse::<DominantWeight>().is_err());
        assert!(w("2,0,-2").shifted(1).is_err());
    }

    #[test]
    fn gl_shift_invariance() {
        for s in ["2,0,-2", "1,0,-1", "2,-1,-1", "1,1,-1,-1"] {
            let alpha: DominantWeight = s.parse().unwrap();
            let k = alpha.default_shift();
            let base = gl_graded_multiplicity_with_shift(&alpha, k).unwrap();
            assert_eq!(gl_graded_multiplicity_with_shift(&alpha, k + 1).unwrap(), base, "{}", s);
        }
    }

    #[test]
    fn gl_gini_json() {
        assert_eq!(serde_json::to_string(&GlGini::NegInfinity).unwrap(), r#""-inf""#);
        assert_eq!(serde_json::to_string(&GlGini::Finite(BigInt::from(4))).unwrap(), "4");
    }
}
