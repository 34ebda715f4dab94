//! Symmetric polynomials in finitely many variables, used as an independent
//! check on the charge formula.
//!
//! Kostka-Foulkes polynomials are recovered here from the expansion
//! `s_λ = Σ_μ K_{λμ}(t) P_μ(x; t)`: both sides are expanded in monomials and
//! the unitriangular system is solved. Schur polynomials on this route come
//! from the bialternant `a_{λ+δ} / a_δ` by exact division, and Hall-Littlewood
//! polynomials from the symmetrisation formula, so nothing here depends on
//! tableaux or charge.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::IntPolynomial;
use crate::tableau::ssyt_bounded;

/// Largest variable count the Hall-Littlewood symmetrisation accepts.
pub const MAX_HL_VARS: usize = 6;

/// A polynomial in `x_1..x_nvars` and `t` with rational coefficients.
///
/// Keys are exponent vectors of length `nvars + 1`; the last slot is the
/// exponent of `t`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::monomial(&vec![0; nvars], 0, BigRational::one())
    }

    /// `c · x^x_exps · t^t_exp`.
    pub fn monomial(x_exps: &[u32], t_exp: u32, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(x_exps.len());
        let mut key = x_exps.to_vec();
        key.push(t_exp);
        p.add_term(key, c);
        p
    }

    /// The single variable `x_i` (0-based) in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::monomial(&e, 0, BigRational::one())
    }

    /// The parameter `t`.
    pub fn t(nvars: usize) -> Self {
        MultiPoly::monomial(&vec![0; nvars], 1, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, key: Vec<u32>, c: BigRational) {
        debug_assert_eq!(key.len(), self.nvars + 1);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of `x^x_exps t^t_exp`.
    pub fn coeff(&self, x_exps: &[u32], t_exp: u32) -> BigRational {
        let mut key = x_exps.to_vec();
        key.push(t_exp);
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `x^x_exps` as a polynomial in `t`, lowest degree first.
    pub fn t_coefficients(&self, x_exps: &[u32]) -> Vec<BigRational> {
        let mut lo = x_exps.to_vec();
        lo.push(0);
        let mut out = Vec::new();
        for (key, c) in self.terms.range(lo..) {
            if key[..self.nvars] != *x_exps {
                break;
            }
            let e = key[self.nvars] as usize;
            if out.len() <= e {
                out.resize(e + 1, BigRational::zero());
            }
            out[e] = c.clone();
        }
        out
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut k = k.clone();
                k.swap(i, j);
                (k, c.clone())
            })
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Invariant under every transposition of two variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars).all(|i| (i + 1..self.nvars).all(|j| self.swap_vars(i, j) == *self))
    }

    /// Substitutes a value for `t`.
    pub fn specialize_t(&self, t: &BigRational) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            let e = key[self.nvars];
            key[self.nvars] = 0;
            let power = num_traits::pow(t.clone(), e as usize);
            out.add_term(key, c * power);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Exact quotient by `x_i - x_j`; fails if the division leaves a remainder.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<Self> {
        // Write self = Σ_d p_d x_i^d. From self = q (x_i - x_j):
        // q_{D-1} = p_D and q_{d-1} = p_d + x_j q_d, remainder p_0 + x_j q_0.
        let mut by_degree: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            let d = key[i];
            key[i] = 0;
            by_degree
                .entry(d)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(key, c.clone());
        }
        let top = match by_degree.keys().next_back() {
            Some(&d) => d,
            None => return Ok(MultiPoly::zero(self.nvars)),
        };
        let xj = MultiPoly::var(self.nvars, j);
        let mut quotient = MultiPoly::zero(self.nvars);
        let mut carry = MultiPoly::zero(self.nvars);
        for d in (0..=top).rev() {
            let pd = by_degree.remove(&d).unwrap_or_else(|| MultiPoly::zero(self.nvars));
            let next = &pd + &(&xj * &carry);
            if d == 0 {
                if !next.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "residual denominator: division by x{} - x{} is not exact",
                        i + 1,
                        j + 1
                    )));
                }
                break;
            }
            for (k, c) in &next.terms {
                let mut key = k.clone();
                key[i] += d - 1;
                quotient.add_term(key, c.clone());
            }
            carry = next;
        }
        Ok(quotient)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let key = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(key, ca * cb);
            }
        }
        out
    }
}

fn check_parts(lam: &Partition, nvars: usize) -> Result<Vec<u32>> {
    Ok(lam.padded(nvars)?.into_iter().map(|p| p as u32).collect())
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Sum of the distinct monomials whose exponents rearrange `lam` (padded
/// with zeros to `nvars`).
pub fn monomial_sym(lam: &Partition, nvars: usize) -> Result<MultiPoly> {
    let mut exps = check_parts(lam, nvars)?;
    exps.sort_unstable();
    let mut out = MultiPoly::zero(nvars);
    loop {
        let mut key = exps.clone();
        key.push(0);
        out.add_term(key, BigRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(out)
}

// Lexicographic successor; visits each distinct arrangement once.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schur polynomial as the generating function of semistandard tableaux
/// with entries in `1..=nvars`.
pub fn schur(lam: &Partition, nvars: usize) -> Result<MultiPoly> {
    check_parts(lam, nvars)?;
    let mut out = MultiPoly::zero(nvars);
    for tab in ssyt_bounded(lam, nvars) {
        let mut key = vec![0u32; nvars + 1];
        for &x in tab.rows().iter().flatten() {
            key[x - 1] += 1;
        }
        out.add_term(key, BigRational::one());
    }
    Ok(out)
}

/// Alternant `a_α = Σ_w sgn(w) x^{w(α)}`.
fn alternant(alpha: &[u32]) -> MultiPoly {
    let n = alpha.len();
    let mut out = MultiPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut key = vec![0u32; n + 1];
        for (i, &p) in perm.iter().enumerate() {
            key[p] = alpha[i];
        }
        out.add_term(key, rat(permutation_sign(&perm)));
        if !next_permutation_usize(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation_usize(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Schur polynomial as the bialternant `a_{λ+δ} / a_δ`, dividing the
/// numerator by each `x_i - x_j` in turn.
pub fn schur_by_bialternant(lam: &Partition, nvars: usize) -> Result<MultiPoly> {
    let parts = check_parts(lam, nvars)?;
    let shifted: Vec<u32> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (nvars - 1 - i) as u32)
        .collect();
    let mut q = alternant(&shifted);
    for i in 0..nvars {
        for j in i + 1..nvars {
            q = q.div_linear(i, j)?;
        }
    }
    Ok(q)
}

/// `v_λ(t) = Π_i Π_{j=1}^{m_i} (1 - t^j)/(1 - t)`, with `m_0` counting the
/// zero parts of the padded partition.
pub fn hl_normalizer(lam: &Partition, nvars: usize) -> Result<IntPolynomial> {
    let padded = lam.padded(nvars)?;
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for p in padded {
        *mult.entry(p).or_default() += 1;
    }
    let mut v = IntPolynomial::one();
    for &m in mult.values() {
        for j in 1..=m {
            // (1 - t^j)/(1 - t) = 1 + t + ... + t^{j-1}
            v = &v * &IntPolynomial::new(vec![BigInt::one(); j]);
        }
    }
    Ok(v)
}

/// Hall-Littlewood polynomial
/// `P_λ = v_λ(t)^{-1} Σ_w w( x^λ Π_{i<j} (x_i - t x_j)/(x_i - x_j) )`.
///
/// The sum equals `A / a_δ` with `A` the antisymmetrisation of
/// `F = x^λ Π_{i<j} (x_i - t x_j)`. `A` is determined by its coefficients at
/// strictly decreasing exponents `α`, each obtained by sorting the exponents
/// of `F` and tracking the sign, and `a_α / a_δ = s_{α-δ}`.
pub fn hall_littlewood(lam: &Partition, nvars: usize) -> Result<MultiPoly> {
    let parts = check_parts(lam, nvars)?;
    if nvars > MAX_HL_VARS {
        return Err(Error::VariableBudget {
            nvars,
            limit: MAX_HL_VARS,
        });
    }

    // F, keyed by (x exponents, t exponent), with machine-integer coefficients.
    let mut f: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut start = parts.clone();
    start.push(0);
    f.insert(start, 1);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let mut next: HashMap<Vec<u32>, i64> = HashMap::with_capacity(f.len() * 2);
            for (k, &c) in &f {
                let mut a = k.clone();
                a[i] += 1;
                *next.entry(a).or_default() += c;
                let mut b = k.clone();
                b[j] += 1;
                b[nvars] += 1;
                *next.entry(b).or_default() -= c;
            }
            next.retain(|_, c| *c != 0);
            f = next;
        }
    }

    // Coefficients of the antisymmetrisation at decreasing exponents.
    let mut antisym: BTreeMap<Vec<u32>, BTreeMap<u32, i64>> = BTreeMap::new();
    for (k, c) in &f {
        let x = &k[..nvars];
        let mut order: Vec<usize> = (0..nvars).collect();
        order.sort_by(|&a, &b| x[b].cmp(&x[a]));
        let alpha: Vec<u32> = order.iter().map(|&i| x[i]).collect();
        if alpha.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let sign = permutation_sign(&order);
        *antisym
            .entry(alpha)
            .or_default()
            .entry(k[nvars])
            .or_default() += sign * c;
    }

    let mut numerator = MultiPoly::zero(nvars);
    for (alpha, by_t) in antisym {
        if by_t.values().all(|&c| c == 0) {
            continue;
        }
        let shape: Vec<usize> = alpha
            .iter()
            .enumerate()
            .map(|(i, &a)| (a as usize) - (nvars - 1 - i))
            .collect();
        let s = schur_by_bialternant(&Partition::new(shape)?, nvars)?;
        for (&e, &c) in &by_t {
            if c == 0 {
                continue;
            }
            for (k, sc) in s.terms() {
                let mut key = k.clone();
                key[nvars] = e;
                numerator.add_term(key, sc * rat(c));
            }
        }
    }

    divide_by_t_poly(&numerator, &hl_normalizer(lam, nvars)?)
}

/// Divides every `t`-coefficient polynomial of `p` by `d(t)`; any remainder
/// is an error.
fn divide_by_t_poly(p: &MultiPoly, d: &IntPolynomial) -> Result<MultiPoly> {
    let nvars = p.nvars;
    let mut groups: BTreeMap<Vec<u32>, Vec<BigRational>> = BTreeMap::new();
    for (k, c) in &p.terms {
        let coeffs = groups.entry(k[..nvars].to_vec()).or_default();
        let e = k[nvars] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigRational::zero());
        }
        coeffs[e] = c.clone();
    }
    let mut out = MultiPoly::zero(nvars);
    for (x, num) in groups {
        let q = div_exact_rational(&num, d)?;
        for (e, c) in q.into_iter().enumerate() {
            let mut key = x.clone();
            key.push(e as u32);
            out.add_term(key, c);
        }
    }
    Ok(out)
}

/// Long division of a rational-coefficient polynomial by an integer one.
fn div_exact_rational(num: &[BigRational], d: &IntPolynomial) -> Result<Vec<BigRational>> {
    let dd = d
        .degree()
        .ok_or_else(|| Error::Inconsistent("division by the zero polynomial".into()))?;
    let lead = BigRational::from_integer(d.coeff(dd));
    let mut rem: Vec<BigRational> = num.to_vec();
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    if rem.len() <= dd {
        return if rem.is_empty() {
            Ok(Vec::new())
        } else {
            Err(Error::Inconsistent("t-coefficient not divisible by v_λ(t)".into()))
        };
    }
    let mut q = vec![BigRational::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dd] / &lead;
        for (j, dc) in d.coeffs().iter().enumerate() {
            rem[i + j] -= &c * BigRational::from_integer(dc.clone());
        }
        q[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::Inconsistent("t-coefficient not divisible by v_λ(t)".into()));
    }
    Ok(q)
}

/// Transition data between the Schur and Hall-Littlewood bases for all
/// partitions of `n`, in `n` variables.
#[derive(Debug, Clone)]
pub struct TransitionOracle {
    n: usize,
    partitions: Vec<Partition>,
    /// `hl[μ][ν]` = coefficient of `m_ν` in `P_μ`, as a polynomial in `t`.
    hl: Vec<Vec<Vec<BigRational>>>,
}

impl TransitionOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_HL_VARS {
            return Err(Error::VariableBudget {
                nvars: n,
                limit: MAX_HL_VARS,
            });
        }
        let partitions = enumerate_partitions(n);
        let nvars = n.max(1);
        let mut hl = Vec::with_capacity(partitions.len());
        for mu in &partitions {
            let p = hall_littlewood(mu, nvars)?;
            let row = partitions
                .iter()
                .map(|nu| Ok(p.t_coefficients(&check_parts(nu, nvars)?)))
                .collect::<Result<Vec<_>>>()?;
            hl.push(row);
        }
        Ok(TransitionOracle { n, partitions, hl })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `K_{λμ}(t)` for every `μ ⊢ n`, indexed like [`Self::partitions`].
    ///
    /// The partitions are in reverse-lexicographic order, which extends the
    /// dominance order, so `P` is unitriangular and the system
    /// `[m_ν] s_λ = Σ_μ K_{λμ}(t) [m_ν] P_μ` is solved by forward
    /// substitution.
    pub fn row(&self, shape: &Partition) -> Result<Vec<IntPolynomial>> {
        if shape.size() != self.n {
            return Err(Error::SizeMismatch {
                left: shape.size() as u64,
                right: self.n as u64,
            });
        }
        let nvars = self.n.max(1);
        let s = schur_by_bialternant(shape, nvars)?;
        let count = self.partitions.len();
        let mut k: Vec<Vec<BigRational>> = Vec::with_capacity(count);
        for v in 0..count {
            let diag = trim(self.hl[v][v].clone());
            if diag != vec![BigRational::one()] {
                return Err(Error::Inconsistent(format!(
                    "P_{} has coefficient {:?} on its own monomial",
                    self.partitions[v], diag
                )));
            }
            for mu in v + 1..count {
                if !trim(self.hl[mu][v].clone()).is_empty() {
                    return Err(Error::Inconsistent(format!(
                        "P_{} is not unitriangular at m_{}",
                        self.partitions[mu], self.partitions[v]
                    )));
                }
            }
            let nu = check_parts(&self.partitions[v], nvars)?;
            let mut acc = vec![s.coeff(&nu, 0)];
            for (mu, kmu) in k.iter().enumerate() {
                let prod = poly_mul(kmu, &self.hl[mu][v]);
                acc = poly_sub(&acc, &prod);
            }
            k.push(trim(acc));
        }
        k.into_iter().map(to_int_poly).collect()
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

fn to_int_poly(v: Vec<BigRational>) -> Result<IntPolynomial> {
    v.into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Inconsistent(format!("non-integer coefficient {}", c)))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// `K_{shape, weight}(t)` from the Schur/Hall-Littlewood transition matrix.
/// Fails if the result has degree above `t_degree_bound`.
pub fn kostka_foulkes_via_transition(
    shape: &Partition,
    weight: &Partition,
    t_degree_bound: usize,
) -> Result<IntPolynomial> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch {
            left: shape.size() as u64,
            right: weight.size() as u64,
        });
    }
    let oracle = TransitionOracle::new(shape.size())?;
    let idx = oracle
        .partitions()
        .iter()
        .position(|p| p == weight)
        .expect("weight is a partition of n");
    let k = oracle.row(shape)?.swap_remove(idx);
    if k.degree().is_some_and(|d| d > t_degree_bound) {
        return Err(Error::Inconsistent(format!(
            "degree {} exceeds the bound {}",
            k.degree().unwrap(),
            t_degree_bound
        )));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::kostka_number;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(exps: &[u32]) -> MultiPoly {
        MultiPoly::monomial(exps, 0, BigRational::one())
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial_sym(&p(&[1, 1]), 2).unwrap(), x(&[1, 1]));
        assert_eq!(monomial_sym(&p(&[2]), 2).unwrap(), &x(&[2, 0]) + &x(&[0, 2]));
        assert_eq!(monomial_sym(&p(&[2, 1]), 3).unwrap().len(), 6);
        assert_eq!(monomial_sym(&p(&[1, 1]), 3).unwrap().len(), 3);
        assert!(monomial_sym(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[2, 1]), 2).unwrap(), &x(&[2, 1]) + &x(&[1, 2]));
        assert_eq!(schur(&p(&[5]), 1).unwrap(), x(&[5]));
        assert_eq!(schur(&p(&[1, 1]), 2).unwrap(), x(&[1, 1]));
        assert!(schur(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn bialternant_matches_tableaux() {
        for n in 0..=5 {
            for lam in enumerate_partitions(n) {
                for nvars in lam.len().max(1)..=4 {
                    assert_eq!(
                        schur_by_bialternant(&lam, nvars).unwrap(),
                        schur(&lam, nvars).unwrap(),
                        "{} in {} vars",
                        lam,
                        nvars
                    );
                }
            }
        }
    }

    #[test]
    fn schur_monomial_coefficients_are_kostka_numbers() {
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                let s = schur(&lam, n).unwrap();
                for mu in enumerate_partitions(n) {
                    let key: Vec<u32> = mu.padded(n).unwrap().iter().map(|&v| v as u32).collect();
                    assert_eq!(
                        s.coeff(&key, 0),
                        BigRational::from_integer(kostka_number(&lam, &mu).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn linear_division() {
        let a = &x(&[2, 0]) - &x(&[0, 2]);
        assert_eq!(a.div_linear(0, 1).unwrap(), &x(&[1, 0]) + &x(&[0, 1]));
        assert!(x(&[1, 0]).div_linear(0, 1).is_err());
    }

    #[test]
    fn hall_littlewood_specializations() {
        for n in 1..=4 {
            for lam in enumerate_partitions(n) {
                for nvars in lam.len()..=n {
                    let hl = hall_littlewood(&lam, nvars).unwrap();
                    assert_eq!(hl.specialize_t(&rat(0)), schur(&lam, nvars).unwrap());
                    assert_eq!(hl.specialize_t(&rat(1)), monomial_sym(&lam, nvars).unwrap());
                }
            }
        }
        assert_eq!(hall_littlewood(&p(&[1]), 1).unwrap(), x(&[1]));
    }

    #[test]
    fn hall_littlewood_two_variables() {
        // P_{(1,1)}(x1, x2; t) = x1 x2 and P_{(2)} = x1^2 + x2^2 + (1 - t) x1 x2.
        assert_eq!(hall_littlewood(&p(&[1, 1]), 2).unwrap(), x(&[1, 1]));
        let expected = &(&(&x(&[2, 0]) + &x(&[0, 2])) + &x(&[1, 1]))
            - &MultiPoly::monomial(&[1, 1], 1, BigRational::one());
        assert_eq!(hall_littlewood(&p(&[2]), 2).unwrap(), expected);
    }

    #[test]
    fn symmetry_under_swaps() {
        for n in 1..=5 {
            for lam in enumerate_partitions(n) {
                let nvars = n.min(4).max(lam.len());
                assert!(schur(&lam, nvars).unwrap().is_symmetric());
                assert!(hall_littlewood(&lam, nvars).unwrap().is_symmetric());
            }
        }
    }

    #[test]
    fn variable_budget() {
        assert!(matches!(
            hall_littlewood(&p(&[1]), 7),
            Err(Error::VariableBudget { nvars: 7, limit: 6 })
        ));
    }

    #[test]
    fn transition_examples() {
        let k = |a: &[usize], b: &[usize]| {
            kostka_foulkes_via_transition(&p(a), &p(b), 10).unwrap()
        };
        assert_eq!(k(&[2, 1], &[1, 1, 1]), IntPolynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(k(&[3], &[1, 1, 1]), IntPolynomial::from_i64s(&[0, 0, 0, 1]));
        assert_eq!(k(&[2, 2], &[2, 2]), IntPolynomial::one());
        assert_eq!(k(&[1, 1, 1], &[2, 1]), IntPolynomial::zero());
        assert!(kostka_foulkes_via_transition(&p(&[3]), &p(&[1, 1, 1]), 2).is_err());
    }
}
