//! Integer combinations of the `n`-th roots of unity.
//!
//! An element is stored as its residue vector in `Z[x]/(x^n - 1)`, so
//! multiplication is cyclic convolution. Deciding whether an element is an
//! integer needs the kernel of `x ↦ ζ`: the all-equal-tail test catches
//! multiples of `1 + x + ... + x^{n-1}`, and anything else is reduced modulo
//! the cyclotomic polynomial `Φ_n`.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `Σ residues[a] ζ^a` for a primitive `n`-th root of unity `ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    residues: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        CyclotomicElement {
            residues: vec![BigInt::zero(); n],
        }
    }

    pub fn from_integer(n: usize, c: BigInt) -> Self {
        let mut e = CyclotomicElement::zero(n);
        e.residues[0] = c;
        e
    }

    pub fn one(n: usize) -> Self {
        CyclotomicElement::from_integer(n, BigInt::one())
    }

    /// `ζ^a`, with `a` taken modulo `n`.
    pub fn root(n: usize, a: i64) -> Self {
        let mut e = CyclotomicElement::zero(n);
        e.residues[a.rem_euclid(n as i64) as usize] = BigInt::one();
        e
    }

    /// Builds an element from any coefficient list; index `a` is reduced
    /// modulo `n`.
    pub fn from_residues(n: usize, coeffs: &[BigInt]) -> Self {
        let mut e = CyclotomicElement::zero(n);
        for (a, c) in coeffs.iter().enumerate() {
            e.residues[a % n] += c;
        }
        e
    }

    pub fn order(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[BigInt] {
        &self.residues
    }

    /// Complex conjugate: `ζ^a ↦ ζ^{-a}`.
    pub fn conj(&self) -> Self {
        let n = self.order();
        let mut e = CyclotomicElement::zero(n);
        for (a, c) in self.residues.iter().enumerate() {
            e.residues[(n - a) % n] = c.clone();
        }
        e
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CyclotomicElement {
            residues: self.residues.iter().map(|r| r * c).collect(),
        }
    }

    /// The all-equal-tail test: if `residues[1..]` are all equal to `c`,
    /// the element is the integer `residues[0] - c` (because
    /// `Σ_a ζ^a = 0`). Returns `None` when the tail is not constant.
    pub fn as_integer_fast(&self) -> Option<BigInt> {
        let tail = self.residues.get(1..).unwrap_or(&[]);
        match tail.first() {
            None => Some(self.residues[0].clone()),
            Some(c) if tail.iter().all(|r| r == c) => Some(&self.residues[0] - c),
            Some(_) => None,
        }
    }

    /// Canonical representative modulo `Φ_n`, of degree below `φ(n)`.
    pub fn reduce(&self) -> IntPolynomial {
        let p = IntPolynomial::new(self.residues.clone());
        p.div_rem_monic(&cyclotomic_polynomial(self.order())).1
    }

    /// The integer this element equals, or a [`Error::NonRational`] error.
    pub fn to_integer(&self) -> Result<BigInt> {
        if let Some(v) = self.as_integer_fast() {
            return Ok(v);
        }
        let r = self.reduce();
        match r.degree() {
            None => Ok(BigInt::zero()),
            Some(0) => Ok(r.coeff(0)),
            Some(_) => Err(Error::NonRational(format!(
                "residues {:?} reduce to {} modulo Φ_{}",
                self.residues.iter().map(ToString::to_string).collect::<Vec<_>>(),
                r.pretty("ζ"),
                self.order()
            ))),
        }
    }

    /// Equality as complex numbers (not as residue vectors).
    pub fn value_eq(&self, other: &Self) -> bool {
        (self - other).reduce().is_zero()
    }
}

/// `Φ_n`, from `x^n - 1 = Π_{d | n} Φ_d`.
pub fn cyclotomic_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = &IntPolynomial::monomial(n, BigInt::one()) - &IntPolynomial::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem_monic(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

fn check_orders(a: &CyclotomicElement, b: &CyclotomicElement) {
    assert_eq!(a.order(), b.order(), "cyclotomic orders differ");
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CyclotomicElement> for CyclotomicElement {
    fn add_assign(&mut self, rhs: &CyclotomicElement) {
        check_orders(self, rhs);
        for (a, b) in self.residues.iter_mut().zip(&rhs.residues) {
            *a += b;
        }
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            residues: self.residues.iter().map(|r| -r).collect(),
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        check_orders(self, rhs);
        let n = self.order();
        let mut out = CyclotomicElement::zero(n);
        for (a, x) in self.residues.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.residues.iter().enumerate() {
                if !y.is_zero() {
                    out.residues[(a + b) % n] += x * y;
                }
            }
        }
        out
    }
}
