//! Generating function of the Gini index, level sets, and exact expected
//! values over all partitions of `n`.
//!
//! The bivariate series is
//! `G(q, x) = Π_{m≥1} 1/(1 - q^{C(m+1,2)} x^m) - 1`, whose `x^n` coefficient
//! is `Σ_{λ⊢n} q^{C(n+1,2) - g(λ)}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gini::{binom2, gini};
use crate::partition::{enumerate_partitions, partition_counts};
use crate::poly::IntPolynomial;

/// Coefficients of `x^0 .. x^max_n` in the truncated product (the constant
/// term is left as 1, i.e. before subtracting one).
///
/// Each factor `1/(1 - q^a x^m)` is applied in place, ascending in the
/// `x`-degree, which is the usual unbounded-knapsack update.
pub fn genfun_table(max_n: usize) -> Vec<IntPolynomial> {
    let mut table = vec![IntPolynomial::zero(); max_n + 1];
    table[0] = IntPolynomial::one();
    for m in 1..=max_n {
        let shift = m * (m + 1) / 2;
        for d in m..=max_n {
            let add = table[d - m].shift(shift);
            table[d] += &add;
        }
    }
    table
}

/// Coefficient of `x^n` in `G(q, x)`, as a polynomial in `q`.
pub fn genfun_coefficient(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Domain("generating-function index must be >= 1".into()));
    }
    Ok(genfun_table(n).swap_remove(n))
}

/// `Σ_{λ⊢n} q^{C(n+1,2) - g(λ)}` summed over an explicit enumeration.
pub fn genfun_coefficient_by_enumeration(n: usize) -> IntPolynomial {
    let top = binom2(n + 1);
    let mut out = IntPolynomial::zero();
    for lam in enumerate_partitions(n) {
        let exp = (&top - gini(&lam)).to_usize().expect("exponent fits in usize");
        out.add_term(exp, &BigInt::one());
    }
    out
}

/// Size of the largest fibre of `g` on the partitions of `n`, counted by
/// enumeration.
pub fn level_set_by_enumeration(n: usize) -> BigInt {
    let mut fibres = std::collections::HashMap::new();
    for lam in enumerate_partitions(n) {
        *fibres.entry(gini(&lam)).or_insert(0u64) += 1;
    }
    BigInt::from(fibres.into_values().max().unwrap_or(0))
}

/// `b(n)`: the largest coefficient of the `x^n` coefficient of `G`, checked
/// against the direct fibre count.
pub fn max_level_set_size(n: usize) -> Result<BigInt> {
    let coeff = genfun_coefficient(n)?;
    let from_series = coeff.max_coeff().cloned().unwrap_or_default();
    let counted = level_set_by_enumeration(n);
    if from_series != counted {
        return Err(Error::Inconsistent(format!(
            "level set size for n = {}: series gives {}, enumeration gives {}",
            n, from_series, counted
        )));
    }
    Ok(from_series)
}

/// `P(n) / C(n,2)`, the pigeonhole lower bound on `b(n)`.
pub fn antichain_lower_bound(n: usize) -> Result<BigRational> {
    if n <= 1 {
        return Err(Error::Domain(format!("antichain bound needs n > 1, got {}", n)));
    }
    let p = partition_counts(n).swap_remove(n);
    Ok(BigRational::new(p, binom2(n)))
}

/// `σ_x(n) = Σ_{d | n} d^x`.
pub fn divisor_sum(x: u32, n: u64) -> BigInt {
    assert!(n >= 1, "divisor_sum needs n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += num_traits::pow(BigInt::from(d), x as usize);
            let e = n / d;
            if e != d {
                total += num_traits::pow(BigInt::from(e), x as usize);
            }
        }
        d += 1;
    }
    total
}

/// `Σ_{λ⊢n} g(λ)` for `n = 0..=max_n`, from
/// `½ (P(n)(n² + n) - Σ_{i<n} P(i)(σ_1(n-i) + σ_2(n-i)))`.
pub fn gini_sums(max_n: usize) -> Vec<BigInt> {
    let p = partition_counts(max_n);
    let sigma: Vec<BigInt> = (0..=max_n)
        .map(|m| {
            if m == 0 {
                BigInt::zero()
            } else {
                divisor_sum(1, m as u64) + divisor_sum(2, m as u64)
            }
        })
        .collect();
    (0..=max_n)
        .map(|n| {
            let mut s = &p[n] * BigInt::from(n * n + n);
            for i in 0..n {
                s -= &p[i] * &sigma[n - i];
            }
            let (q, r) = s.div_rem(&BigInt::from(2));
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// `Σ_{λ⊢n} g(λ)` by the closed form.
pub fn gini_sum(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("gini_sum needs n >= 1".into()));
    }
    Ok(gini_sums(n).swap_remove(n))
}

pub fn gini_sum_by_enumeration(n: usize) -> BigInt {
    enumerate_partitions(n).iter().map(gini).sum()
}

fn check_expected_domain(n: usize) -> Result<()> {
    if n <= 1 {
        return Err(Error::Domain(format!("expected value needs n > 1, got {}", n)));
    }
    Ok(())
}

/// `E(g)` over the partitions of `n` (not normalised).
pub fn expected_value(n: usize) -> Result<BigRational> {
    check_expected_domain(n)?;
    let p = partition_counts(n).swap_remove(n);
    Ok(BigRational::new(gini_sum(n)?, p))
}

/// `E(g / C(n,2))` over the partitions of `n`, computed two ways: from the
/// closed-form sum, and as `(n+1)/(n-1) - Σ_{i<n} P(i)(σ_1 + σ_2)(n-i) / (P(n)(n² - n))`.
pub fn expected_value_normalized(n: usize) -> Result<BigRational> {
    check_expected_domain(n)?;
    let direct = normalized_from_sum(n, &gini_sum(n)?);
    let other = expected_value_normalized_by_difference(n)?;
    if direct != other {
        return Err(Error::Inconsistent(format!(
            "expected value for n = {}: {} vs {}",
            n, direct, other
        )));
    }
    Ok(direct)
}

fn normalized_from_sum(n: usize, sum: &BigInt) -> BigRational {
    let p = partition_counts(n).swap_remove(n);
    BigRational::new(sum.clone(), binom2(n) * p)
}

/// The `(n+1)/(n-1) - ...` form of the normalised expectation.
pub fn expected_value_normalized_by_difference(n: usize) -> Result<BigRational> {
    check_expected_domain(n)?;
    let p = partition_counts(n);
    let mut tail = BigInt::zero();
    for (i, count) in p.iter().take(n).enumerate() {
        let m = (n - i) as u64;
        tail += count * (divisor_sum(1, m) + divisor_sum(2, m));
    }
    let lead = BigRational::new(BigInt::from(n + 1), BigInt::from(n - 1));
    let denom = &p[n] * BigInt::from(n * n - n);
    Ok(lead - BigRational::new(tail, denom))
}

/// Decimal rendering with `places` digits after the point, rounding half to
/// even.
pub fn format_decimal(value: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = value * BigRational::from_integer(scale.clone());
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let floor = magnitude.floor().to_integer();
    let frac = &magnitude - BigRational::from_integer(floor.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if negative && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{}{}", sign, int_part);
    }
    format!("{}{}.{:0>width$}", sign, int_part, frac_part, width = places)
}

/// One row of the expected-value table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedValueRow {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub decimal: String,
}

fn ser_rational<S: serde::Serializer>(
    v: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    crate::json::rational(v).serialize(s)
}

/// Normalised expected values for each requested `n`, from a single pass of
/// the closed form.
pub fn expected_value_rows(ns: &[usize]) -> Result<Vec<ExpectedValueRow>> {
    let max_n = ns.iter().copied().max().unwrap_or(0);
    let sums = gini_sums(max_n);
    let p = partition_counts(max_n);
    ns.iter()
        .map(|&n| {
            check_expected_domain(n)?;
            let value = BigRational::new(sums[n].clone(), binom2(n) * &p[n]);
            Ok(ExpectedValueRow {
                n,
                decimal: format_decimal(&value, 4),
                value,
            })
        })
        .collect()
}

/// CSV with columns `n,num,den,decimal` and CRLF line endings.
pub fn expected_value_csv(rows: &[ExpectedValueRow]) -> String {
    let mut out = String::from("n,num,den,decimal\r\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\r\n",
            r.n,
            r.value.numer(),
            r.value.denom(),
            r.decimal
        ));
    }
    out
}

/// First `n` in `from+1..=to` where the normalised expectation fails to
/// increase strictly, if any.
pub fn first_monotonicity_violation(from: usize, to: usize) -> Result<Option<usize>> {
    let ns: Vec<usize> = (from..=to).collect();
    let rows = expected_value_rows(&ns)?;
    Ok(rows
        .windows(2)
        .find(|w| w[1].value <= w[0].value)
        .map(|w| w[1].n))
}
