//! Bernoulli numbers in exact rational arithmetic.
//!
//! The table is built once, exactly, from the integer tangent numbers and
//! only rounded to double precision at the end. The defining recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` is checked in the tests.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::types::MAX_BERNOULLI_ORDER;

/// Largest `K` accepted by [`bernoulli_numbers`] (table up to `B_60`).
pub const MAX_TABLE_ORDER: u32 = 30;

// One past the largest Euler-Maclaurin order so the first omitted term is
// always available.
const MAX_INDEX: usize = 2 * (MAX_BERNOULLI_ORDER as usize + 1);

struct Tables {
    exact: Vec<BigRational>,
    // B_{2k} / (2k)! for k = 0..=MAX_INDEX/2
    em_coeffs: Vec<f64>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let exact = exact_recurrence(MAX_INDEX);
        let mut factorial = BigInt::one();
        let mut em_coeffs = Vec::with_capacity(MAX_INDEX / 2 + 1);
        for (n, b) in exact.iter().enumerate() {
            if n > 0 {
                factorial *= BigInt::from(n);
            }
            if n % 2 == 0 {
                // rounding only needs the quotient, so skip the gcd
                let c = BigRational::new_raw(b.numer().clone(), b.denom() * &factorial);
                em_coeffs.push(c.to_f64().expect("finite Bernoulli coefficient"));
            }
        }
        Tables { exact, em_coeffs }
    })
}

fn exact_recurrence(max_index: usize) -> Vec<BigRational> {
    // Tangent numbers T_1..T_n by the in-place integer recurrence, then
    // B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
    let n = max_index / 2;
    let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    if n >= 1 {
        t[1] = BigInt::one();
    }
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    let mut b = vec![BigRational::zero(); max_index + 1];
    b[0] = BigRational::one();
    if max_index >= 1 {
        b[1] = BigRational::new(-BigInt::one(), BigInt::from(2));
    }
    for k in 1..=n {
        let four_k = BigInt::one() << (2 * k);
        let den = &four_k * (&four_k - BigInt::one());
        let num = &t[k] * BigInt::from(2 * k);
        let v = BigRational::new(num, den);
        b[2 * k] = if k % 2 == 1 { v } else { -v };
    }
    b
}

/// Exact Bernoulli number `B_n` (with `B_1 = -1/2`), for `n <= 122`.
pub fn bernoulli_exact(n: usize) -> Option<BigRational> {
    tables().exact.get(n).cloned()
}

/// `B_{2k} / (2k)!` rounded to double, for `k <= 61`.
pub(crate) fn em_coefficient(k: usize) -> f64 {
    tables().em_coeffs[k]
}

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_{2K}` rounded to double.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `B_{2k}` for `1 <= k <= order`.
    pub fn b2k(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

pub fn bernoulli_numbers(k: u32) -> Result<BernoulliTable> {
    if !(1..=MAX_TABLE_ORDER).contains(&k) {
        return Err(Error::Validation(format!(
            "Bernoulli table order K = {k} outside 1..={MAX_TABLE_ORDER}"
        )));
    }
    let t = tables();
    let values = (1..=k as usize)
        .map(|i| t.exact[2 * i].to_f64().expect("finite Bernoulli number"))
        .collect();
    Ok(BernoulliTable { values })
}
