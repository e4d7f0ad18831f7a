//! Unit-weight Barnes multiple zeta `ζ_N(s, x)` and its alternating form
//! `ζ_{E,N}(s, x)`.
//!
//! Grouping the N-fold sum by `n = m_1 + … + m_N` gives the single series
//! `Σ_n C(n+N-1, N-1) (x+n)^{-s}`. The binomial weight is a polynomial of
//! degree `N-1` in `x+n`,
//!
//! ```text
//! C(n+N-1, N-1) = Σ_{j<N} a_j(x) (x+n)^j,
//! ```
//!
//! so `ζ_N(s,x) = Σ_j a_j(x) ζ(s-j, x)` and likewise for the alternating
//! family with `ζ_E`. Both sides continue analytically in `s`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hurwitz::{
    alt_hurwitz_zeta, alt_hurwitz_zeta_ds, hurwitz_zeta, hurwitz_zeta_ds, POLE_GUARD,
};
use crate::types::{
    check_finite, check_right_half_plane, real, BarnesOrder, ComplexValue, EmParams, ValueWithError,
};

/// Coefficients `a_0..a_{N-1}` of the binomial weight as a polynomial in
/// `x + n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCoeffs {
    pub order: BarnesOrder,
    pub base: ComplexValue,
    pub coeffs: Vec<ComplexValue>,
}

impl ReductionCoeffs {
    /// Evaluates `Σ_j a_j y^j` by Horner's rule.
    pub fn eval(&self, y: ComplexValue) -> ComplexValue {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * y + c)
    }
}

const CACHE_CAPACITY: usize = 1024;

type CacheKey = (u32, u64, u64);

fn cache() -> &'static Mutex<HashMap<CacheKey, Vec<Complex64>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Vec<Complex64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn expand(n: u32, x: Complex64) -> Vec<Complex64> {
    // Π_{i=1}^{N-1} (y + (i - x)), one linear factor at a time
    let mut poly = vec![Complex64::new(1.0, 0.0)];
    for i in 1..n {
        let c = Complex64::new(i as f64 - x.re, -x.im);
        let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
        for (j, &p) in poly.iter().enumerate() {
            next[j] += p * c;
            next[j + 1] += p;
        }
        poly = next;
    }
    let factorial: f64 = (1..n).map(f64::from).product();
    poly.iter().map(|&p| p / factorial).collect()
}

/// Expands `C(n+N-1, N-1)` in powers of `y = x + n`.
pub fn reduction_coeffs(order: BarnesOrder, x: ComplexValue) -> Result<ReductionCoeffs> {
    check_finite(x, "x")?;
    let key = (order.get(), x.re.to_bits(), x.im.to_bits());
    let coeffs = {
        let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(c) = map.get(&key) {
            c.clone()
        } else {
            let c = expand(order.get(), x);
            if map.len() >= CACHE_CAPACITY {
                map.clear();
            }
            map.insert(key, c.clone());
            c
        }
    };
    Ok(ReductionCoeffs {
        order,
        base: x,
        coeffs,
    })
}

fn pole_guard(order: BarnesOrder, s: Complex64) -> Result<()> {
    for k in 1..=order.get() {
        if (s - k as f64).norm() <= POLE_GUARD {
            return Err(Error::Pole {
                s,
                pole: i64::from(k),
                radius: POLE_GUARD,
            });
        }
    }
    Ok(())
}

fn combine<F>(order: BarnesOrder, x: Complex64, mut term: F) -> Result<ValueWithError>
where
    F: FnMut(u32) -> Result<ValueWithError>,
{
    check_right_half_plane(x)?;
    let rc = reduction_coeffs(order, x)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut scale = 0.0;
    for (j, &a) in rc.coeffs.iter().enumerate() {
        let t = term(j as u32)?;
        let contrib = a * t.value;
        value += contrib;
        err += a.norm() * t.err_estimate;
        scale += contrib.norm();
    }
    Ok(ValueWithError::new(
        value,
        err + 2.0 * order.get() as f64 * f64::EPSILON * scale,
    ))
}

/// `ζ_N(s, x)`; simple poles at `s = 1, …, N`.
pub fn barnes_zeta(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    check_finite(s, "s")?;
    pole_guard(order, s)?;
    combine(order, x, |j| hurwitz_zeta(s - j as f64, x, params))
}

/// `∂ζ_N(s, x)/∂s` away from the poles.
pub fn barnes_zeta_ds(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    check_finite(s, "s")?;
    pole_guard(order, s)?;
    combine(order, x, |j| hurwitz_zeta_ds(s - j as f64, x, params))
}

/// `∂ζ_N(s, x)/∂s` at `s = 0`, i.e. `log Γ_N(x)`.
pub fn barnes_zeta_ds0(
    order: BarnesOrder,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    barnes_zeta_ds(order, real(0.0), x, params)
}

/// `ζ_{E,N}(s, x)`, entire in `s`.
pub fn alt_barnes_zeta(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    check_finite(s, "s")?;
    combine(order, x, |j| alt_hurwitz_zeta(s - j as f64, x, params))
}

/// `∂ζ_{E,N}(s, x)/∂s`.
pub fn alt_barnes_zeta_ds(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    check_finite(s, "s")?;
    combine(order, x, |j| alt_hurwitz_zeta_ds(s - j as f64, x, params))
}

/// `∂ζ_{E,N}(s, x)/∂s` at `s = 0`, i.e. `log Γ*_N(x)`.
pub fn alt_barnes_zeta_ds0(
    order: BarnesOrder,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    alt_barnes_zeta_ds(order, real(0.0), x, params)
}
