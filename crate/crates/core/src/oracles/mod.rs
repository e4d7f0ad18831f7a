//! Independent numerical oracles used to cross-check the series machinery.
//!
//! Nothing here feeds the primary evaluation paths: the Mellin integrals,
//! the truncated multi-sums, Euler's integral and the Student-t integral
//! only ever serve as a second opinion.

mod multisum;
pub mod quadrature;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::euler_gamma;
use crate::types::{
    check_finite, check_right_half_plane, BarnesOrder, ComplexValue, ValueWithError,
};

pub use multisum::direct_multisum;
use quadrature::{gauss_kronrod, tanh_sinh, QuadResult};

/// Quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadParams {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub split_point: f64,
}

impl Default for QuadParams {
    fn default() -> Self {
        Self {
            abs_tol: 1e-15,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            split_point: 1.0,
        }
    }
}

impl QuadParams {
    pub fn validate(&self) -> Result<()> {
        let in_unit = |t: f64| t > 0.0 && t < 1.0;
        if !in_unit(self.abs_tol) || !in_unit(self.rel_tol) {
            return Err(Error::Validation(format!(
                "quadrature tolerances must lie in (0, 1): abs {}, rel {}",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_subdivisions == 0 || self.max_subdivisions > 100_000 {
            return Err(Error::Validation(format!(
                "max_subdivisions {} outside 1..=100000",
                self.max_subdivisions
            )));
        }
        if !(self.split_point > 0.0 && self.split_point.is_finite()) {
            return Err(Error::Validation(format!(
                "split point {} must be positive",
                self.split_point
            )));
        }
        Ok(())
    }
}

fn add(a: QuadResult, b: QuadResult) -> QuadResult {
    QuadResult {
        value: a.value + b.value,
        err: a.err + b.err,
    }
}

/// First `T >= start` (by doubling) at which `|f(T)|` drops below `floor`
/// and keeps falling.
fn truncation_point<F: Fn(f64) -> f64>(f: F, start: f64, floor: f64) -> f64 {
    let mut t = start.max(1.0);
    for _ in 0..60 {
        if f(t) < floor && f(2.0 * t) <= f(t) {
            return t;
        }
        t *= 2.0;
    }
    t
}

/// `∫_0^∞ t^{s-1} e^{-xt} K(t) dt` for a kernel given by its logarithm.
///
/// `(0, split]` uses tanh-sinh (power singularity at 0); `[split, T]` uses
/// adaptive Gauss–Kronrod with `T` chosen where the integrand has decayed
/// below `abs_tol`.
fn mellin_integral<K>(
    s: Complex64,
    x: Complex64,
    log_kernel: K,
    q: &QuadParams,
) -> Result<QuadResult>
where
    K: Fn(f64) -> f64,
{
    let integrand = |t: f64| -> Complex64 { ((s - 1.0) * t.ln() - x * t + log_kernel(t)).exp() };
    let head = tanh_sinh(
        |_, dl, _| integrand(dl),
        0.0,
        q.split_point,
        q.abs_tol,
        q.rel_tol,
    )?;
    let floor = q.abs_tol * 1e-3;
    let end = truncation_point(|t| integrand(t).norm(), q.split_point * 2.0, floor);
    let body = gauss_kronrod(
        integrand,
        q.split_point,
        end,
        q.abs_tol,
        q.rel_tol,
        q.max_subdivisions,
    )?;
    // remaining tail, bounded by the decay rate Re(x) - (Re(s) - 1)/T
    let rate = (x.re - (s.re - 1.0).max(0.0) / end).max(0.5 * x.re);
    let tail = integrand(end).norm() / rate;
    let mut r = add(head, body);
    r.err += tail;
    Ok(r)
}

fn divide_by_gamma(r: QuadResult, s: Complex64) -> Result<ValueWithError> {
    let g = euler_gamma(s)?;
    let value = r.value / g.value;
    let err = r.err / g.value.norm() + value.norm() * g.err_estimate / g.value.norm();
    Ok(ValueWithError::new(value, err))
}

/// `ζ_N(s, x)` from its Mellin transform
/// `Γ(s)^{-1} ∫_0^∞ t^{s-1} e^{-xt} (1 - e^{-t})^{-N} dt`, valid for `Re(s) > N`.
pub fn mellin_barnes(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    q: &QuadParams,
) -> Result<ValueWithError> {
    q.validate()?;
    check_finite(s, "s")?;
    check_right_half_plane(x)?;
    let n = order.get() as f64;
    if s.re <= n {
        return Err(Error::Domain(format!(
            "Mellin representation of order {order} needs Re(s) > {order}, got s = {s}"
        )));
    }
    let r = mellin_integral(s, x, |t| -n * (-(-t).exp_m1()).ln(), q)?;
    divide_by_gamma(r, s)
}

/// `ζ_{E,N}(s, x)` from `Γ(s)^{-1} ∫_0^∞ t^{s-1} e^{-xt} (1 + e^{-t})^{-N} dt`,
/// valid for `Re(s) > 0`.
pub fn mellin_alt_barnes(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    q: &QuadParams,
) -> Result<ValueWithError> {
    q.validate()?;
    check_finite(s, "s")?;
    check_right_half_plane(x)?;
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "alternating Mellin representation needs Re(s) > 0, got s = {s}"
        )));
    }
    let n = order.get() as f64;
    let r = mellin_integral(s, x, |t| -n * (-t).exp().ln_1p(), q)?;
    divide_by_gamma(r, s)
}

/// Euler's integral `∫_0^∞ e^{-t} t^{s-1} dt` for `Re(s) > 0`.
pub fn euler_gamma_integral(s: ComplexValue, q: &QuadParams) -> Result<ValueWithError> {
    q.validate()?;
    check_finite(s, "s")?;
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "Euler's integral needs Re(s) > 0, got s = {s}"
        )));
    }
    let r = mellin_integral(s, Complex64::new(1.0, 0.0), |_| 0.0, q)?;
    Ok(ValueWithError::new(r.value, r.err))
}

/// `Γ*_1(x)` through the Student-t normalising integral
/// `(2πx)^{-1/2} ∫_{-∞}^{∞} (1 + t²/x)^{-(x+1)/2} dt`.
pub fn miller_integral(x: f64, q: &QuadParams) -> Result<ValueWithError> {
    q.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!(
            "Miller integral needs real x > 0, got {x}"
        )));
    }
    let expo = -0.5 * (x + 1.0);
    // log of (1 + t²/x), safe for very large t
    let log_base = |t: f64| -> f64 {
        if t > 1e100 {
            2.0 * t.ln() - x.ln() + (x / (t * t)).ln_1p()
        } else {
            (t * t / x).ln_1p()
        }
    };
    let half = if x <= 2.0 {
        // t = x u / (1 - u) maps [0, ∞) onto [0, 1); dt = x / (1-u)² du
        tanh_sinh(
            |u, _, one_minus_u| {
                let t = x * u / one_minus_u;
                let log = expo * log_base(t) + x.ln() - 2.0 * one_minus_u.ln();
                Complex64::new(log.exp(), 0.0)
            },
            0.0,
            1.0,
            q.abs_tol,
            q.rel_tol,
        )?
    } else {
        // tail beyond T is below x^{(x+1)/2} T^{-x} / x
        let budget = q.abs_tol * 1e-2;
        let log_t = (0.5 * (x + 1.0) * x.ln() - x.ln() - budget.ln()) / x;
        let end = log_t.exp().max(10.0 * x.sqrt());
        let tail = (0.5 * (x + 1.0) * x.ln() - x * end.ln()).exp() / x;
        let mut r = gauss_kronrod(
            |t| Complex64::new((expo * log_base(t)).exp(), 0.0),
            0.0,
            end,
            q.abs_tol,
            q.rel_tol,
            q.max_subdivisions,
        )?;
        r.err += tail;
        r
    };
    let norm = 2.0 / (2.0 * PI * x).sqrt();
    Ok(ValueWithError::new(half.value * norm, half.err * norm))
}
