//! Hurwitz zeta `ζ(s, x) = Σ_{n≥0} (n + x)^{-s}` and the alternating
//! `ζ_E(s, x) = Σ_{n≥0} (-1)^n (n + x)^{-s}`, with their s-derivatives.
//!
//! Evaluation uses Euler–Maclaurin summation
//!
//! ```text
//! ζ(s,x) = Σ_{n<M} (x+n)^{-s} + a^{1-s}/(s-1) + a^{-s}/2
//!        + Σ_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} a^{-s-2k+1},      a = x + M
//! ```
//!
//! where `(s)_j` is the rising factorial. Every term has a closed-form
//! s-derivative, so `ζ'` is obtained term by term. The alternating function
//! goes through `ζ_E(s,x) = 2^{-s} (ζ(s,x/2) - ζ(s,(x+1)/2))` with the two
//! pole terms merged analytically, which keeps it finite at `s = 1`.

use num_complex::Complex64;

use crate::bernoulli::em_coefficient;
use crate::error::{Error, Result};
use crate::types::{check_finite, check_right_half_plane, ComplexValue, EmParams, ValueWithError};

/// Radius of the excluded disc around the pole of `ζ(s, x)` at `s = 1`.
pub const POLE_GUARD: f64 = 1e-8;

const MAX_SHIFT: u32 = 1 << 20;

// Multiplier on machine epsilon for the rounding component of the error
// estimate; the sum of term magnitudes sets the scale.
const ROUNDING_FACTOR: f64 = 8.0;

/// Regular part of the Euler–Maclaurin formula (everything except the pole
/// term `a^{1-s}/(s-1)`) with its s-derivative.
#[derive(Debug, Clone, Copy)]
struct RegularParts {
    value: Complex64,
    deriv: Complex64,
    omitted_value: f64,
    omitted_deriv: f64,
    scale_value: f64,
    scale_deriv: f64,
}

/// `(s)_n` and its derivative with respect to `s`.
fn rising_factorial_with_deriv(s: Complex64, n: u32) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let f = s + i as f64;
        dp = dp * f + p;
        p *= f;
    }
    (p, dp)
}

fn em_regular(s: Complex64, x: Complex64, m: u32, k: u32) -> RegularParts {
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    let mut scale_value = 0.0;
    let mut scale_deriv = 0.0;

    for n in 0..m {
        let y = x + n as f64;
        let ly = y.ln();
        let t = (-s * ly).exp();
        let dt = -ly * t;
        value += t;
        deriv += dt;
        scale_value += t.norm();
        scale_deriv += dt.norm();
    }

    let a = x + m as f64;
    let la = a.ln();
    let a_pow = (-s * la).exp();
    let half = 0.5 * a_pow;
    value += half;
    deriv += -la * half;
    scale_value += half.norm();
    scale_deriv += (la * half).norm();

    // term k: c_k (s)_{2k-1} a^{-s-2k+1}
    let inv_a2 = (a * a).inv();
    let mut rf = s;
    let mut drf = Complex64::new(1.0, 0.0);
    let mut pw = a_pow / a;
    for j in 1..=k {
        let c = em_coefficient(j as usize);
        let t = c * rf * pw;
        let dt = c * pw * (drf - la * rf);
        value += t;
        deriv += dt;
        scale_value += t.norm();
        scale_deriv += dt.norm();
        // advance (s)_{2j-1} -> (s)_{2j+1}
        for off in [2 * j - 1, 2 * j] {
            let f = s + off as f64;
            drf = drf * f + rf;
            rf *= f;
        }
        pw *= inv_a2;
    }
    let c = em_coefficient(k as usize + 1);
    let omitted_value = (c * rf * pw).norm();
    let omitted_deriv = (c * pw * (drf - la * rf)).norm();

    RegularParts {
        value,
        deriv,
        omitted_value,
        omitted_deriv,
        scale_value,
        scale_deriv,
    }
}

/// Shift cutoff used by the evaluator for `ζ(s, x)` (or `∂_s ζ` when
/// `derivative`) under `params`.
///
/// With no explicit cutoff, the smallest `M` with `Re(x) + M >= 1` is chosen
/// such that the first omitted Bernoulli term falls below a tenth of the
/// rounding floor of the evaluated terms. Keeping `M` minimal matters for
/// `Re(s) < 0`, where the terms grow like `M^{1-Re(s)}` and cancel.
pub fn shift_cutoff(s: ComplexValue, x: ComplexValue, params: &EmParams, derivative: bool) -> u32 {
    if let Some(m) = params.shift_cutoff() {
        return m;
    }
    select_shift(s, x, params.bernoulli_order(), derivative, true)
}

fn select_shift(s: Complex64, x: Complex64, k: u32, derivative: bool, with_pole: bool) -> u32 {
    let mut m = (1.0 - x.re).ceil().max(1.0) as u32;
    let (rf, drf) = rising_factorial_with_deriv(s, 2 * k + 1);
    let c = em_coefficient(k as usize + 1).abs();
    let mut direct = 0.0;
    let mut summed_to = 0;
    loop {
        while summed_to < m {
            direct += (-s * (x + summed_to as f64).ln()).exp().norm();
            summed_to += 1;
        }
        let a = x + m as f64;
        let la = a.ln();
        let a_pow = (-s * la).exp();
        let mut scale = direct + a_pow.norm();
        if with_pole {
            scale += (a_pow * a / (s - 1.0)).norm();
        }
        let pw = a_pow.norm() / a.norm().powi(2 * k as i32 + 1);
        let omitted = if derivative {
            scale *= la.norm().max(1.0);
            c * pw * (drf - la * rf).norm()
        } else {
            c * pw * rf.norm()
        };
        if omitted <= 0.1 * f64::EPSILON * scale || m >= MAX_SHIFT {
            return m;
        }
        m += (m / 8).max(1);
    }
}

fn check_convergence(omitted: f64, value: Complex64, scale: f64, tol: f64) -> Result<()> {
    // a tail already below the rounding floor cannot be improved by a larger M
    if omitted <= (tol * value.norm()).max(f64::EPSILON * scale) {
        Ok(())
    } else {
        Err(Error::Convergence {
            achieved: omitted / value.norm().max(f64::MIN_POSITIVE),
            target: tol,
        })
    }
}

fn finish(value: Complex64, err: f64) -> Result<ValueWithError> {
    if value.re.is_finite() && value.im.is_finite() && err.is_finite() {
        Ok(ValueWithError::new(value, err))
    } else {
        Err(Error::Domain(format!(
            "result {value} is not representable in double precision"
        )))
    }
}

fn validate(s: Complex64, x: Complex64) -> Result<()> {
    check_finite(s, "s")?;
    check_right_half_plane(x)
}

fn pole_guard(s: Complex64) -> Result<()> {
    if (s - 1.0).norm() <= POLE_GUARD {
        Err(Error::Pole {
            s,
            pole: 1,
            radius: POLE_GUARD,
        })
    } else {
        Ok(())
    }
}

/// Hurwitz zeta function `ζ(s, x)` for `Re(x) > 0`, `|s - 1| > 1e-8`.
pub fn hurwitz_zeta(s: ComplexValue, x: ComplexValue, params: &EmParams) -> Result<ValueWithError> {
    validate(s, x)?;
    pole_guard(s)?;
    let m = shift_cutoff(s, x, params, false);
    let k = params.bernoulli_order();
    let parts = em_regular(s, x, m, k);
    let a = x + m as f64;
    let pole = (-s * a.ln()).exp() * a / (s - 1.0);
    let value = parts.value + pole;
    let scale = parts.scale_value + pole.norm();
    check_convergence(parts.omitted_value, value, scale, params.tol())?;
    finish(
        value,
        parts.omitted_value + ROUNDING_FACTOR * f64::EPSILON * scale,
    )
}

/// `∂ζ(s, x)/∂s`, differentiated analytically term by term.
pub fn hurwitz_zeta_ds(
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    validate(s, x)?;
    pole_guard(s)?;
    let m = shift_cutoff(s, x, params, true);
    let k = params.bernoulli_order();
    let parts = em_regular(s, x, m, k);
    let a = x + m as f64;
    let la = a.ln();
    let inv = (s - 1.0).inv();
    let pole_pow = (-s * la).exp() * a;
    let dpole = -pole_pow * inv * (la + inv);
    let value = parts.deriv + dpole;
    let scale = parts.scale_deriv + dpole.norm();
    check_convergence(parts.omitted_deriv, value, scale, params.tol())?;
    finish(
        value,
        parts.omitted_deriv + ROUNDING_FACTOR * f64::EPSILON * scale,
    )
}

/// `(e^{ud} - 1)/u` and its u-derivative, stable as `u d -> 0`.
fn expm1_quotient(u: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let w = u * d;
    if w.norm() < 0.5 {
        // φ = d Σ w^k/(k+1)!,  φ' = d² Σ (k+1) w^k/(k+2)!
        let mut phi = Complex64::new(0.0, 0.0);
        let mut dphi = Complex64::new(0.0, 0.0);
        let mut wk = Complex64::new(1.0, 0.0);
        let mut fact = 1.0; // (k+1)!
        for kk in 0..30 {
            let k1 = kk as f64 + 1.0;
            phi += wk / fact;
            dphi += wk * k1 / (fact * (k1 + 1.0));
            wk *= w;
            fact *= k1 + 1.0;
        }
        (d * phi, d * d * dphi)
    } else {
        let e = w.exp();
        let phi = (e - 1.0) / u;
        let dphi = (d * e * u - (e - 1.0)) / (u * u);
        (phi, dphi)
    }
}

struct AltParts {
    // G(s) = ζ(s,x/2) - ζ(s,(x+1)/2), with its derivative
    g: Complex64,
    dg: Complex64,
    omitted_g: f64,
    omitted_dg: f64,
    scale_g: f64,
    scale_dg: f64,
}

fn alt_parts(s: Complex64, x: Complex64, params: &EmParams, derivative: bool) -> AltParts {
    let k = params.bernoulli_order();
    let lo = x * 0.5;
    let hi = (x + 1.0) * 0.5;
    let m = params.shift_cutoff().unwrap_or_else(|| {
        select_shift(s, lo, k, derivative, false).max(select_shift(s, hi, k, derivative, false))
    });
    let p = em_regular(s, lo, m, k);
    let q = em_regular(s, hi, m, k);

    // merged pole terms: (A^u - B^u)/(s-1) = -B^u φ(u), u = 1 - s
    let big_a = lo + m as f64;
    let big_b = hi + m as f64;
    let lb = big_b.ln();
    let d = big_a.ln() - lb;
    let u = 1.0 - s;
    let bu = (u * lb).exp();
    let (phi, dphi) = expm1_quotient(u, d);
    let pole = -bu * phi;
    let dpole = bu * (lb * phi + dphi);

    AltParts {
        g: p.value - q.value + pole,
        dg: p.deriv - q.deriv + dpole,
        omitted_g: p.omitted_value + q.omitted_value,
        omitted_dg: p.omitted_deriv + q.omitted_deriv,
        scale_g: p.scale_value + q.scale_value + pole.norm(),
        scale_dg: p.scale_deriv + q.scale_deriv + dpole.norm(),
    }
}

/// Alternating Hurwitz zeta `ζ_E(s, x)`, entire in `s`, for `Re(x) > 0`.
pub fn alt_hurwitz_zeta(
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    validate(s, x)?;
    let parts = alt_parts(s, x, params, false);
    let two_pow = (-s * std::f64::consts::LN_2).exp();
    let value = two_pow * parts.g;
    let f = two_pow.norm();
    let scale = f * parts.scale_g;
    let omitted = f * parts.omitted_g;
    check_convergence(omitted, value, scale, params.tol())?;
    finish(value, omitted + ROUNDING_FACTOR * f64::EPSILON * scale)
}

/// `∂ζ_E(s, x)/∂s = 2^{-s} (G'(s) - log 2 · G(s))` with
/// `G(s) = ζ(s,x/2) - ζ(s,(x+1)/2)`.
pub fn alt_hurwitz_zeta_ds(
    s: ComplexValue,
    x: ComplexValue,
    params: &EmParams,
) -> Result<ValueWithError> {
    validate(s, x)?;
    let parts = alt_parts(s, x, params, true);
    let ln2 = std::f64::consts::LN_2;
    let two_pow = (-s * ln2).exp();
    let value = two_pow * (parts.dg - ln2 * parts.g);
    let f = two_pow.norm();
    let scale = f * (parts.scale_dg + ln2 * parts.scale_g);
    let omitted = f * (parts.omitted_dg + ln2 * parts.omitted_g);
    check_convergence(omitted, value, scale, params.tol())?;
    finish(value, omitted + ROUNDING_FACTOR * f64::EPSILON * scale)
}
