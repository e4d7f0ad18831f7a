//! Euler's gamma function and the multiple gamma functions
//! `Γ_N(x) = exp(∂_s ζ_N(s,x)|_{s=0})` and `Γ*_N(x) = exp(∂_s ζ_{E,N}(s,x)|_{s=0})`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::barnes::{alt_barnes_zeta_ds0, barnes_zeta_ds0};
use crate::error::{Error, Result};
use crate::types::{
    check_finite, check_right_half_plane, BarnesOrder, ComplexValue, EmParams, ValueWithError,
};

/// Gamma-type function value with its error estimate.
pub type GammaValue = ValueWithError;

// Lanczos approximation, g = 671/128 with 14 terms; relative error below
// 1e-15 on the right half-plane.
const LANCZOS_G: f64 = 5.242_187_5;
#[allow(clippy::excessive_precision)]
const LANCZOS_C0: f64 = 0.999_999_999_999_997_092;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// `(log Γ(z), Γ(z))` for `Re(z) >= 1/2`.
fn lanczos(z: Complex64) -> (Complex64, Complex64) {
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    let mut y = z;
    for &c in &LANCZOS_COEFFS {
        y += 1.0;
        ser += c / y;
    }
    let t = z + LANCZOS_G;
    let log = (z + 0.5) * t.ln() - t + (SQRT_2PI * ser / z).ln();
    (log, log.exp())
}

fn nonpositive_integer(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0).then_some(z.re as i64)
}

/// Euler's gamma function, with reflection for `Re(z) < 1/2`.
pub fn euler_gamma(z: ComplexValue) -> Result<GammaValue> {
    check_finite(z, "z")?;
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::Pole {
            s: z,
            pole: k,
            radius: 0.0,
        });
    }
    let value = if z.re >= 0.5 {
        lanczos(z).1
    } else {
        let (_, g) = lanczos(1.0 - z);
        PI / ((PI * z).sin() * g)
    };
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow {
            log_value: if z.re >= 0.5 {
                lanczos(z).0
            } else {
                Complex64::new(f64::INFINITY, 0.0)
            },
        });
    }
    let log_size = value.norm().ln().abs() + 1.0;
    Ok(GammaValue::new(
        value,
        4.0 * f64::EPSILON * log_size * value.norm(),
    ))
}

/// Principal-branch `log Γ(z)` for `Re(z) >= 1/2` (no branch tracking).
pub fn ln_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_finite(z, "z")?;
    if z.re < 0.5 {
        return Err(Error::Domain(format!(
            "ln_gamma needs Re(z) >= 1/2, got {z}"
        )));
    }
    Ok(lanczos(z).0)
}

fn exp_checked(log: ValueWithError) -> Result<GammaValue> {
    if log.value.re > 700.0 {
        return Err(Error::Overflow {
            log_value: log.value,
        });
    }
    let value = log.value.exp();
    // d(e^L) = e^L dL
    Ok(GammaValue::new(
        value,
        value.norm() * (log.err_estimate + f64::EPSILON),
    ))
}

fn reciprocal(x: Complex64) -> GammaValue {
    let v = x.inv();
    GammaValue::new(v, f64::EPSILON * v.norm())
}

/// `Γ_N(x)`. Order `0` is the empty-sum convention `ζ_0(s,x) = x^{-s}`,
/// giving `Γ_0(x) = 1/x`.
pub fn gamma_multiple(order: u32, x: ComplexValue, params: &EmParams) -> Result<GammaValue> {
    check_right_half_plane(x)?;
    if order == 0 {
        return Ok(reciprocal(x));
    }
    let order = BarnesOrder::new(order)?;
    exp_checked(barnes_zeta_ds0(order, x, params)?)
}

/// `Γ*_N(x)`, with `Γ*_0(x) = 1/x`.
pub fn gamma_multiple_star(order: u32, x: ComplexValue, params: &EmParams) -> Result<GammaValue> {
    check_right_half_plane(x)?;
    if order == 0 {
        return Ok(reciprocal(x));
    }
    let order = BarnesOrder::new(order)?;
    exp_checked(alt_barnes_zeta_ds0(order, x, params)?)
}
