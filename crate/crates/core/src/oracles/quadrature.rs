//! Real-line quadrature for complex-valued integrands: tanh-sinh for
//! endpoint singularities and adaptive Gauss–Kronrod (7/15) for smooth panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quadrature estimate with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub err: f64,
}

const TANH_SINH_T_MAX: f64 = 4.5;
const TANH_SINH_MIN_LEVEL: u32 = 3;
const TANH_SINH_MAX_LEVEL: u32 = 12;

/// Tanh-sinh quadrature on `[a, b]`.
///
/// The integrand receives `(t, t - a, b - t)`; the two distances are exact
/// even when `t` rounds onto an endpoint, so singular factors such as
/// `(t - a)^{-0.5}` can be evaluated from them.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> Complex64,
{
    let width = b - a;
    let half = 0.5 * width;
    let node = |t: f64| -> Result<Complex64> {
        let u = FRAC_PI_2 * t.sinh();
        if u.abs() > 350.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let w = half * FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        if w < 1e-300 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let dl = width / (1.0 + (2.0 * u).exp());
        let dr = width / (1.0 + (-2.0 * u).exp());
        if dl <= 0.0 || dr <= 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let x = if t < 0.0 { a + dl } else { b - dr };
        let v = f(x, dl, dr);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v * w)
        } else {
            Err(Error::Domain(format!("integrand not finite at t = {x}")))
        }
    };

    let mut h = 1.0;
    let mut sum = node(0.0)?;
    let mut k = 1;
    while k as f64 * h <= TANH_SINH_T_MAX {
        let t = k as f64 * h;
        sum += node(t)? + node(-t)?;
        k += 1;
    }
    let mut estimate = sum * h;
    let mut last_err = f64::INFINITY;
    for level in 1..=TANH_SINH_MAX_LEVEL {
        h *= 0.5;
        // odd multiples of the new step
        let mut k = 1;
        while k as f64 * h <= TANH_SINH_T_MAX {
            let t = k as f64 * h;
            sum += node(t)? + node(-t)?;
            k += 2;
        }
        let next = sum * h;
        let err = (next - estimate).norm();
        estimate = next;
        last_err = err;
        if level >= TANH_SINH_MIN_LEVEL && err <= abs_tol.max(rel_tol * estimate.norm()) {
            return Ok(QuadResult {
                value: estimate,
                err: err.max(4.0 * f64::EPSILON * estimate.norm()),
            });
        }
    }
    Err(Error::Convergence {
        achieved: last_err / estimate.norm().max(f64::MIN_POSITIVE),
        target: rel_tol,
    })
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn kronrod15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        k += pair * WGK[j];
        if j % 2 == 1 {
            g += pair * WG[j / 2];
        }
    }
    let k = k * h;
    let g = g * h;
    (k, (k - g).norm())
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive Gauss–Kronrod on `[a, b]`, bisecting the panel with the largest
/// error until the total error meets `max(abs_tol, rel_tol |I|)`.
pub fn gauss_kronrod<F>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    let (value, err) = kronrod15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, err });
    let mut total = value;
    let mut total_err = err;
    loop {
        if !(total.re.is_finite() && total.im.is_finite()) {
            return Err(Error::Domain("integrand not finite".into()));
        }
        if total_err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(QuadResult {
                value: total,
                err: total_err.max(4.0 * f64::EPSILON * total.norm()),
            });
        }
        if heap.len() >= max_subdivisions {
            return Err(Error::Convergence {
                achieved: total_err / total.norm().max(f64::MIN_POSITIVE),
                target: rel_tol,
            });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = kronrod15(&f, worst.a, mid);
        let (rv, re) = kronrod15(&f, mid, worst.b);
        total += lv + rv - worst.value;
        total_err += le + re - worst.err;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: lv,
            err: le,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: rv,
            err: re,
        });
    }
}
