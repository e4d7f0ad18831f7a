use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::euler_gamma;
use crate::types::{
    check_finite, check_right_half_plane, BarnesOrder, ComplexValue, ValueWithError,
};

const MAX_ORDER: u32 = 3;
const MAX_TERMS: u32 = 2000;

/// Number of tuples `0 <= m_i <= t` (`n` coordinates) with each possible sum.
fn box_multiplicities(order: u32, t: u32) -> Vec<u64> {
    let mut counts = vec![1u64];
    for _ in 0..order {
        let len = counts.len() + t as usize;
        let mut prefix = vec![0u64; counts.len() + 1];
        for (i, &c) in counts.iter().enumerate() {
            prefix[i + 1] = prefix[i] + c;
        }
        // next[n] = Σ_{j=n-t}^{n} counts[j]
        let next = (0..len)
            .map(|n| {
                let hi = n.min(counts.len() - 1) + 1;
                let lo = n.saturating_sub(t as usize);
                if lo < hi {
                    prefix[hi] - prefix[lo]
                } else {
                    0
                }
            })
            .collect();
        counts = next;
    }
    counts
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// Literal N-fold sum over the box `0 <= m_i <= T`, collapsed to one sum over
/// `n = m_1 + … + m_N` with exact box multiplicities.
///
/// The error estimate is a rigorous bound on the omitted tuples plus a
/// rounding allowance. For the plain family every omitted tuple has
/// `n > T`, so the tail is at most `Σ_{n>T} C(n+N-1,N-1) |x+n|^{-Re s}`,
/// bounded by an integral. For the alternating family the Mellin kernel
/// gives the exact remainder `Σ_k ±C(N,k) ζ_{E,N}(s, x + k(T+1))`, and each
/// term is at most `Γ(Re s)/|Γ(s)| (Re x + k(T+1))^{-Re s}`.
pub fn direct_multisum(
    order: BarnesOrder,
    s: ComplexValue,
    x: ComplexValue,
    terms: u32,
    alternating: bool,
) -> Result<ValueWithError> {
    check_finite(s, "s")?;
    check_right_half_plane(x)?;
    let n = order.get();
    if n > MAX_ORDER {
        return Err(Error::Domain(format!(
            "direct multisum supports N <= {MAX_ORDER}, got {n}"
        )));
    }
    if !(1..=MAX_TERMS).contains(&terms) {
        return Err(Error::Validation(format!(
            "truncation T = {terms} outside 1..={MAX_TERMS}"
        )));
    }
    let sigma = s.re;
    let needed = if alternating { 1.0 } else { f64::from(n) };
    if sigma <= needed {
        return Err(Error::Domain(format!(
            "direct multisum needs Re(s) > {needed}, got s = {s}"
        )));
    }

    let counts = box_multiplicities(n, terms);
    let term = |k: usize| -> Complex64 { counts[k] as f64 * (-s * (x + k as f64).ln()).exp() };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    if alternating {
        // pairs (2j, 2j+1), smallest first
        let pairs = counts.len().div_ceil(2);
        for j in (0..pairs).rev() {
            let even = term(2 * j);
            let odd = if 2 * j + 1 < counts.len() {
                term(2 * j + 1)
            } else {
                Complex64::new(0.0, 0.0)
            };
            sum += even - odd;
            scale += even.norm() + odd.norm();
        }
    } else {
        for k in (0..counts.len()).rev() {
            let t = term(k);
            sum += t;
            scale += t.norm();
        }
    }

    let tail = if alternating {
        let ratio =
            euler_gamma(Complex64::new(sigma, 0.0))?.value.re / euler_gamma(s)?.value.norm();
        (1..=n)
            .map(|k| binomial(n, k) * (x.re + f64::from(k) * f64::from(terms + 1)).powf(-sigma))
            .sum::<f64>()
            * ratio
    } else {
        let nf = f64::from(n);
        let t = f64::from(terms);
        let shift = nf - 1.0 - x.re;
        let rho = if shift > 0.0 {
            1.0 + shift / (x.re + t + 1.0)
        } else {
            1.0
        };
        let factorial: f64 = (1..n).map(f64::from).product();
        let phase = (s.im * (x + t + 1.0).arg()).abs().exp();
        phase * rho.powf(nf - 1.0) * (x.re + t).powf(nf - sigma) / (factorial * (sigma - nf))
    };
    let rounding = 4.0 * f64::EPSILON * scale;
    Ok(ValueWithError::new(sum, tail + rounding))
}
