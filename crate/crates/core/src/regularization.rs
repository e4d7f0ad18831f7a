//! Zeta-regularized products, partial products of the two convergent
//! products (the alternating Lerch product and Wallis' product), and
//! verifiers for the identities linking them to the gamma functions.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::barnes::{alt_barnes_zeta_ds0, barnes_zeta_ds0};
use crate::error::{Error, Result};
use crate::gamma::{euler_gamma, gamma_multiple, gamma_multiple_star, ln_gamma, GammaValue};
use crate::hurwitz::{alt_hurwitz_zeta_ds, hurwitz_zeta_ds};
use crate::types::{
    check_right_half_plane, real, serialize_complex, serialize_opt_complex, BarnesOrder,
    ComplexValue, EmParams,
};

/// Weight family `w_n = (±1)^n C(n+N-1, N-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightSpec {
    pub order: BarnesOrder,
    pub alternating: bool,
}

impl WeightSpec {
    pub fn new(order: BarnesOrder, alternating: bool) -> Self {
        Self { order, alternating }
    }
}

/// Normalized product `Π (x+n)^{w_n} := exp(-ζ_w'(0))` with
/// `ζ_w(s) = Σ w_n (x+n)^{-s}`.
///
/// For the plain family this is `1/Γ_N(x)`, for the alternating one `1/Γ*_N(x)`.
pub fn reg_product(w: WeightSpec, x: ComplexValue, p: &EmParams) -> Result<GammaValue> {
    check_right_half_plane(x)?;
    let d = if w.alternating {
        alt_barnes_zeta_ds0(w.order, x, p)?
    } else {
        barnes_zeta_ds0(w.order, x, p)?
    };
    let log = -d.value;
    if log.re > 700.0 {
        return Err(Error::Overflow { log_value: log });
    }
    let value = log.exp();
    Ok(GammaValue::new(
        value,
        value.norm() * (d.err_estimate + f64::EPSILON),
    ))
}

/// Largest `m` accepted by [`lerch_partials`].
pub const MAX_LERCH_TERMS: u64 = 10_000_000;
/// Largest `m` accepted by [`wallis_partials`].
pub const MAX_WALLIS_TERMS: u64 = 100_000_000;

/// One row of a partial-product sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductRow {
    pub index: u64,
    pub partial: f64,
    pub averaged: f64,
}

#[derive(Debug, Clone, Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

#[derive(Debug, Clone)]
enum RowState {
    // P_k = Π_{n<=k} (x+n)^{(-1)^{n+1}}, kept multiplicatively; the last
    // three logs feed the averaging
    Lerch {
        x: f64,
        partial: f64,
        logs: [f64; 3],
    },
    // W_k = exp(Σ log1p(1/(4j²-1)))
    Wallis {
        logs: Neumaier,
        prev: f64,
    },
}

/// Streaming partial products, so very long sequences need not be stored.
///
/// The `averaged` column accelerates convergence to `O(m^{-2})`. For the
/// Lerch product the even and odd partials drift apart (to `0` and `∞`), so
/// their plain mean is useless; instead the pairwise mean is taken twice in
/// the log domain, `exp((log P_{k-2} + 2 log P_{k-1} + log P_k) / 4)`. Wallis'
/// partials are monotone with error `~ c/m`, which first-order Richardson
/// extrapolation `W_m + (m-1)(W_m - W_{m-1})` removes.
#[derive(Debug, Clone)]
pub struct ProductRows {
    state: RowState,
    next: u64,
    last: u64,
}

impl ProductRows {
    /// Rows `0..=m` of the alternating Lerch product at `x`.
    pub fn lerch(x: f64, m: u64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!(
                "Lerch product needs real x > 0, got {x}"
            )));
        }
        if m == 0 || m > MAX_LERCH_TERMS {
            return Err(Error::Validation(format!(
                "Lerch product length m = {m} outside 1..={MAX_LERCH_TERMS}"
            )));
        }
        Ok(Self {
            state: RowState::Lerch {
                x,
                partial: 1.0,
                logs: [0.0; 3],
            },
            next: 0,
            last: m,
        })
    }

    /// Rows `1..=m` of Wallis' product.
    pub fn wallis(m: u64) -> Result<Self> {
        if m == 0 || m > MAX_WALLIS_TERMS {
            return Err(Error::Validation(format!(
                "Wallis product length m = {m} outside 1..={MAX_WALLIS_TERMS}"
            )));
        }
        Ok(Self {
            state: RowState::Wallis {
                logs: Neumaier::default(),
                prev: 1.0,
            },
            next: 1,
            last: m,
        })
    }

    /// The exact limit of the product.
    pub fn reference(&self) -> Result<f64> {
        match self.state {
            RowState::Lerch { x, .. } => lerch_limit(x),
            RowState::Wallis { .. } => Ok(FRAC_PI_2),
        }
    }
}

impl Iterator for ProductRows {
    type Item = ProductRow;

    fn next(&mut self) -> Option<ProductRow> {
        if self.next > self.last {
            return None;
        }
        let k = self.next;
        self.next += 1;
        let row = match &mut self.state {
            RowState::Lerch { x, partial, logs } => {
                let factor = *x + k as f64;
                if k.is_multiple_of(2) {
                    *partial /= factor;
                } else {
                    *partial *= factor;
                }
                logs.rotate_left(1);
                logs[2] = partial.ln();
                let mean = match k {
                    0 => logs[2],
                    1 => 0.5 * (logs[1] + logs[2]),
                    _ => 0.25 * (logs[0] + 2.0 * logs[1] + logs[2]),
                };
                ProductRow {
                    index: k,
                    partial: *partial,
                    averaged: mean.exp(),
                }
            }
            RowState::Wallis { logs, prev } => {
                let j = k as f64;
                logs.add((1.0 / ((2.0 * j - 1.0) * (2.0 * j + 1.0))).ln_1p());
                let w = logs.total().exp();
                let averaged = w + (j - 1.0) * (w - *prev);
                *prev = w;
                ProductRow {
                    index: k,
                    partial: w,
                    averaged,
                }
            }
        };
        Some(row)
    }
}

/// `Γ*_1(x) = Γ(x/2) / (√2 Γ((x+1)/2))` through Euler's gamma function.
fn lerch_limit(x: f64) -> Result<f64> {
    let ratio = if x < 100.0 {
        euler_gamma(real(0.5 * x))?.value.re / euler_gamma(real(0.5 * (x + 1.0)))?.value.re
    } else {
        (ln_gamma(real(0.5 * x))? - ln_gamma(real(0.5 * (x + 1.0)))?)
            .re
            .exp()
    };
    Ok(ratio / std::f64::consts::SQRT_2)
}

/// A stored partial-product sequence with its limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductTrace {
    /// Index of `partials[0]`: 0 for the Lerch product, 1 for Wallis'.
    pub first_index: u64,
    pub partials: Vec<f64>,
    pub averaged: Vec<f64>,
    #[serde(serialize_with = "serialize_complex")]
    pub limit_estimate: ComplexValue,
    #[serde(serialize_with = "serialize_complex")]
    pub limit_reference: ComplexValue,
}

impl ProductTrace {
    fn collect(rows: ProductRows) -> Result<Self> {
        let reference = rows.reference()?;
        let first_index = rows.next;
        let (partials, averaged): (Vec<f64>, Vec<f64>) =
            rows.map(|r| (r.partial, r.averaged)).unzip();
        let last = *averaged.last().expect("at least one row");
        Ok(Self {
            first_index,
            partials,
            averaged,
            limit_estimate: real(last),
            limit_reference: real(reference),
        })
    }

    /// Partial product with the given index.
    pub fn partial(&self, index: u64) -> Option<f64> {
        let i = index.checked_sub(self.first_index)?;
        self.partials.get(usize::try_from(i).ok()?).copied()
    }
}

/// Partial products `P_0..P_m` of `Π_{n>=0} (x+n)^{(-1)^{n+1}} = Γ*_1(x)`.
pub fn lerch_partials(x: f64, m: u64) -> Result<ProductTrace> {
    ProductTrace::collect(ProductRows::lerch(x, m)?)
}

/// Wallis partial products `W_1..W_m`, `W_m = Π_{k<=m} (2k)²/((2k-1)(2k+1))`.
pub fn wallis_partials(m: u64) -> Result<ProductTrace> {
    ProductTrace::collect(ProductRows::wallis(m)?)
}

/// `W_m` alone, without storing the sequence.
pub fn wallis_value(m: u64) -> Result<f64> {
    let last = ProductRows::wallis(m)?.last().expect("m >= 1");
    Ok(last.partial)
}

/// Orders checked when an identity is not pinned to one order.
pub const DEFAULT_IDENTITY_ORDERS: u32 = 4;
/// Default Wallis product length for the `wallis` identity.
pub const DEFAULT_WALLIS_TERMS: u64 = 100_000;

/// The identities [`identity_report`] can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `exp(-ζ'(0,x)) = √(2π)/Γ(x)`.
    Lerch,
    /// Regularized product times `Γ_N(x)` equals one.
    LerchN(Option<BarnesOrder>),
    /// Alternating regularized product times `Γ*_N(x)` equals one.
    LerchAltN(Option<BarnesOrder>),
    /// `Γ_1(x) = Γ(x)/√(2π)`.
    Prop1,
    /// `Γ*_1(x) = Γ(x/2)/(√2 Γ((x+1)/2))`.
    Prop2,
    /// `Γ_N(x+1) Γ_{N-1}(x) = Γ_N(x)`.
    Recurrence(Option<BarnesOrder>),
    /// `Γ*_N(x+1) Γ*_N(x) = Γ*_{N-1}(x)`.
    RecurrenceAlt(Option<BarnesOrder>),
    /// `ζ_E'(0,x) = log(Γ(x/2)/Γ((x+1)/2)) - log(2)/2`.
    WilliamsZhang,
    /// `W_m` against `π/2`.
    Wallis { terms: u64 },
    /// `exp(-ζ'(0)) = √(2π)`.
    InftyFactorial,
}

impl Identity {
    pub fn name(&self) -> String {
        let pinned = |base: &str, o: &Option<BarnesOrder>| match o {
            Some(n) => format!("{base}-{n}"),
            None => format!("{base}-N"),
        };
        match self {
            Self::Lerch => "lerch".into(),
            Self::LerchN(o) => pinned("lerch", o),
            Self::LerchAltN(o) => pinned("lerch-alt", o),
            Self::Prop1 => "prop1".into(),
            Self::Prop2 => "prop2".into(),
            Self::Recurrence(_) => "recurrence".into(),
            Self::RecurrenceAlt(_) => "recurrence-alt".into(),
            Self::WilliamsZhang => "williams-zhang".into(),
            Self::Wallis { .. } => "wallis".into(),
            Self::InftyFactorial => "infty-factorial".into(),
        }
    }

    /// Pins the order of an order-dependent identity; a no-op otherwise.
    pub fn with_order(self, order: BarnesOrder) -> Self {
        match self {
            Self::LerchN(_) => Self::LerchN(Some(order)),
            Self::LerchAltN(_) => Self::LerchAltN(Some(order)),
            Self::Recurrence(_) => Self::Recurrence(Some(order)),
            Self::RecurrenceAlt(_) => Self::RecurrenceAlt(Some(order)),
            other => other,
        }
    }

    /// Sets the product length of `wallis`; a no-op otherwise.
    pub fn with_terms(self, terms: u64) -> Self {
        match self {
            Self::Wallis { .. } => Self::Wallis { terms },
            other => other,
        }
    }

    /// Identities that ignore the x grid.
    pub fn needs_grid(&self) -> bool {
        !matches!(self, Self::Wallis { .. } | Self::InftyFactorial)
    }

    fn orders(o: Option<BarnesOrder>) -> Vec<u32> {
        match o {
            Some(n) => vec![n.get()],
            None => (1..=DEFAULT_IDENTITY_ORDERS).collect(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let order_suffix = |rest: &str| -> Result<Option<BarnesOrder>> {
            if rest == "N" {
                Ok(None)
            } else {
                let n: u32 = rest
                    .parse()
                    .map_err(|_| Error::Validation(format!("unknown identity '{s}'")))?;
                BarnesOrder::new(n).map(Some)
            }
        };
        Ok(match s {
            "lerch" => Self::Lerch,
            "prop1" => Self::Prop1,
            "prop2" => Self::Prop2,
            "recurrence" => Self::Recurrence(None),
            "recurrence-alt" => Self::RecurrenceAlt(None),
            "williams-zhang" => Self::WilliamsZhang,
            "wallis" => Self::Wallis {
                terms: DEFAULT_WALLIS_TERMS,
            },
            "infty-factorial" => Self::InftyFactorial,
            _ => {
                if let Some(rest) = s.strip_prefix("lerch-alt-") {
                    Self::LerchAltN(order_suffix(rest)?)
                } else if let Some(rest) = s.strip_prefix("lerch-") {
                    Self::LerchN(order_suffix(rest)?)
                } else {
                    return Err(Error::Validation(format!("unknown identity '{s}'")));
                }
            }
        })
    }
}

/// One comparison inside an [`IdentityReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityPoint {
    /// Position in the input grid (or 0 for grid-free identities).
    pub index: usize,
    #[serde(serialize_with = "serialize_opt_complex")]
    pub x: Option<ComplexValue>,
    pub order: Option<u32>,
    pub terms: Option<u64>,
    #[serde(serialize_with = "serialize_complex")]
    pub left: ComplexValue,
    #[serde(serialize_with = "serialize_complex")]
    pub right: ComplexValue,
    pub rel_err: f64,
}

/// Outcome of checking one identity on a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub tolerance: f64,
    pub points: Vec<IdentityPoint>,
    pub max_error: f64,
    pub pass: bool,
}

/// `|L - R| / max(|L|, |R|, 1e-300)`.
pub fn relative_difference(left: ComplexValue, right: ComplexValue) -> f64 {
    (left - right).norm() / left.norm().max(right.norm()).max(1e-300)
}

struct Job {
    index: usize,
    x: Option<ComplexValue>,
    order: Option<u32>,
}

fn sqrt_2pi() -> Complex64 {
    real((2.0 * PI).sqrt())
}

fn evaluate(id: Identity, job: &Job, p: &EmParams) -> Result<(ComplexValue, ComplexValue)> {
    let x = job.x.unwrap_or(real(1.0));
    let order = || BarnesOrder::new(job.order.unwrap_or(1));
    Ok(match id {
        Identity::Lerch => {
            let left = (-hurwitz_zeta_ds(real(0.0), x, p)?.value).exp();
            (left, sqrt_2pi() / euler_gamma(x)?.value)
        }
        Identity::LerchN(_) => {
            let n = order()?;
            let reg = reg_product(WeightSpec::new(n, false), x, p)?.value;
            (reg * gamma_multiple(n.get(), x, p)?.value, real(1.0))
        }
        Identity::LerchAltN(_) => {
            let n = order()?;
            let reg = reg_product(WeightSpec::new(n, true), x, p)?.value;
            (reg * gamma_multiple_star(n.get(), x, p)?.value, real(1.0))
        }
        Identity::Prop1 => (
            gamma_multiple(1, x, p)?.value,
            euler_gamma(x)?.value / sqrt_2pi(),
        ),
        Identity::Prop2 => (
            gamma_multiple_star(1, x, p)?.value,
            euler_gamma(0.5 * x)?.value
                / (std::f64::consts::SQRT_2 * euler_gamma(0.5 * (x + 1.0))?.value),
        ),
        Identity::Recurrence(_) => {
            let n = order()?.get();
            (
                gamma_multiple(n, x + 1.0, p)?.value * gamma_multiple(n - 1, x, p)?.value,
                gamma_multiple(n, x, p)?.value,
            )
        }
        Identity::RecurrenceAlt(_) => {
            let n = order()?.get();
            (
                gamma_multiple_star(n, x + 1.0, p)?.value * gamma_multiple_star(n, x, p)?.value,
                gamma_multiple_star(n - 1, x, p)?.value,
            )
        }
        Identity::WilliamsZhang => {
            let left = alt_hurwitz_zeta_ds(real(0.0), x, p)?.value;
            let ratio = euler_gamma(0.5 * x)?.value / euler_gamma(0.5 * (x + 1.0))?.value;
            (left, ratio.ln() - 0.5 * std::f64::consts::LN_2)
        }
        Identity::Wallis { terms } => (real(wallis_value(terms)?), real(FRAC_PI_2)),
        Identity::InftyFactorial => {
            let left = (-hurwitz_zeta_ds(real(0.0), real(1.0), p)?.value).exp();
            (left, sqrt_2pi())
        }
    })
}

/// Evaluates both sides of `id` at every grid point (and, for
/// order-dependent identities, every order) and compares them.
///
/// Points are evaluated in parallel; the report keeps grid order and the
/// first failing point in that order determines the returned error.
pub fn identity_report(
    id: Identity,
    grid: &[ComplexValue],
    tol: f64,
    p: &EmParams,
) -> Result<IdentityReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Validation(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut jobs = Vec::new();
    if id.needs_grid() {
        if grid.is_empty() {
            return Err(Error::Validation(format!(
                "identity '{id}' needs a non-empty x grid"
            )));
        }
        for &x in grid {
            check_right_half_plane(x)?;
        }
        let orders = match id {
            Identity::LerchN(o)
            | Identity::LerchAltN(o)
            | Identity::Recurrence(o)
            | Identity::RecurrenceAlt(o) => Some(Identity::orders(o)),
            _ => None,
        };
        for (index, &x) in grid.iter().enumerate() {
            match &orders {
                Some(list) => jobs.extend(list.iter().map(|&n| Job {
                    index,
                    x: Some(x),
                    order: Some(n),
                })),
                None => jobs.push(Job {
                    index,
                    x: Some(x),
                    order: None,
                }),
            }
        }
    } else {
        let x = match id {
            Identity::InftyFactorial => Some(real(1.0)),
            _ => None,
        };
        jobs.push(Job {
            index: 0,
            x,
            order: None,
        });
    }

    let terms = match id {
        Identity::Wallis { terms } => Some(terms),
        _ => None,
    };
    let results: Vec<Result<(ComplexValue, ComplexValue)>> =
        jobs.par_iter().map(|job| evaluate(id, job, p)).collect();
    let mut points = Vec::with_capacity(jobs.len());
    for (job, r) in jobs.iter().zip(results) {
        let (left, right) = r?;
        points.push(IdentityPoint {
            index: job.index,
            x: job.x,
            order: job.order,
            terms,
            left,
            right,
            rel_err: relative_difference(left, right),
        });
    }
    let max_error = points.iter().map(|pt| pt.rel_err).fold(0.0, f64::max);
    Ok(IdentityReport {
        identity: id.name(),
        tolerance: tol,
        points,
        max_error,
        pass: max_error <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(n: u32) -> BarnesOrder {
        BarnesOrder::new(n).unwrap()
    }

    #[test]
    fn reg_product_examples() {
        let p = EmParams::default();
        let v = reg_product(WeightSpec::new(order(1), false), real(1.0), &p).unwrap();
        assert!((v.value.re - 2.5066282746310002).abs() < 1e-14);
        let v = reg_product(WeightSpec::new(order(1), false), real(0.5), &p).unwrap();
        assert!((v.value.re - std::f64::consts::SQRT_2).abs() < 1e-14);
        let v = reg_product(WeightSpec::new(order(1), true), real(1.0), &p).unwrap();
        assert!((v.value.re - 0.7978845608028654).abs() < 1e-14);
        assert!(matches!(
            reg_product(WeightSpec::new(order(1), true), real(0.0), &p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lerch_small_partials() {
        let t = lerch_partials(1.0, 3).unwrap();
        assert_eq!(t.partials, vec![1.0, 2.0, 2.0 / 3.0, 8.0 / 3.0]);
        assert_eq!(t.partial(2), Some(2.0 / 3.0));
        assert!(matches!(lerch_partials(1.0, 0), Err(Error::Validation(_))));
        assert!(matches!(lerch_partials(-1.0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn lerch_averaged_converges() {
        for (x, limit) in [(1.0, (PI / 2.0).sqrt()), (2.0, (2.0 / PI).sqrt())] {
            let t = lerch_partials(x, 10_000).unwrap();
            assert!((t.limit_reference.re - limit).abs() < 1e-14);
            let err = (t.limit_estimate.re - limit).abs();
            assert!(err < 1e-8, "x = {x}: {err:e}");
        }
    }

    #[test]
    fn lerch_brackets_limit() {
        for x in [0.5, 1.0, 2.0, 3.7] {
            let t = lerch_partials(x, 2000).unwrap();
            let l = t.limit_reference.re;
            for (k, &pk) in t.partials.iter().enumerate() {
                if k % 2 == 0 {
                    assert!(pk <= l, "x={x} k={k}");
                } else {
                    assert!(pk >= l, "x={x} k={k}");
                }
            }
        }
    }

    #[test]
    fn wallis_small_and_large() {
        let t = wallis_partials(2).unwrap();
        assert_eq!(t.first_index, 1);
        assert_eq!(t.partials, vec![4.0 / 3.0, 1.4222222222222223]);
        let w = wallis_value(100_000).unwrap();
        assert!((w - FRAC_PI_2).abs() < 4e-6);
        assert!((FRAC_PI_2 - w - PI / 800_000.0).abs() < 1e-9);
        assert!(matches!(wallis_partials(0), Err(Error::Validation(_))));
    }

    #[test]
    fn wallis_increasing_and_accelerated() {
        let t = wallis_partials(10_000).unwrap();
        assert!(t.partials.windows(2).all(|w| w[1] > w[0]));
        assert!((t.limit_estimate.re - FRAC_PI_2).abs() < 1e-8);
    }

    #[test]
    fn identity_names_round_trip() {
        for name in [
            "lerch",
            "lerch-N",
            "lerch-3",
            "lerch-alt-N",
            "lerch-alt-2",
            "prop1",
            "prop2",
            "recurrence",
            "recurrence-alt",
            "williams-zhang",
            "wallis",
            "infty-factorial",
        ] {
            let id: Identity = name.parse().unwrap();
            assert_eq!(id.name(), name);
        }
        assert!(matches!(
            "lerch-13".parse::<Identity>(),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            "nope".parse::<Identity>(),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn reports_pass() {
        let p = EmParams::default();
        let grid: Vec<_> = [0.5, 1.0, 2.0, 3.7].iter().map(|&x| real(x)).collect();
        let r = identity_report(Identity::Lerch, &grid, 1e-9, &p).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.points.len(), 4);
        let r = identity_report(Identity::InftyFactorial, &[], 1e-10, &p).unwrap();
        assert!(r.pass && r.points.len() == 1);
        let r = identity_report(Identity::Recurrence(None), &grid, 1e-9, &p).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.points.len(), 16);
        assert_eq!(r.points[5].index, 1);
        assert_eq!(r.points[5].order, Some(2));
    }

    #[test]
    fn report_preconditions() {
        let p = EmParams::default();
        assert!(matches!(
            identity_report(Identity::Prop1, &[], 1e-9, &p),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            identity_report(Identity::Prop1, &[real(-1.0)], 1e-9, &p),
            Err(Error::Domain(_))
        ));
        let r = identity_report(Identity::Prop1, &[real(1.0)], 1e-30, &p).unwrap();
        assert!(!r.pass);
    }
}
