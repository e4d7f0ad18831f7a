use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Complex argument or function value in double precision.
pub type ComplexValue = Complex64;

/// Builds a complex number from its real part.
#[inline]
pub fn real(re: f64) -> ComplexValue {
    Complex64::new(re, 0.0)
}

/// A computed value together with a heuristic bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValueWithError {
    #[serde(serialize_with = "serialize_complex")]
    pub value: ComplexValue,
    pub err_estimate: f64,
}

impl ValueWithError {
    pub fn new(value: ComplexValue, err_estimate: f64) -> Self {
        Self {
            value,
            err_estimate,
        }
    }

    /// Relative error estimate, `err / |value|` (infinite when the value is zero
    /// and the estimate is not).
    pub fn relative_error(&self) -> f64 {
        let mag = self.value.norm();
        if mag > 0.0 {
            self.err_estimate / mag
        } else if self.err_estimate == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

pub(crate) fn serialize_complex<S: serde::Serializer>(
    z: &ComplexValue,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = ser.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &z.re)?;
    st.serialize_field("im", &z.im)?;
    st.end()
}

pub(crate) fn serialize_opt_complex<S: serde::Serializer>(
    z: &Option<ComplexValue>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match z {
        Some(z) => serialize_complex(z, ser),
        None => ser.serialize_none(),
    }
}

/// Largest Bernoulli order accepted by [`EmParams`].
pub const MAX_BERNOULLI_ORDER: u32 = 60;

/// Default relative tolerance for Euler–Maclaurin evaluations.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Default number of Bernoulli correction terms.
pub const DEFAULT_BERNOULLI_ORDER: u32 = 15;

/// Euler–Maclaurin controls.
///
/// `shift_cutoff` is the number of terms summed directly before the
/// asymptotic tail takes over; `None` lets the evaluator pick it per call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmParams {
    shift_cutoff: Option<u32>,
    bernoulli_order: u32,
    tol: f64,
}

impl Default for EmParams {
    fn default() -> Self {
        Self {
            shift_cutoff: None,
            bernoulli_order: DEFAULT_BERNOULLI_ORDER,
            tol: DEFAULT_TOL,
        }
    }
}

impl EmParams {
    pub fn new(shift_cutoff: Option<u32>, bernoulli_order: u32, tol: f64) -> Result<Self> {
        Self::default()
            .with_bernoulli_order(bernoulli_order)?
            .with_tol(tol)?
            .with_shift_cutoff(shift_cutoff)
    }

    pub fn with_shift_cutoff(mut self, m: Option<u32>) -> Result<Self> {
        if m == Some(0) {
            return Err(Error::Validation(
                "shift cutoff M must be at least 1".into(),
            ));
        }
        self.shift_cutoff = m;
        Ok(self)
    }

    pub fn with_bernoulli_order(mut self, k: u32) -> Result<Self> {
        if !(1..=MAX_BERNOULLI_ORDER).contains(&k) {
            return Err(Error::Validation(format!(
                "Bernoulli order K = {k} outside 1..={MAX_BERNOULLI_ORDER}"
            )));
        }
        self.bernoulli_order = k;
        Ok(self)
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Validation(format!("tolerance {tol} outside (0, 1)")));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn shift_cutoff(&self) -> Option<u32> {
        self.shift_cutoff
    }

    pub fn bernoulli_order(&self) -> u32 {
        self.bernoulli_order
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// Largest supported order of the multiple zeta and gamma functions.
pub const MAX_BARNES_ORDER: u32 = 12;

/// Order `N` of a Barnes multiple zeta function, `1 <= N <= 12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarnesOrder(u32);

impl BarnesOrder {
    pub fn new(n: u32) -> Result<Self> {
        if (1..=MAX_BARNES_ORDER).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::Validation(format!(
                "order N = {n} outside 1..={MAX_BARNES_ORDER}"
            )))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for BarnesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for BarnesOrder {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

pub(crate) fn check_finite(z: ComplexValue, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Validation(format!("{what} = {z} is not finite")))
    }
}

pub(crate) fn check_right_half_plane(x: ComplexValue) -> Result<()> {
    check_finite(x, "x")?;
    if x.re > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Re(x) must be positive, got x = {x}"
        )))
    }
}
