//! Barnes multiple zeta functions with unit weights, their alternating
//! counterparts, the multiple gamma functions they define, and the
//! zeta-regularized products that tie them to Lerch's formula and Wallis'
//! product.

pub mod barnes;
pub mod bernoulli;
pub mod error;
pub mod gamma;
pub mod hurwitz;
pub mod oracles;
pub mod regularization;
pub mod types;

pub use error::{Error, Result};
pub use gamma::{euler_gamma, gamma_multiple, gamma_multiple_star, GammaValue};
pub use regularization::{
    identity_report, reg_product, Identity, IdentityReport, ProductTrace, WeightSpec,
};
pub use types::{BarnesOrder, ComplexValue, EmParams, ValueWithError};
