use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lerch_core::types::{DEFAULT_BERNOULLI_ORDER, DEFAULT_TOL};
use lerch_core::ComplexValue;

use crate::input::{parse_complex, parse_grid, Grid};

#[derive(Debug, Parser)]
#[command(
    name = "lerch-forge",
    version,
    about = "Barnes multiple zeta and gamma functions, regularized products and their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Check an identity on a grid of x values.
    Verify(VerifyArgs),
    /// Tabulate a function over a grid of x values.
    Table(TableArgs),
    /// Print partial products of the alternating Lerch product or Wallis' product.
    Product(ProductArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    #[value(name = "hurwitz")]
    Hurwitz,
    #[value(name = "hurwitz-ds")]
    HurwitzDs,
    #[value(name = "alt-hurwitz")]
    AltHurwitz,
    #[value(name = "alt-hurwitz-ds")]
    AltHurwitzDs,
    #[value(name = "barnes")]
    Barnes,
    #[value(name = "barnes-alt")]
    BarnesAlt,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "gammaN")]
    GammaN,
    #[value(name = "gammaN-star")]
    GammaNStar,
    #[value(name = "mellin")]
    Mellin,
    #[value(name = "mellin-alt")]
    MellinAlt,
    #[value(name = "miller")]
    Miller,
}

impl Function {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[value(name = "lerch-alt")]
    LerchAlt,
    #[value(name = "wallis")]
    Wallis,
}

#[derive(Debug, Args)]
pub struct EmArgs {
    /// Relative tolerance of the Euler-Maclaurin evaluations.
    #[arg(long = "em-tol", env = "LERCH_FORGE_TOL", default_value_t = DEFAULT_TOL)]
    pub em_tol: f64,
    /// Number of Bernoulli correction terms.
    #[arg(long = "bernoulli-order", default_value_t = DEFAULT_BERNOULLI_ORDER)]
    pub bernoulli_order: u32,
    /// Fixed number of directly summed terms (chosen automatically if absent).
    #[arg(long = "shift-cutoff")]
    pub shift_cutoff: Option<u32>,
    /// Relative tolerance of the quadrature oracles.
    #[arg(long = "quad-tol", default_value_t = 1e-12)]
    pub quad_tol: f64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    /// Complex argument s as "re[,im]".
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub s: Option<ComplexValue>,
    /// Complex argument x as "re[,im]".
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: Option<ComplexValue>,
    /// Order N of the multiple functions.
    #[arg(long = "N")]
    pub order: Option<u32>,
    #[command(flatten)]
    pub em: EmArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    /// Grid of x values: "a:b:step" or a ';'-separated list of "re[,im]".
    #[arg(long = "x-grid", value_parser = parse_grid, allow_hyphen_values = true)]
    pub x_grid: Grid,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub s: Option<ComplexValue>,
    #[arg(long = "N")]
    pub order: Option<u32>,
    #[command(flatten)]
    pub em: EmArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name, e.g. lerch, lerch-N, lerch-alt-2, prop1, wallis.
    #[arg(long)]
    pub identity: String,
    #[arg(long = "x-grid", value_parser = parse_grid, allow_hyphen_values = true)]
    pub x_grid: Option<Grid>,
    /// Pin order-dependent identities to one order.
    #[arg(long = "N")]
    pub order: Option<u32>,
    /// Product length for wallis.
    #[arg(long)]
    pub terms: Option<u64>,
    /// Pass threshold on the relative error.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub em: EmArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Base point of the lerch-alt product (real, positive).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: Option<ComplexValue>,
    /// Last index m.
    #[arg(long)]
    pub terms: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}
