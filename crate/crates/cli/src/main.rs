mod args;
mod input;
mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use lerch_core::barnes::{alt_barnes_zeta, barnes_zeta};
use lerch_core::hurwitz::{alt_hurwitz_zeta, alt_hurwitz_zeta_ds, hurwitz_zeta, hurwitz_zeta_ds};
use lerch_core::oracles::{mellin_alt_barnes, mellin_barnes, miller_integral, QuadParams};
use lerch_core::regularization::{identity_report, Identity, ProductRows};
use lerch_core::{
    euler_gamma, gamma_multiple, gamma_multiple_star, BarnesOrder, ComplexValue, EmParams, Error,
    ValueWithError,
};
use rayon::prelude::*;
use serde_json::json;

use args::{Cli, Command, EmArgs, EvalArgs, Function, Mode, ProductArgs, TableArgs, VerifyArgs};
use render::{EvalRecord, ProductWriter};

const MAX_PRODUCT_TERMS: u64 = 10_000_000;

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
    IdentityFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Validation(_)) | Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Core(Error::Domain(_) | Error::Pole { .. } | Error::Overflow { .. }) => 2,
            Failure::Core(Error::Convergence { .. }) => 3,
            Failure::IdentityFailed(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Core(Error::Validation(_)) | Failure::Usage(_) => "validation",
            Failure::Core(Error::Domain(_)) => "domain",
            Failure::Core(Error::Pole { .. }) => "pole",
            Failure::Core(Error::Overflow { .. }) => "overflow",
            Failure::Core(Error::Convergence { .. }) => "convergence",
            Failure::Io(_) => "io",
            Failure::IdentityFailed(_) => "identity_failure",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(m) | Failure::Io(m) | Failure::IdentityFailed(m) => m.clone(),
        }
    }

    fn record(&self) -> String {
        json!({
            "error": {
                "kind": self.kind(),
                "message": self.message(),
                "exit_code": self.exit_code(),
            }
        })
        .to_string()
    }
}

fn em_params(a: &EmArgs) -> Result<EmParams, Failure> {
    Ok(EmParams::new(a.shift_cutoff, a.bernoulli_order, a.em_tol)?)
}

fn quad_params(a: &EmArgs) -> Result<QuadParams, Failure> {
    let q = QuadParams {
        rel_tol: a.quad_tol,
        ..QuadParams::default()
    };
    q.validate()?;
    Ok(q)
}

fn need(v: Option<ComplexValue>, flag: &str, f: Function) -> lerch_core::Result<ComplexValue> {
    v.ok_or_else(|| Error::Validation(format!("--{flag} is required for --fn {}", f.name())))
}

fn evaluate(
    f: Function,
    s: Option<ComplexValue>,
    x: Option<ComplexValue>,
    order: Option<u32>,
    p: &EmParams,
    q: &QuadParams,
) -> lerch_core::Result<ValueWithError> {
    let n = order.unwrap_or(1);
    let barnes_order = || BarnesOrder::new(n);
    let s = || need(s, "s", f);
    let x = || need(x, "x", f);
    match f {
        Function::Hurwitz => hurwitz_zeta(s()?, x()?, p),
        Function::HurwitzDs => hurwitz_zeta_ds(s()?, x()?, p),
        Function::AltHurwitz => alt_hurwitz_zeta(s()?, x()?, p),
        Function::AltHurwitzDs => alt_hurwitz_zeta_ds(s()?, x()?, p),
        Function::Barnes => barnes_zeta(barnes_order()?, s()?, x()?, p),
        Function::BarnesAlt => alt_barnes_zeta(barnes_order()?, s()?, x()?, p),
        Function::Gamma => euler_gamma(x()?),
        Function::GammaN => gamma_multiple(n, x()?, p),
        Function::GammaNStar => gamma_multiple_star(n, x()?, p),
        Function::Mellin => mellin_barnes(barnes_order()?, s()?, x()?, q),
        Function::MellinAlt => mellin_alt_barnes(barnes_order()?, s()?, x()?, q),
        Function::Miller => {
            let x = x()?;
            if x.im != 0.0 {
                return Err(Error::Domain(format!(
                    "Miller integral needs real x, got {x}"
                )));
            }
            miller_integral(x.re, q)
        }
    }
}

fn uses_s(f: Function) -> bool {
    !matches!(
        f,
        Function::Gamma | Function::GammaN | Function::GammaNStar | Function::Miller
    )
}

fn uses_order(f: Function) -> bool {
    matches!(
        f,
        Function::Barnes
            | Function::BarnesAlt
            | Function::GammaN
            | Function::GammaNStar
            | Function::Mellin
            | Function::MellinAlt
    )
}

fn record(
    f: Function,
    s: Option<ComplexValue>,
    x: ComplexValue,
    order: Option<u32>,
    result: ValueWithError,
) -> EvalRecord {
    EvalRecord {
        function: f.name(),
        s: if uses_s(f) { s } else { None },
        x: Some(x),
        order: if uses_order(f) {
            Some(order.unwrap_or(1))
        } else {
            None
        },
        result,
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let io_err = |e: io::Error| Failure::Io(format!("cannot write output: {e}"));
    match path {
        Some(p) => {
            let mut f = File::create(p)
                .map_err(|e| Failure::Io(format!("cannot open {}: {e}", p.display())))?;
            f.write_all(text.as_bytes()).map_err(io_err)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(io_err)
        }
    }
}

fn cmd_eval(a: EvalArgs) -> Result<(), Failure> {
    let p = em_params(&a.em)?;
    let q = quad_params(&a.em)?;
    let x = need(a.x, "x", a.function)?;
    let v = evaluate(a.function, a.s, Some(x), a.order, &p, &q)?;
    let rec = record(a.function, a.s, x, a.order, v);
    emit(
        a.out.output.as_deref(),
        &render::eval_records(&[rec], a.out.format),
    )
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let p = em_params(&a.em)?;
    let q = quad_params(&a.em)?;
    let grid = a.x_grid.0;
    if grid.is_empty() {
        return Err(Failure::Usage("--x-grid is empty".into()));
    }
    let results: Vec<_> = grid
        .par_iter()
        .map(|&x| evaluate(a.function, a.s, Some(x), a.order, &p, &q))
        .collect();
    let mut records = Vec::with_capacity(grid.len());
    for (&x, r) in grid.iter().zip(results) {
        records.push(record(a.function, a.s, x, a.order, r?));
    }
    emit(
        a.out.output.as_deref(),
        &render::eval_records(&records, a.out.format),
    )
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let p = em_params(&a.em)?;
    let mut id: Identity = a.identity.parse()?;
    if let Some(n) = a.order {
        id = id.with_order(BarnesOrder::new(n)?);
    }
    if let Some(m) = a.terms {
        id = id.with_terms(m);
    }
    let grid = a.x_grid.map(|g| g.0).unwrap_or_default();
    let report = identity_report(id, &grid, a.tol, &p)?;
    emit(
        a.out.output.as_deref(),
        &render::report(&report, a.out.format),
    )?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::IdentityFailed(format!(
            "identity {} failed: max relative error {:e} exceeds {:e}",
            report.identity, report.max_error, report.tolerance
        )))
    }
}

fn cmd_product(a: ProductArgs) -> Result<(), Failure> {
    if a.terms == 0 || a.terms > MAX_PRODUCT_TERMS {
        return Err(Failure::Usage(format!(
            "--terms {} outside 1..={MAX_PRODUCT_TERMS}",
            a.terms
        )));
    }
    let rows = match a.mode {
        Mode::LerchAlt => {
            let x =
                a.x.ok_or_else(|| Failure::Usage("--x is required for --mode lerch-alt".into()))?;
            if x.im != 0.0 {
                return Err(
                    Error::Domain(format!("lerch-alt product needs real x, got {x}")).into(),
                );
            }
            ProductRows::lerch(x.re, a.terms)?
        }
        Mode::Wallis => ProductRows::wallis(a.terms)?,
    };
    let mut writer = ProductWriter::new(a.out.format, rows.reference()?);
    let sink: Box<dyn Write> = match a.out.output.as_deref() {
        Some(p) => Box::new(
            File::create(p)
                .map_err(|e| Failure::Io(format!("cannot open {}: {e}", p.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let io_err = |e: io::Error| Failure::Io(format!("cannot write output: {e}"));
    sink.write_all(writer.header().as_bytes()).map_err(io_err)?;
    for row in rows {
        sink.write_all(writer.row(&row).as_bytes())
            .map_err(io_err)?;
    }
    sink.write_all(writer.footer().as_bytes()).map_err(io_err)?;
    sink.flush().map_err(io_err)
}

fn run<I, T>(argv: I) -> Result<(), Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return Ok(());
        }
        Err(e) => {
            return Err(Failure::Usage(
                e.render().to_string().trim_end().to_string(),
            ))
        }
    };
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a),
        Command::Product(a) => cmd_product(a),
    }
}

fn main() -> ExitCode {
    match run(std::env::args_os()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.record());
            ExitCode::from(f.exit_code())
        }
    }
}
