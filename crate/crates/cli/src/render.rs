//! Text, CSV and JSON rendering. Floats are printed in their shortest
//! round-trip form so identical runs give byte-identical output.

use lerch_core::regularization::{IdentityReport, ProductRow};
use lerch_core::{ComplexValue, ValueWithError};
use serde::Serialize;
use serde_json::json;

use crate::args::Format;

pub fn num(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".into()
    } else if !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn complex(z: ComplexValue) -> String {
    if z.im == 0.0 {
        num(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", num(z.re), num(-z.im))
    } else {
        format!("{}+{}i", num(z.re), num(z.im))
    }
}

fn cjson(z: Option<ComplexValue>) -> serde_json::Value {
    match z {
        Some(z) => json!({ "re": z.re, "im": z.im }),
        None => serde_json::Value::Null,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// One evaluated point.
pub struct EvalRecord {
    pub function: String,
    pub s: Option<ComplexValue>,
    pub x: Option<ComplexValue>,
    pub order: Option<u32>,
    pub result: ValueWithError,
}

impl EvalRecord {
    fn to_json(&self) -> serde_json::Value {
        json!({
            "fn": self.function,
            "inputs": { "s": cjson(self.s), "x": cjson(self.x), "N": self.order },
            "value": { "re": self.result.value.re, "im": self.result.value.im },
            "err_estimate": self.result.err_estimate,
        })
    }

    fn csv_row(&self) -> Vec<String> {
        let part =
            |z: Option<ComplexValue>, im: bool| opt(z.map(|z| num(if im { z.im } else { z.re })));
        vec![
            self.function.clone(),
            part(self.s, false),
            part(self.s, true),
            part(self.x, false),
            part(self.x, true),
            opt(self.order),
            num(self.result.value.re),
            num(self.result.value.im),
            num(self.result.err_estimate),
        ]
    }
}

const EVAL_HEADER: [&str; 9] = [
    "fn",
    "s_re",
    "s_im",
    "x_re",
    "x_im",
    "N",
    "value_re",
    "value_im",
    "err_estimate",
];

pub fn eval_records(records: &[EvalRecord], format: Format) -> String {
    match format {
        Format::Json => records
            .iter()
            .map(|r| format!("{}\n", r.to_json()))
            .collect(),
        Format::Csv => csv_text(&EVAL_HEADER, records.iter().map(EvalRecord::csv_row)),
        Format::Text => {
            let mut out = String::new();
            for r in records {
                out.push_str(&format!("fn {}", r.function));
                if let Some(n) = r.order {
                    out.push_str(&format!("  N {n}"));
                }
                if let Some(s) = r.s {
                    out.push_str(&format!("  s {}", complex(s)));
                }
                if let Some(x) = r.x {
                    out.push_str(&format!("  x {}", complex(x)));
                }
                out.push_str(&format!(
                    "  value {}  err {}\n",
                    complex(r.result.value),
                    num(r.result.err_estimate)
                ));
            }
            out
        }
    }
}

pub fn report(r: &IdentityReport, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(r).expect("serializable report")
        ),
        Format::Csv => {
            let header = [
                "identity", "index", "x_re", "x_im", "N", "terms", "left_re", "left_im",
                "right_re", "right_im", "rel_err", "pass",
            ];
            let rows = r.points.iter().map(|p| {
                vec![
                    r.identity.clone(),
                    p.index.to_string(),
                    opt(p.x.map(|x| num(x.re))),
                    opt(p.x.map(|x| num(x.im))),
                    opt(p.order),
                    opt(p.terms),
                    num(p.left.re),
                    num(p.left.im),
                    num(p.right.re),
                    num(p.right.im),
                    num(p.rel_err),
                    (p.rel_err <= r.tolerance).to_string(),
                ]
            });
            csv_text(&header, rows)
        }
        Format::Text => {
            let mut out = format!("identity {}  tolerance {}\n", r.identity, num(r.tolerance));
            for p in &r.points {
                out.push_str(&format!("  [{}]", p.index));
                if let Some(x) = p.x {
                    out.push_str(&format!(" x {}", complex(x)));
                }
                if let Some(n) = p.order {
                    out.push_str(&format!(" N {n}"));
                }
                if let Some(m) = p.terms {
                    out.push_str(&format!(" m {m}"));
                }
                out.push_str(&format!(
                    "  left {}  right {}  rel_err {}\n",
                    complex(p.left),
                    complex(p.right),
                    num(p.rel_err)
                ));
            }
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("max_error {}  {verdict}\n", num(r.max_error)));
            out
        }
    }
}

#[derive(Serialize)]
struct ProductRecord {
    index: u64,
    partial: f64,
    averaged: f64,
    abs_error_vs_reference: f64,
}

/// Streams product rows into a writer, one line per row.
pub struct ProductWriter {
    format: Format,
    reference: f64,
    first: bool,
}

impl ProductWriter {
    pub fn new(format: Format, reference: f64) -> Self {
        Self {
            format,
            reference,
            first: true,
        }
    }

    pub fn header(&self) -> String {
        match self.format {
            Format::Json => "[\n".into(),
            Format::Csv => "index,partial,averaged,abs_error_vs_reference\n".into(),
            Format::Text => "index partial averaged abs_error_vs_reference\n".into(),
        }
    }

    pub fn row(&mut self, r: &ProductRow) -> String {
        let err = (r.averaged - self.reference).abs();
        let first = std::mem::replace(&mut self.first, false);
        match self.format {
            Format::Json => {
                let rec = ProductRecord {
                    index: r.index,
                    partial: r.partial,
                    averaged: r.averaged,
                    abs_error_vs_reference: err,
                };
                let sep = if first { "" } else { ",\n" };
                format!(
                    "{sep}{}",
                    serde_json::to_string(&rec).expect("plain record")
                )
            }
            Format::Csv => format!(
                "{},{},{},{}\n",
                r.index,
                num(r.partial),
                num(r.averaged),
                num(err)
            ),
            Format::Text => format!(
                "{} {} {} {}\n",
                r.index,
                num(r.partial),
                num(r.averaged),
                num(err)
            ),
        }
    }

    pub fn footer(&self) -> String {
        match self.format {
            Format::Json => "\n]\n".into(),
            _ => String::new(),
        }
    }
}
