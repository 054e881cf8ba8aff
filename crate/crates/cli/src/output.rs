//! Output documents and plain/csv/json rendering helpers.
//!
//! Big integers always travel as decimal strings in JSON so documents parse
//! losslessly in any consumer.

use std::fmt::Display;
use std::io::{self, Write};

use genseq_core::{IdentityReport, Params, VerificationReport};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One evaluated term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRow {
    pub n: i64,
    pub value: String,
}

/// JSON document of `eval`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub params: Params,
    pub kind: String,
    pub backend: String,
    pub values: Vec<ValueRow>,
}

/// JSON document of `tilings`; `tilings` is absent for `--count-only`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingDoc {
    pub params: Params,
    pub n: i64,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tilings: Option<Vec<String>>,
    #[serde(default)]
    pub truncated: bool,
}

pub fn strings<T: Display>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn json_line<T: Serialize>(out: &mut dyn Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc).map_err(io::Error::other)?;
    writeln!(out)
}

/// `1 - x - x^2` style rendering of a dense coefficient list.
pub fn polynomial(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (power, c) in coeffs.iter().enumerate() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let negative = c.sign() == num_bigint::Sign::Minus;
        let magnitude = c.magnitude().to_string();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let monomial = match power {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{power}"),
        };
        if power == 0 || magnitude != "1" {
            out.push_str(&magnitude);
        }
        out.push_str(&monomial);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn plain_identity(out: &mut dyn Write, r: &IdentityReport) -> io::Result<()> {
    writeln!(out, "{:<28} checked {:>7}  passed {:>7}  failed {:>5}", r.identity, r.checked, r.passed, r.failed)?;
    for c in &r.counterexamples {
        let aux: Vec<String> = c.aux.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let aux = if aux.is_empty() { String::new() } else { format!(" {}", aux.join(" ")) };
        writeln!(out, "    counterexample {} n={}{aux}: lhs {} != rhs {}", c.params, c.n, c.lhs, c.rhs)?;
    }
    if r.failed > r.counterexamples.len() as u64 {
        writeln!(out, "    ... {} more failures not listed", r.failed - r.counterexamples.len() as u64)?;
    }
    Ok(())
}

/// Per-identity lines followed by a total line.
pub fn plain_report(out: &mut dyn Write, report: &VerificationReport) -> io::Result<()> {
    for r in &report.identities {
        plain_identity(out, r)?;
    }
    writeln!(out, "total: checked {}  passed {}  failed {}", report.checked, report.passed, report.failed)
}

pub const REPORT_CSV_HEADER: &str = "identity,checked,passed,failed";

pub fn csv_report_rows(out: &mut dyn Write, report: &VerificationReport) -> io::Result<()> {
    for r in &report.identities {
        writeln!(out, "{},{},{},{}", csv_field(&r.identity), r.checked, r.passed, r.failed)?;
    }
    Ok(())
}

/// Quotes a csv field when it contains a delimiter, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
