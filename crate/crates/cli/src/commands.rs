//! Subcommand implementations. Each returns the process exit code; errors
//! map to exit code 2 in `main`.

use std::io::{self, Write};
use std::path::PathBuf;

use genseq_core::{
    build_a, build_q, cassini, check_corollaries, closed_f, compare_reference, count_f_tilings, count_l_tilings, det,
    det_a_formula, det_q_formula, enumerate_f_tilings, eval_f, eval_l, f_matrix, is_type_l, list_identities, mat_pow,
    named_sequence, parse_bfile, rational_genfun, render_tiling, series_coeffs, verify_all, verify_grid,
    verify_literal_readings, Error, IntMatrix, Params, SeqIndex, VerificationReport, MIN_INDEX,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error as ThisError;

use crate::args::{
    Backend, Cli, Command, EvalArgs, GenfunArgs, MatrixArgs, OeisArgs, OutputFormat, SeqKindArg, TilingsArgs,
    VerifyArgs,
};
use crate::output::{
    csv_field, csv_report_rows, json_line, plain_report, polynomial, strings, TilingDoc, ValueDoc, ValueRow,
    REPORT_CSV_HEADER,
};

/// Everything passed and was printed.
pub const EXIT_OK: u8 = 0;
/// A verification found at least one failure.
pub const EXIT_FAILURES: u8 = 1;
/// Bad usage or a violated hypothesis.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

pub type CliResult = Result<u8, CliError>;

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Eval(args) => cmd_eval(args, out),
        Command::Tilings(args) => cmd_tilings(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Genfun(args) => cmd_genfun(args, out),
        Command::Matrix(args) => cmd_matrix(args, out),
        Command::Oeis(args) => cmd_oeis(args, out),
    }
}

fn kind_name(kind: SeqKindArg) -> &'static str {
    match kind {
        SeqKindArg::F => "f",
        SeqKindArg::L => "l",
    }
}

fn backend_name(backend: Backend) -> &'static str {
    match backend {
        Backend::Recurrence => "recurrence",
        Backend::Closed => "closed",
        Backend::Genfun => "genfun",
        Backend::Matrix => "matrix",
        Backend::Tilings => "tilings",
    }
}

/// Values for `lo..=hi` through one backend.
pub fn evaluate(
    p: &Params,
    lo: SeqIndex,
    hi: SeqIndex,
    kind: SeqKindArg,
    backend: Backend,
) -> Result<Vec<BigInt>, Error> {
    if lo < MIN_INDEX {
        return Err(Error::IndexOutOfRange { min: MIN_INDEX, value: lo });
    }
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    if kind == SeqKindArg::L && !matches!(backend, Backend::Recurrence | Backend::Tilings) {
        return Err(Error::Hypothesis(format!(
            "the {} backend evaluates F only; use the recurrence or tilings backend for L",
            backend_name(backend)
        )));
    }
    let range = lo..=hi;
    match (kind, backend) {
        (SeqKindArg::F, Backend::Recurrence) => range.map(|n| eval_f(p, n).map(BigInt::from)).collect(),
        (SeqKindArg::L, Backend::Recurrence) => range.map(|n| eval_l(p, n).map(BigInt::from)).collect(),
        (SeqKindArg::F, Backend::Tilings) => range.map(|n| count_f_tilings(p, n).map(BigInt::from)).collect(),
        (SeqKindArg::L, Backend::Tilings) => range.map(|n| count_l_tilings(p, n).map(BigInt::from)).collect(),
        (_, Backend::Closed) => range.map(|n| closed_f(p, n).map(BigInt::from)).collect(),
        (_, Backend::Genfun) => {
            // coefficient of x^(n+1) is F(n)
            let coeffs = series_coeffs(&rational_genfun(p)?, (hi + 2) as usize);
            Ok(range.map(|n| coeffs[(n + 1) as usize].clone()).collect())
        }
        (_, Backend::Matrix) => {
            // bottom-right entry of A Q^(n+1) is F(n)
            let last = p.k() as usize - 1;
            range.map(|n| f_matrix(p, n).map(|m| m.get(last, last).clone())).collect()
        }
    }
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> CliResult {
    let p = args.params.params()?;
    let (lo, hi) = (args.n.lo, args.n.hi);
    let values = evaluate(&p, lo, hi, args.kind, args.backend)?;
    match args.format {
        OutputFormat::Plain => {
            for v in &values {
                writeln!(out, "{v}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in (lo..=hi).zip(&values) {
                writeln!(out, "{n},{v}")?;
            }
        }
        OutputFormat::Json => {
            let doc = ValueDoc {
                params: p,
                kind: kind_name(args.kind).into(),
                backend: backend_name(args.backend).into(),
                values: (lo..=hi).zip(&values).map(|(n, v)| ValueRow { n, value: v.to_string() }).collect(),
            };
            json_line(out, &doc)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_tilings(args: &TilingsArgs, out: &mut dyn Write) -> CliResult {
    let p = args.params.params()?;
    let n = args.n;
    if args.kind == SeqKindArg::L && p.k() <= p.i() {
        return Err(Error::Hypothesis(format!("type-L tilings require k > i (got {p})")).into());
    }
    let mut doc =
        TilingDoc { params: p, n, kind: kind_name(args.kind).into(), count: None, tilings: None, truncated: false };
    if args.count_only {
        let count = match args.kind {
            SeqKindArg::F => count_f_tilings(&p, n)?,
            SeqKindArg::L => count_l_tilings(&p, n)?,
        };
        match args.format {
            OutputFormat::Plain => writeln!(out, "{count}")?,
            OutputFormat::Csv => writeln!(out, "n,count\n{n},{count}")?,
            OutputFormat::Json => {
                doc.count = Some(count.to_string());
                json_line(out, &doc)?;
            }
        }
        return Ok(EXIT_OK);
    }

    let mut rendered = Vec::new();
    for t in enumerate_f_tilings(&p, n)? {
        if args.kind == SeqKindArg::L && !is_type_l(&p, n, &t)? {
            continue;
        }
        if rendered.len() == args.limit {
            doc.truncated = true;
            break;
        }
        rendered.push(render_tiling(&t));
    }
    if doc.truncated {
        eprintln!("note: listing stopped after {} tilings (raise --limit or use --count-only)", args.limit);
    }
    match args.format {
        OutputFormat::Plain => {
            for line in &rendered {
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "index,tiling")?;
            for (idx, line) in rendered.iter().enumerate() {
                writeln!(out, "{idx},{}", csv_field(line))?;
            }
        }
        OutputFormat::Json => {
            doc.tilings = Some(rendered);
            json_line(out, &doc)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_report(
    out: &mut dyn Write,
    format: OutputFormat,
    report: &VerificationReport,
    single: bool,
) -> io::Result<()> {
    match format {
        OutputFormat::Plain => plain_report(out, report),
        OutputFormat::Csv => {
            writeln!(out, "{REPORT_CSV_HEADER}")?;
            csv_report_rows(out, report)
        }
        OutputFormat::Json if single && report.identities.len() == 1 => json_line(out, &report.identities[0]),
        OutputFormat::Json => json_line(out, report),
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    if args.list {
        return list_registry(args.format, out);
    }
    let grid = args.grid();
    for (name, value) in [("imax", grid.imax), ("kmax", grid.kmax), ("rmax", grid.rmax), ("smax", grid.smax)] {
        if value < 1 {
            return Err(CliError::Usage(format!("--{name} must be ≥ 1 (got {value})")));
        }
    }
    if grid.nmax < MIN_INDEX {
        return Err(CliError::Usage(format!("--nmax must be ≥ {MIN_INDEX} (got {})", grid.nmax)));
    }
    let (report, single) = match args.identity.as_str() {
        "all" => (verify_all(&grid), false),
        "corollaries" => (check_corollaries(grid.nmax), false),
        id => (verify_grid(id, &grid)?, true),
    };
    let diagnostic = args.diagnostic.then(|| verify_literal_readings(&grid));

    match (&diagnostic, args.format) {
        (Some(diag), OutputFormat::Json) => {
            let main = if single { serde_json::to_value(&report.identities[0]) } else { serde_json::to_value(&report) };
            let doc = json!({
                "report": main.map_err(io::Error::other)?,
                "diagnostic": serde_json::to_value(diag).map_err(io::Error::other)?,
            });
            json_line(out, &doc)?;
        }
        (Some(diag), OutputFormat::Csv) => {
            write_report(out, OutputFormat::Csv, &report, single)?;
            csv_report_rows(out, diag)?;
        }
        (Some(diag), OutputFormat::Plain) => {
            plain_report(out, &report)?;
            writeln!(out, "diagnostic (as-printed readings; expected to fail, not counted):")?;
            plain_report(out, diag)?;
        }
        (None, format) => write_report(out, format, &report, single)?,
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILURES })
}

fn list_registry(format: OutputFormat, out: &mut dyn Write) -> CliResult {
    let specs = list_identities();
    match format {
        OutputFormat::Plain => {
            for s in &specs {
                writeln!(out, "{:<14} {}", s.id, s.statement)?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "id,aux,statement")?;
            for s in &specs {
                writeln!(out, "{},{},{}", s.id, s.aux.join(" "), csv_field(s.statement))?;
            }
        }
        OutputFormat::Json => {
            let doc: Vec<Value> =
                specs.iter().map(|s| json!({"id": s.id, "aux": s.aux, "statement": s.statement})).collect();
            json_line(out, &doc)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_genfun(args: &GenfunArgs, out: &mut dyn Write) -> CliResult {
    let p = args.params.params()?;
    let rs = rational_genfun(&p)?;
    match args.coeffs {
        Some(count) => {
            let coeffs = series_coeffs(&rs, count);
            match args.format {
                OutputFormat::Plain => writeln!(out, "{}", strings(&coeffs).join(" "))?,
                OutputFormat::Csv => {
                    writeln!(out, "power,coefficient")?;
                    for (m, c) in coeffs.iter().enumerate() {
                        writeln!(out, "{m},{c}")?;
                    }
                }
                OutputFormat::Json => json_line(out, &json!({"params": p, "coefficients": strings(&coeffs)}))?,
            }
        }
        None => {
            let rs = rs.trimmed();
            match args.format {
                OutputFormat::Plain => {
                    writeln!(out, "({}) / ({})", polynomial(&rs.numerator), polynomial(&rs.denominator))?
                }
                OutputFormat::Csv => {
                    writeln!(out, "power,numerator,denominator")?;
                    let len = rs.numerator.len().max(rs.denominator.len());
                    let zero = BigInt::default();
                    for m in 0..len {
                        let a = rs.numerator.get(m).unwrap_or(&zero);
                        let b = rs.denominator.get(m).unwrap_or(&zero);
                        writeln!(out, "{m},{a},{b}")?;
                    }
                }
                OutputFormat::Json => json_line(
                    out,
                    &json!({"params": p, "numerator": strings(&rs.numerator), "denominator": strings(&rs.denominator)}),
                )?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::from(m.rows().iter().map(|row| Value::from(strings(row))).collect::<Vec<_>>())
}

fn cmd_matrix(args: &MatrixArgs, out: &mut dyn Write) -> CliResult {
    let p = args.params.params()?;
    let q = build_q(&p)?;
    let power = match (args.power, args.generator, args.det || args.det_a, args.cassini) {
        (None, None, false, None) => Some(1),
        _ => args.power,
    };

    // Computed first so that a hypothesis error prints nothing.
    let q_power = power.map(|e| (e, mat_pow(&q, e)));
    let generator = args.generator.map(|n| f_matrix(&p, n).map(|m| (n, m))).transpose()?;
    let determinant = args.det.then(|| det_q_formula(&p).map(|formula| (det(&q), formula))).transpose()?;
    // the closed form for det A is stated for i = 1 only
    let determinant_a = args
        .det_a
        .then(|| -> Result<_, Error> {
            let formula = if p.i() == 1 { Some(det_a_formula(&p)?) } else { None };
            Ok((det(&build_a(&p)?), formula))
        })
        .transpose()?;
    let cassini_value =
        args.cassini.map(|n| -> Result<_, Error> { Ok((n, cassini(&p, n)?, det(&f_matrix(&p, n)?))) }).transpose()?;

    let mut exit = EXIT_OK;
    if let Some((computed, formula)) = &determinant {
        if computed != formula {
            eprintln!("mismatch: det Q = {computed}, closed form gives {formula}");
            exit = EXIT_FAILURES;
        }
    }
    if let Some((computed, Some(formula))) = &determinant_a {
        if computed != formula {
            eprintln!("mismatch: det A = {computed}, closed form gives {formula}");
            exit = EXIT_FAILURES;
        }
    }
    if let Some((n, formula, computed)) = &cassini_value {
        if computed != formula {
            eprintln!("mismatch at n = {n}: det(A Q^(n+1)) = {computed}, Cassini formula gives {formula}");
            exit = EXIT_FAILURES;
        }
    }

    match args.format {
        OutputFormat::Plain => {
            if let Some((_, m)) = &q_power {
                writeln!(out, "{m}")?;
            }
            if let Some((_, m)) = &generator {
                writeln!(out, "{m}")?;
            }
            if let Some((computed, _)) = &determinant {
                writeln!(out, "{computed}")?;
            }
            if let Some((computed, _)) = &determinant_a {
                writeln!(out, "{computed}")?;
            }
            if let Some((_, formula, _)) = &cassini_value {
                writeln!(out, "{formula}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "item,row,col,value")?;
            let mut cells = |item: String, m: &IntMatrix| -> io::Result<()> {
                for (t, row) in m.rows().iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        writeln!(out, "{item},{t},{j},{v}")?;
                    }
                }
                Ok(())
            };
            if let Some((e, m)) = &q_power {
                cells(format!("Q^{e}"), m)?;
            }
            if let Some((n, m)) = &generator {
                cells(format!("A Q^({n}+1)"), m)?;
            }
            if let Some((computed, _)) = &determinant {
                writeln!(out, "det Q,,,{computed}")?;
            }
            if let Some((computed, _)) = &determinant_a {
                writeln!(out, "det A,,,{computed}")?;
            }
            if let Some((n, formula, _)) = &cassini_value {
                writeln!(out, "cassini({n}),,,{formula}")?;
            }
        }
        OutputFormat::Json => {
            let mut doc = Map::new();
            doc.insert("params".into(), json!(p));
            if let Some((e, m)) = &q_power {
                doc.insert("power".into(), json!({"exponent": e, "rows": matrix_json(m)}));
            }
            if let Some((n, m)) = &generator {
                doc.insert("generator".into(), json!({"n": n, "rows": matrix_json(m)}));
            }
            if let Some((computed, formula)) = &determinant {
                doc.insert("det".into(), json!({"computed": computed.to_string(), "formula": formula.to_string()}));
            }
            if let Some((computed, formula)) = &determinant_a {
                let formula = formula.as_ref().map(ToString::to_string);
                doc.insert("det_a".into(), json!({"computed": computed.to_string(), "formula": formula}));
            }
            if let Some((n, formula, computed)) = &cassini_value {
                doc.insert(
                    "cassini".into(),
                    json!({"n": n, "formula": formula.to_string(), "determinant": computed.to_string()}),
                );
            }
            json_line(out, &Value::Object(doc))?;
        }
    }
    Ok(exit)
}

fn cmd_oeis(args: &OeisArgs, out: &mut dyn Write) -> CliResult {
    let seq = named_sequence(&args.name)?;
    let reference = match &args.bfile {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
            parse_bfile(&text)?
        }
        None => seq.reference(),
    };
    let (lo, hi) = match args.range {
        Some(r) => (r.lo, r.hi),
        None => {
            let first = reference.entries.first().map_or(seq.min_m, |(m, _)| *m).max(seq.min_m);
            (first, first + 29)
        }
    };

    if args.values {
        let values: Vec<_> = (lo..=hi).map(|m| seq.value(m).map(|v| (m, v))).collect::<Result<_, _>>()?;
        match args.format {
            OutputFormat::Plain => {
                for (m, v) in &values {
                    writeln!(out, "{m} {v}")?;
                }
            }
            OutputFormat::Csv => {
                writeln!(out, "m,value")?;
                for (m, v) in &values {
                    writeln!(out, "{m},{v}")?;
                }
            }
            OutputFormat::Json => {
                let rows: Vec<Value> = values.iter().map(|(m, v)| json!({"m": m, "value": v.to_string()})).collect();
                json_line(out, &json!({"name": seq.name, "oeis": seq.oeis, "values": rows}))?;
            }
        }
        return Ok(EXIT_OK);
    }

    let report = compare_reference(seq.name, &reference, lo, hi)?;
    write_report(out, args.format, &report, true)?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILURES })
}
