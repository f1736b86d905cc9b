//! CSV files written and read by the experiment harness.
//!
//! Every file starts with `#`-prefixed `key = value` provenance lines; readers
//! skip them. Floats use 12 significant digits so output is byte-stable.

use std::io::{Read, Write};

use num_bigint::BigUint;

use crate::experiment::{CountRecord, ExperimentError, FluctuationCurve, Summary};

pub const RECORDS_HEADER: [&str; 6] = ["size", "sample", "seed", "count", "ln_count", "diff"];
pub const SUMMARY_HEADER: [&str; 5] = ["size", "samples", "mean", "rate_estimate", "reference_rate"];
pub const CURVE_HEADER: [&str; 3] = ["size", "epsilon", "f"];

/// `%.12g`: 12 significant digits, trailing zeros dropped, scientific
/// notation outside `1e-4 <= |x| < 1e12`.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", strip_zeros(mantissa), sign, exp.abs())
    }
}

fn strip_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn write_comments<W: Write>(out: &mut W, provenance: &[(String, String)]) -> std::io::Result<()> {
    for (k, v) in provenance {
        writeln!(out, "# {k} = {v}")?;
    }
    Ok(())
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

pub fn write_records<W: Write>(
    mut out: W,
    provenance: &[(String, String)],
    records: &[CountRecord],
) -> Result<(), ExperimentError> {
    write_comments(&mut out, provenance)?;
    let mut w = csv_writer(out);
    w.write_record(RECORDS_HEADER)?;
    for r in records {
        w.write_record([
            r.size.to_string(),
            r.sample.to_string(),
            r.seed.to_string(),
            r.count.to_string(),
            fmt_sig12(r.ln_count),
            fmt_sig12(r.diff),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary<W: Write>(
    mut out: W,
    provenance: &[(String, String)],
    rows: &[Summary],
    reference_rate: f64,
) -> Result<(), ExperimentError> {
    write_comments(&mut out, provenance)?;
    let mut w = csv_writer(out);
    w.write_record(SUMMARY_HEADER)?;
    for s in rows {
        w.write_record([
            s.size.to_string(),
            s.samples.to_string(),
            fmt_sig12(s.mean),
            fmt_sig12(s.rate_estimate),
            fmt_sig12(reference_rate),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_curves<W: Write>(
    mut out: W,
    provenance: &[(String, String)],
    curves: &[FluctuationCurve],
) -> Result<(), ExperimentError> {
    write_comments(&mut out, provenance)?;
    let mut sorted: Vec<&FluctuationCurve> = curves.iter().collect();
    sorted.sort_by_key(|c| c.size);
    let mut w = csv_writer(out);
    w.write_record(CURVE_HEADER)?;
    for c in sorted {
        for &(eps, f) in &c.points {
            w.write_record([c.size.to_string(), fmt_sig12(eps), fmt_sig12(f)])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads a records file. `diff` is taken as written; callers rebase it when
/// they want a different reference rate.
pub fn read_records<R: Read>(input: R) -> Result<Vec<CountRecord>, ExperimentError> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(RECORDS_HEADER) {
        return Err(ExperimentError::Csv(format!(
            "unexpected records header {:?}",
            headers.iter().collect::<Vec<_>>()
        )));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let field = |j: usize| row.get(j).unwrap_or_default();
        let bad = |what: &str| ExperimentError::Csv(format!("row {}: bad {what}", i + 1));
        out.push(CountRecord {
            size: field(0).parse().map_err(|_| bad("size"))?,
            sample: field(1).parse().map_err(|_| bad("sample"))?,
            seed: field(2).parse().map_err(|_| bad("seed"))?,
            count: field(3).parse::<BigUint>().map_err(|_| bad("count"))?,
            ln_count: field(4).parse().map_err(|_| bad("ln_count"))?,
            diff: field(5).parse().map_err(|_| bad("diff"))?,
        });
    }
    Ok(out)
}
