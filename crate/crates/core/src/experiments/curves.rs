//! Aggregated regret curves and their CSV form.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 5] = ["sampler", "round", "mean_regret", "ci_low", "ci_high"];

/// Mean cumulative regret of one sampler variant, with a pointwise CI.
/// Index `t` holds round `t + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateCurve {
    pub label: String,
    pub mean: Vec<f64>,
    pub ci_low: Vec<f64>,
    pub ci_high: Vec<f64>,
    pub config_hash: u64,
}

impl AggregateCurve {
    pub fn rounds(&self) -> usize {
        self.mean.len()
    }

    pub fn final_mean(&self) -> Option<f64> {
        self.mean.last().copied()
    }

    /// Mean cumulative regret after `round` rounds (`round >= 1`).
    pub fn at(&self, round: usize) -> Option<f64> {
        round.checked_sub(1).and_then(|i| self.mean.get(i).copied())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub sampler: String,
    pub round: usize,
    pub mean_regret: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Seventeen significant digits, so values survive a text round trip exactly.
fn fmt_float(out: &mut String, v: f64) {
    write!(out, "{v:.16e}").expect("writing to a String");
}

/// Renders the curves as CSV, rows ordered by `(sampler, round)`.
pub fn emit_csv(curves: &[AggregateCurve]) -> String {
    let mut order: Vec<&AggregateCurve> = curves.iter().collect();
    order.sort_by(|a, b| a.label.cmp(&b.label));
    let mut out = CSV_HEADER.join(",");
    out.push('\n');
    for c in order {
        for t in 0..c.rounds() {
            write!(out, "{},{},", c.label, t + 1).expect("writing to a String");
            fmt_float(&mut out, c.mean[t]);
            out.push(',');
            fmt_float(&mut out, c.ci_low[t]);
            out.push(',');
            fmt_float(&mut out, c.ci_high[t]);
            out.push('\n');
        }
    }
    out
}

pub fn write_csv(curves: &[AggregateCurve], path: &Path) -> Result<()> {
    std::fs::write(path, emit_csv(curves)).map_err(|e| Error::io(path, e))
}

pub fn read_csv(path: &Path) -> Result<Vec<AggregateCurve>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_curves(&text)
}

/// Parses and checks every data row.
pub fn parse_rows(text: &str) -> Result<Vec<CurveRow>> {
    let bad = |line: u64, msg: String| Error::invalid(format!("csv line {line}: {msg}"));
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| Error::invalid(format!("csv header: {e}")))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::invalid(format!("unexpected csv header {header:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::invalid(format!("csv: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let float = |i: usize| -> Result<f64> {
            let v: f64 = record[i]
                .parse()
                .map_err(|_| bad(line, format!("{} is not a number: {:?}", CSV_HEADER[i], &record[i])))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad(line, format!("{} is not finite", CSV_HEADER[i])))
            }
        };
        let round: usize = record[1]
            .parse()
            .map_err(|_| bad(line, format!("bad round {:?}", &record[1])))?;
        if record[0].is_empty() {
            return Err(bad(line, "empty sampler label".into()));
        }
        rows.push(CurveRow {
            sampler: record[0].to_string(),
            round,
            mean_regret: float(2)?,
            ci_low: float(3)?,
            ci_high: float(4)?,
        });
    }
    Ok(rows)
}

/// Groups rows into curves. Each label's rounds must run `1, 2, …, N` and
/// labels must appear in sorted order, as [`emit_csv`] writes them.
pub fn parse_curves(text: &str) -> Result<Vec<AggregateCurve>> {
    let mut curves: Vec<AggregateCurve> = Vec::new();
    for row in parse_rows(text)? {
        let start_new = curves.last().is_none_or(|c| c.label != row.sampler);
        if start_new {
            if let Some(prev) = curves.last() {
                if prev.label > row.sampler {
                    return Err(Error::invalid(format!("curve {:?} out of order", row.sampler)));
                }
            }
            curves.push(AggregateCurve {
                label: row.sampler.clone(),
                mean: Vec::new(),
                ci_low: Vec::new(),
                ci_high: Vec::new(),
                config_hash: 0,
            });
        }
        let c = curves.last_mut().expect("pushed above");
        if row.round != c.mean.len() + 1 {
            return Err(Error::invalid(format!(
                "curve {:?}: expected round {}, found {}",
                c.label,
                c.mean.len() + 1,
                row.round
            )));
        }
        c.mean.push(row.mean_regret);
        c.ci_low.push(row.ci_low);
        c.ci_high.push(row.ci_high);
    }
    Ok(curves)
}
