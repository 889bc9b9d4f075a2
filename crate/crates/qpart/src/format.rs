//! Rendering of partitions, count tables and verification reports.

use std::io::{self, Write};
use std::str::FromStr;

use qpart_core::identities::{MismatchIndex, VerificationReport};
use qpart_core::partitions::{ColoredPartition, CountTable, Overpartition};
use qpart_core::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overline {
    /// `3~`
    Ascii,
    /// `3` followed by U+0305 on every digit
    Unicode,
}

const COMBINING_OVERLINE: char = '\u{0305}';
const EMPTY: &str = "empty";

pub fn colored(p: &ColoredPartition) -> String {
    if p.is_empty() {
        EMPTY.to_string()
    } else {
        p.to_string()
    }
}

pub fn overpartition(p: &Overpartition, style: Overline) -> String {
    if p.is_empty() {
        return EMPTY.to_string();
    }
    let parts: Vec<String> = p
        .parts()
        .iter()
        .map(|part| match (part.overlined, style) {
            (false, _) => part.value.to_string(),
            (true, Overline::Ascii) => format!("{}~", part.value),
            (true, Overline::Unicode) => part
                .value
                .to_string()
                .chars()
                .flat_map(|d| [d, COMBINING_OVERLINE])
                .collect(),
        })
        .collect();
    parts.join(",")
}

/// A JSON number carrying every digit of `n`.
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integers are valid JSON"))
}

pub fn write_counts(out: &mut dyn Write, table: &CountTable, format: Format) -> io::Result<()> {
    match format {
        Format::Text => {
            for (n, c) in table.values.iter().enumerate() {
                writeln!(out, "{n}\t{c}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "count"])?;
            for (n, c) in table.values.iter().enumerate() {
                w.write_record([n.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .values
                .iter()
                .enumerate()
                .map(|(n, c)| json!({ "n": n, "count": json_int(c) }))
                .collect();
            let doc = json!({ "family": table.family.to_string(), "counts": rows });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

/// A report plus how long the verification that produced it took.
#[derive(Clone, Debug)]
pub struct TimedReport {
    pub report: VerificationReport,
    pub elapsed_ms: u128,
}

pub fn report_json(r: &TimedReport) -> Value {
    let mismatch = match &r.report.first_mismatch {
        None => Value::Null,
        Some(mm) => {
            let index = match mm.index {
                MismatchIndex::Coefficient(n) => json!(n),
                MismatchIndex::Bivariate { parts, weight } => json!([parts, weight]),
            };
            json!({ "index": index, "lhs": json_int(&mm.lhs), "rhs": json_int(&mm.rhs) })
        }
    };
    json!({
        "identity": r.report.identity,
        "order": r.report.order,
        "status": r.report.status().to_string(),
        "first_mismatch": mismatch,
        "elapsed_ms": r.elapsed_ms,
    })
}

pub fn write_reports(
    out: &mut dyn Write,
    reports: &[TimedReport],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                write!(out, "{}", r.report)?;
                if r.report.passed() && r.report.is_vacuous() {
                    write!(out, " (vacuous window)")?;
                }
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "identity",
                "order",
                "status",
                "mismatch_index",
                "lhs",
                "rhs",
            ])?;
            for r in reports {
                let (idx, lhs, rhs) = match &r.report.first_mismatch {
                    Some(mm) => (mm.index.to_string(), mm.lhs.to_string(), mm.rhs.to_string()),
                    None => Default::default(),
                };
                w.write_record([
                    r.report.identity.clone(),
                    r.report.order.to_string(),
                    r.report.status().to_string(),
                    idx,
                    lhs,
                    rhs,
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", report_json(r))?;
            }
        }
    }
    Ok(())
}

pub fn write_pairs(
    out: &mut dyn Write,
    pairs: &[(ColoredPartition, Overpartition)],
    format: Format,
    style: Overline,
) -> io::Result<()> {
    match format {
        Format::Text => {
            for (c, o) in pairs {
                writeln!(out, "{}\t{}", colored(c), overpartition(o, style))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["colored", "overpartition"])?;
            for (c, o) in pairs {
                w.write_record([colored(c), overpartition(o, style)])?;
            }
            w.flush()?;
        }
        Format::Json => {
            for (c, o) in pairs {
                let row =
                    json!({ "colored": colored(c), "overpartition": overpartition(o, style) });
                writeln!(out, "{row}")?;
            }
        }
    }
    Ok(())
}
