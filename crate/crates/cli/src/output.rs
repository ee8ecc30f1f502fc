//! Output records and their text, JSON and CSV renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use jacobi_dim::crosscheck::ExactValue;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub group: Value,
    #[serde(skip)]
    pub label: String,
    pub k: i64,
    pub m: i64,
    pub value: ExactValue,
    pub plain: bool,
}

pub const RECORD_CSV_HEADER: [&str; 6] = ["group", "k", "m", "value_num", "value_den", "plain"];

fn show(v: ExactValue) -> String {
    if v.den == 1 {
        v.num.to_string()
    } else {
        format!("{}/{}", v.num, v.den)
    }
}

pub fn write_records(
    out: &mut dyn Write,
    records: &[OutputRecord],
    format: Format,
    single: bool,
) -> io::Result<()> {
    match format {
        Format::Text if single => {
            for r in records {
                writeln!(out, "{}", show(r.value))?;
            }
        }
        Format::Text => {
            writeln!(
                out,
                "{:<16} {:>4} {:>4} {:>12} plain",
                "group", "k", "m", "value"
            )?;
            for r in records {
                writeln!(
                    out,
                    "{:<16} {:>4} {:>4} {:>12} {}",
                    r.label,
                    r.k,
                    r.m,
                    show(r.value),
                    r.plain
                )?;
            }
        }
        Format::Json => {
            let text = if single {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(records)
            };
            writeln!(out, "{}", text.map_err(io::Error::other)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(RECORD_CSV_HEADER)?;
            for r in records {
                w.write_record([
                    r.label.clone(),
                    r.k.to_string(),
                    r.m.to_string(),
                    r.value.num.to_string(),
                    r.value.den.to_string(),
                    r.plain.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct HurwitzRow {
    pub delta: i64,
    pub h: ExactValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forms: Option<Vec<[i64; 3]>>,
}

pub fn write_hurwitz(out: &mut dyn Write, rows: &[HurwitzRow], format: Format) -> io::Result<()> {
    let forms_text = |forms: &[[i64; 3]]| {
        forms
            .iter()
            .map(|[a, b, c]| format!("({a},{b},{c})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match format {
        Format::Text => {
            for r in rows {
                match &r.forms {
                    Some(forms) => writeln!(
                        out,
                        "{:>6}  {:>8}  {}",
                        r.delta,
                        show(r.h),
                        forms_text(forms)
                    )?,
                    None => writeln!(out, "{:>6}  {:>8}", r.delta, show(r.h))?,
                }
            }
        }
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(rows).map_err(io::Error::other)?
            )?;
        }
        Format::Csv => {
            let with_forms = rows.iter().any(|r| r.forms.is_some());
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["delta", "h_num", "h_den"];
            if with_forms {
                header.push("forms");
            }
            w.write_record(&header)?;
            for r in rows {
                let mut fields = vec![
                    r.delta.to_string(),
                    r.h.num.to_string(),
                    r.h.den.to_string(),
                ];
                if let Some(forms) = &r.forms {
                    fields.push(forms_text(forms));
                }
                w.write_record(&fields)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
