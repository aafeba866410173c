//! Output formatting: significant-digit numbers, enclosures, and the CSV /
//! line-JSON row writers. Numeric CSV cells use 17 significant digits so a
//! binary64 value round-trips exactly; output carries no timestamps, so a
//! repeated invocation is byte-identical.

use clap::ValueEnum;
use qcdist::capacity::Enclosure;
use qcdist::Error;
use std::io::Write;
use std::path::Path;

#[derive(Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One table cell: a number (formatted to 17 significant digits in CSV,
/// native in JSON), text, or empty (outside a bound's validity window).
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

/// Formats `v` with `sig` significant digits, plain decimal where readable
/// and scientific otherwise.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        format!("{:.*e}", sig - 1, v)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, v)
    }
}

/// Exact enclosures print as a single value; bound-only ones as
/// "lower..upper [bound-only]".
pub fn fmt_enclosure(e: &Enclosure, sig: usize) -> String {
    match e.value() {
        Some(v) => fmt_sig(v, sig),
        None => format!(
            "{}..{} [bound-only]",
            fmt_sig(e.lower(), sig),
            fmt_sig(e.upper(), sig)
        ),
    }
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Num(v) => format!("{:.16e}", v),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

fn json_row(header: &[String], row: &[Cell]) -> String {
    let mut map = serde_json::Map::new();
    for (name, cell) in header.iter().zip(row) {
        let value = match cell {
            Cell::Num(v) => serde_json::json!(v),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Empty => serde_json::Value::Null,
        };
        map.insert(name.clone(), value);
    }
    serde_json::Value::Object(map).to_string()
}

/// Writes rows as CSV (header + lines) or line-JSON (one object per row) to
/// the given file, or stdout when no path is set.
pub fn write_rows(
    header: &[String],
    rows: &[Vec<Cell>],
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<(), Error> {
    let mut buf = String::new();
    match format {
        OutputFormat::Csv => {
            buf.push_str(&header.join(","));
            buf.push('\n');
            for row in rows {
                let line: Vec<String> = row.iter().map(csv_cell).collect();
                buf.push_str(&line.join(","));
                buf.push('\n');
            }
        }
        OutputFormat::Json => {
            for row in rows {
                buf.push_str(&json_row(header, row));
                buf.push('\n');
            }
        }
    }
    match out {
        Some(path) => std::fs::write(path, buf)
            .map_err(|e| Error::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            w.write_all(buf.as_bytes())
                .map_err(|e| Error::usage(format!("cannot write to stdout: {e}")))
        }
    }
}
