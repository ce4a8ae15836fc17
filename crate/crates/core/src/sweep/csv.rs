use std::fs;
use std::path::Path;

use super::{AxisName, SweepRow, SweepSpec};
use crate::error::{Error, Result};

/// Twelve significant digits in scientific notation. Negative zero prints as
/// zero so reruns stay byte-identical.
pub fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// The CSV document: `#` note lines, the header, then one line per row.
/// Fields are separated by `,` and lines end in `\n`.
pub fn format_csv(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    for note in &spec.notes {
        out.push_str("# ");
        out.push_str(note);
        out.push('\n');
    }
    out.push_str(&spec.header().join(","));
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row
            .coords
            .iter()
            .chain(&row.values)
            .map(|&x| format_float(x))
            .chain(std::iter::once(row.branch.to_string()))
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn emit_csv(spec: &SweepSpec, rows: &[SweepRow], destination: &Path) -> Result<()> {
    fs::write(destination, format_csv(spec, rows)).map_err(|source| Error::Io {
        path: destination.to_path_buf(),
        source,
    })
}

/// A sweep CSV read back for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub axis_names: Vec<String>,
    pub measure_names: Vec<String>,
    /// `axes[k][i]` is the value of axis `k` in row `i`.
    pub axes: Vec<Vec<f64>>,
    /// `measures[k][i]` is the value of measure `k` in row `i`.
    pub measures: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn len(&self) -> usize {
        self.axes.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Parses CSV text written by [`format_csv`]. Leading columns named after a
/// sweep axis are axes; `discord_branch` is skipped; every other column is a
/// measure.
pub fn parse_csv(text: &str) -> Result<CsvTable> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| Error::MalformedCsv("missing header".into()))?
        .split(',')
        .map(str::trim)
        .collect();

    let axis_count = header
        .iter()
        .take_while(|h| h.parse::<AxisName>().is_ok())
        .count();
    let measure_columns: Vec<usize> = (axis_count..header.len())
        .filter(|&i| header[i] != "discord_branch")
        .collect();

    let mut axes = vec![Vec::new(); axis_count];
    let mut measures = vec![Vec::new(); measure_columns.len()];
    for (line_no, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != header.len() {
            return Err(Error::MalformedCsv(format!(
                "data row {} has {} fields, header has {}",
                line_no + 1,
                fields.len(),
                header.len()
            )));
        }
        let number = |i: usize| {
            fields[i].parse::<f64>().map_err(|_| {
                Error::MalformedCsv(format!(
                    "data row {}: `{}` in column {} is not a number",
                    line_no + 1,
                    fields[i],
                    header[i]
                ))
            })
        };
        for (k, column) in axes.iter_mut().enumerate() {
            column.push(number(k)?);
        }
        for (k, &i) in measure_columns.iter().enumerate() {
            measures[k].push(number(i)?);
        }
    }
    Ok(CsvTable {
        axis_names: header[..axis_count].iter().map(|s| s.to_string()).collect(),
        measure_names: measure_columns
            .iter()
            .map(|&i| header[i].to_string())
            .collect(),
        axes,
        measures,
    })
}
