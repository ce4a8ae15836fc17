//! Minimal self-contained SVG output: line charts for one-axis tables and
//! one heatmap per measure for two-axis grids.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::csv::CsvTable;
use crate::error::{Error, Result};

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

const VIRIDIS: [(f64, f64, f64); 5] = [
    (68.0, 1.0, 84.0),
    (59.0, 82.0, 139.0),
    (33.0, 145.0, 140.0),
    (94.0, 201.0, 98.0),
    (253.0, 231.0, 37.0),
];

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub title: Option<String>,
    /// Width of the line chart, or of each heatmap panel.
    pub width: f64,
    /// Height of the line chart, or of each heatmap panel.
    pub height: f64,
}

impl Default for PlotSpec {
    fn default() -> Self {
        Self {
            title: None,
            width: 640.0,
            height: 420.0,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn extent(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values
        .into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn viridis(t: f64) -> String {
    let t = t.clamp(0.0, 1.0) * (VIRIDIS.len() - 1) as f64;
    let i = (t.floor() as usize).min(VIRIDIS.len() - 2);
    let f = t - i as f64;
    let (a, b) = (VIRIDIS[i], VIRIDIS[i + 1]);
    let mix = |x: f64, y: f64| (x + f * (y - x)).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(a.0, b.0),
        mix(a.1, b.1),
        mix(a.2, b.2)
    )
}

/// Renders a table read by [`super::parse_csv`].
pub fn render_svg(table: &CsvTable, plot: &PlotSpec) -> Result<String> {
    if table.is_empty() {
        return Err(Error::MixedAxisShape("table has no rows".into()));
    }
    if table.measure_names.is_empty() {
        return Err(Error::MixedAxisShape("table has no measure columns".into()));
    }
    match table.axes.len() {
        1 => Ok(line_chart(table, plot)),
        2 => heatmaps(table, plot),
        n => Err(Error::MixedAxisShape(format!("{n} axis columns"))),
    }
}

pub fn write_svg(svg: &str, destination: &Path) -> Result<()> {
    fs::write(destination, svg).map_err(|source| Error::Io {
        path: destination.to_path_buf(),
        source,
    })
}

fn open_svg(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn line_chart(table: &CsvTable, plot: &PlotSpec) -> String {
    let (left, right, top, bottom) = (70.0, 130.0, 40.0, 55.0);
    let (w, h) = (plot.width, plot.height);
    let (pw, ph) = (w - left - right, h - top - bottom);
    let xs = &table.axes[0];
    let (x0, x1) = extent(xs.iter().copied());
    let (y0, y1) = extent(table.measures.iter().flatten().copied().chain([0.0]));
    let sx = |x: f64| left + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| top + ph - (y - y0) / (y1 - y0) * ph;

    let mut out = String::new();
    open_svg(&mut out, w, h);
    if let Some(title) = &plot.title {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            left + pw / 2.0,
            escape(title)
        );
    }
    let _ = writeln!(
        out,
        r#"<rect x="{left:.2}" y="{top:.2}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
    );
    for k in 0..=4 {
        let f = k as f64 / 4.0;
        let xv = x0 + f * (x1 - x0);
        let yv = y0 + f * (y1 - y0);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{xv:.3}</text>"#,
            sx(xv),
            top + ph + 18.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.3}</text>"#,
            left - 6.0,
            sy(yv) + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        left + pw / 2.0,
        h - 12.0,
        escape(&table.axis_names[0])
    );
    let _ = writeln!(
        out,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">value</text>"#,
        top + ph / 2.0,
        top + ph / 2.0
    );
    for (k, (name, ys)) in table.measure_names.iter().zip(&table.measures).enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let points: Vec<String> = xs
            .iter()
            .zip(ys)
            .map(|(&x, &y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
        let ly = top + 14.0 + 18.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
            w - right + 12.0,
            w - right + 36.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            w - right + 42.0,
            ly + 4.0,
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Distinct values of the outer axis and the shared inner axis, if the rows
/// form a full regular grid.
fn grid_shape(table: &CsvTable) -> Result<(Vec<f64>, Vec<f64>)> {
    let (outer, inner) = (&table.axes[0], &table.axes[1]);
    let mut outer_values: Vec<f64> = Vec::new();
    for &v in outer {
        if outer_values.last() != Some(&v) {
            outer_values.push(v);
        }
    }
    let n_inner = table.len() / outer_values.len();
    if n_inner * outer_values.len() != table.len() || n_inner == 0 {
        return Err(Error::MixedAxisShape(format!(
            "{} rows do not split into {} equal blocks",
            table.len(),
            outer_values.len()
        )));
    }
    let inner_values = inner[..n_inner].to_vec();
    for (b, &ov) in outer_values.iter().enumerate() {
        let block = b * n_inner..(b + 1) * n_inner;
        if outer[block.clone()].iter().any(|&v| v != ov) || inner[block] != inner_values[..] {
            return Err(Error::MixedAxisShape(format!(
                "block {b} of the {} axis is irregular",
                table.axis_names[0]
            )));
        }
    }
    Ok((outer_values, inner_values))
}

fn heatmaps(table: &CsvTable, plot: &PlotSpec) -> Result<String> {
    let (outer, inner) = grid_shape(table)?;
    let (left, right, top, bottom) = (70.0, 80.0, 50.0, 55.0);
    let (panel_w, panel_h) = (plot.width, plot.height);
    let (pw, ph) = (panel_w - left - right, panel_h - top - bottom);
    let total_w = panel_w * table.measure_names.len() as f64;
    let cell_w = pw / inner.len() as f64;
    let cell_h = ph / outer.len() as f64;

    let mut out = String::new();
    open_svg(&mut out, total_w, panel_h);
    if let Some(title) = &plot.title {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="20" text-anchor="middle" font-size="15">{}</text>"#,
            total_w / 2.0,
            escape(title)
        );
    }
    for (m, (name, values)) in table.measure_names.iter().zip(&table.measures).enumerate() {
        let ox = m as f64 * panel_w;
        let (v0, v1) = extent(values.iter().copied());
        let _ = writeln!(out, r#"<g transform="translate({ox:.2},0)">"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="40" text-anchor="middle">{}</text>"#,
            left + pw / 2.0,
            escape(name)
        );
        for (i, _) in outer.iter().enumerate() {
            for (j, _) in inner.iter().enumerate() {
                let v = values[i * inner.len() + j];
                let x = left + j as f64 * cell_w;
                let y = top + ph - (i + 1) as f64 * cell_h;
                let _ = writeln!(
                    out,
                    r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
                    cell_w + 0.05,
                    cell_h + 0.05,
                    viridis((v - v0) / (v1 - v0))
                );
            }
        }
        let _ = writeln!(
            out,
            r#"<rect x="{left:.2}" y="{top:.2}" width="{pw:.2}" height="{ph:.2}" fill="none" stroke="black"/>"#
        );
        for (label, x, anchor) in [
            (inner[0], left, "start"),
            (inner[inner.len() - 1], left + pw, "end"),
        ] {
            let _ = writeln!(
                out,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="{anchor}">{label:.3}</text>"#,
                top + ph + 16.0
            );
        }
        for (label, y) in [(outer[0], top + ph), (outer[outer.len() - 1], top + 10.0)] {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{y:.2}" text-anchor="end">{label:.3}</text>"#,
                left - 6.0
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            left + pw / 2.0,
            panel_h - 14.0,
            escape(&table.axis_names[1])
        );
        let _ = writeln!(
            out,
            r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
            top + ph / 2.0,
            top + ph / 2.0,
            escape(&table.axis_names[0])
        );
        // Colour bar.
        let bar_x = left + pw + 16.0;
        let steps = 20;
        for s in 0..steps {
            let f = s as f64 / (steps - 1) as f64;
            let y = top + ph - (s + 1) as f64 * ph / steps as f64;
            let _ = writeln!(
                out,
                r#"<rect x="{bar_x:.2}" y="{y:.2}" width="14" height="{:.2}" fill="{}"/>"#,
                ph / steps as f64 + 0.05,
                viridis(f)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}">{v0:.3}</text>"#,
            bar_x + 18.0,
            top + ph
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}">{v1:.3}</text>"#,
            bar_x + 18.0,
            top + 10.0
        );
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::parse_csv;

    #[test]
    fn line_chart_smoke() {
        let table =
            parse_csv("r,discord,lqu,discord_branch\n0,1,0.9,D1\n1,0.5,0.4,D2\n2,0.1,0.05,D2\n")
                .unwrap();
        let svg = render_svg(&table, &PlotSpec::default()).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains(">discord<") && svg.contains(">lqu<") && svg.contains(">r<"));
        assert_eq!(svg, render_svg(&table, &PlotSpec::default()).unwrap());
    }

    #[test]
    fn heatmap_smoke() {
        let table = parse_csv("T,r,discord\n1,0,0.3\n1,1,0.2\n2,0,0.1\n2,1,0.0\n").unwrap();
        let svg = render_svg(&table, &PlotSpec::default()).unwrap();
        assert!(svg.contains(">discord<") && svg.contains(">T<") && svg.contains(">r<"));
        assert!(svg.contains("#fde725") && svg.contains("#440154"));
    }

    #[test]
    fn irregular_grid_is_rejected() {
        let table = parse_csv("T,r,discord\n1,0,0.3\n1,1,0.2\n2,0,0.1\n").unwrap();
        assert!(matches!(
            render_svg(&table, &PlotSpec::default()),
            Err(Error::MixedAxisShape(_))
        ));
        let table = parse_csv("T,r,discord\n1,0,0.3\n1,1,0.2\n2,0,0.1\n2,2,0.1\n").unwrap();
        assert!(matches!(
            render_svg(&table, &PlotSpec::default()),
            Err(Error::MixedAxisShape(_))
        ));
        let table = parse_csv("discord,lqu\n0.1,0.2\n").unwrap();
        assert!(matches!(
            render_svg(&table, &PlotSpec::default()),
            Err(Error::MixedAxisShape(_))
        ));
    }
}
