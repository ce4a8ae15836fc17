//! Parameter sweeps over the dot parameters and channel time, and the
//! figure presets built on them.
//!
//! Every point is evaluated from the closed forms: thermal state, optional
//! channel evolution on the X parameterization, then [`full_report`].
//! Points are computed in parallel but collected in lexicographic axis order
//! (first axis outermost), so output is identical for any worker count.

mod config;
mod csv;
mod presets;
mod svg;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::channels::{evolve_xstate, gamma_from_scaled_time, ChannelKind};
use crate::correlations::{full_report, CorrelationReport, DiscordBranch};
use crate::error::{Error, Result};
use crate::model::{thermal_state_closed, DotParams};

pub use config::{parse_key_values, SweepOptions};
pub use csv::{emit_csv, format_csv, format_float, parse_csv, CsvTable};
pub use presets::{figure_preset, FigurePreset};
pub use svg::{render_svg, write_svg, PlotSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxisName {
    K0,
    R,
    T,
    /// Dimensionless channel time `Γ t`.
    GammaT,
}

impl AxisName {
    pub const ALL: [AxisName; 4] = [AxisName::K0, AxisName::R, AxisName::T, AxisName::GammaT];

    pub fn as_str(&self) -> &'static str {
        match self {
            AxisName::K0 => "k0",
            AxisName::R => "r",
            AxisName::T => "T",
            AxisName::GammaT => "gamma_t",
        }
    }
}

impl fmt::Display for AxisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxisName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AxisName::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidSweep(format!(
                    "unknown axis `{s}` (expected one of k0, r, T, gamma_t)"
                ))
            })
    }
}

/// Sample points of one axis.
#[derive(Debug, Clone, PartialEq)]
pub enum AxisValues {
    /// `steps` evenly spaced points from `start` to `stop` inclusive.
    Range { start: f64, stop: f64, steps: usize },
    /// Explicit, strictly increasing points.
    List(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub values: AxisValues,
}

impl Axis {
    pub fn range(name: AxisName, start: f64, stop: f64, steps: usize) -> Self {
        Self {
            name,
            values: AxisValues::Range { start, stop, steps },
        }
    }

    pub fn list(name: AxisName, values: Vec<f64>) -> Self {
        Self {
            name,
            values: AxisValues::List(values),
        }
    }

    pub fn points(&self) -> Vec<f64> {
        match &self.values {
            AxisValues::Range { start, stop, steps } => {
                let span = stop - start;
                let last = steps - 1;
                (0..*steps)
                    .map(|i| {
                        if i == last {
                            *stop
                        } else {
                            start + span * i as f64 / last as f64
                        }
                    })
                    .collect()
            }
            AxisValues::List(values) => values.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        let name = self.name;
        match &self.values {
            AxisValues::Range { start, stop, steps } => {
                if *steps < 2 {
                    return Err(Error::InvalidSweep(format!(
                        "axis {name}: needs at least 2 steps, got {steps}"
                    )));
                }
                if !start.is_finite() || !stop.is_finite() || start >= stop {
                    return Err(Error::InvalidSweep(format!(
                        "axis {name}: start ({start}) must be below stop ({stop})"
                    )));
                }
            }
            AxisValues::List(values) => {
                if values.is_empty() {
                    return Err(Error::InvalidSweep(format!(
                        "axis {name}: empty value list"
                    )));
                }
                if values.iter().any(|v| !v.is_finite()) || values.windows(2).any(|w| w[0] >= w[1])
                {
                    return Err(Error::InvalidSweep(format!(
                        "axis {name}: values must be finite and strictly increasing"
                    )));
                }
            }
        }
        let points = self.points();
        let lowest = points[0];
        match name {
            AxisName::T if lowest <= 0.0 => Err(Error::InvalidSweep(format!(
                "axis T: temperatures must be positive, got {lowest}"
            ))),
            AxisName::GammaT if lowest < 0.0 => Err(Error::InvalidSweep(format!(
                "axis gamma_t: channel time must be non-negative, got {lowest}"
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Discord,
    Lqu,
    MutualInfo,
    Classical,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Discord,
        Measure::Lqu,
        Measure::MutualInfo,
        Measure::Classical,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Measure::Discord => "discord",
            Measure::Lqu => "lqu",
            Measure::MutualInfo => "mutual_info",
            Measure::Classical => "classical",
        }
    }

    pub fn of(&self, report: &CorrelationReport) -> f64 {
        match self {
            Measure::Discord => report.discord,
            Measure::Lqu => report.lqu,
            Measure::MutualInfo => report.mutual_info,
            Measure::Classical => report.classical,
        }
    }

    /// Parses a comma-separated list such as `discord,lqu`.
    pub fn parse_list(s: &str) -> Result<Vec<Measure>> {
        s.split(',')
            .map(str::trim)
            .filter(|m| !m.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidSweep(format!(
                    "unknown measure `{s}` (expected discord, lqu, mutual_info or classical)"
                ))
            })
    }
}

/// Noise applied to every point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelSetting {
    pub kind: ChannelKind,
    pub decay_rate: f64,
    /// Evolution time used when no `gamma_t` axis is swept.
    pub time: f64,
}

/// A complete, validated description of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axes: Vec<Axis>,
    /// Values of the parameters that are not swept.
    pub fixed: DotParams,
    pub channel: Option<ChannelSetting>,
    pub measures: Vec<Measure>,
    /// Free-form lines written as `#` comments above the CSV header.
    pub notes: Vec<String>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(Error::InvalidSweep(format!(
                "expected one or two axes, got {}",
                self.axes.len()
            )));
        }
        if self.axes.len() == 2 && self.axes[0].name == self.axes[1].name {
            return Err(Error::InvalidSweep(format!(
                "axis {} is given twice",
                self.axes[0].name
            )));
        }
        for axis in &self.axes {
            axis.validate()?;
        }
        if self.has_axis(AxisName::GammaT) && self.channel.is_none() {
            return Err(Error::InvalidSweep(
                "a gamma_t axis requires a channel".into(),
            ));
        }
        if let Some(ch) = &self.channel {
            if !ch.decay_rate.is_finite() || ch.decay_rate < 0.0 {
                return Err(Error::InvalidSweep(format!(
                    "decay rate must be finite and non-negative, got {}",
                    ch.decay_rate
                )));
            }
            if !ch.time.is_finite() || ch.time < 0.0 {
                return Err(Error::InvalidSweep(format!(
                    "channel time must be finite and non-negative, got {}",
                    ch.time
                )));
            }
        }
        if self.measures.is_empty() {
            return Err(Error::InvalidSweep("no measures requested".into()));
        }
        for (i, m) in self.measures.iter().enumerate() {
            if self.measures[..i].contains(m) {
                return Err(Error::InvalidSweep(format!("measure {m} is given twice")));
            }
        }
        let mut fixed = self.fixed;
        if self.has_axis(AxisName::T) {
            fixed.temperature = 1.0;
        }
        fixed
            .validate()
            .map_err(|e| Error::InvalidSweep(format!("fixed parameters: {e}")))
    }

    pub fn has_axis(&self, name: AxisName) -> bool {
        self.axes.iter().any(|a| a.name == name)
    }

    /// Column names: axes, then measures, then `discord_branch`.
    pub fn header(&self) -> Vec<String> {
        self.axes
            .iter()
            .map(|a| a.name.to_string())
            .chain(self.measures.iter().map(|m| m.to_string()))
            .chain(std::iter::once("discord_branch".to_string()))
            .collect()
    }

    fn coordinates(&self) -> Vec<Vec<f64>> {
        let mut coords: Vec<Vec<f64>> = vec![Vec::new()];
        for axis in &self.axes {
            let points = axis.points();
            coords = coords
                .into_iter()
                .flat_map(|prefix| {
                    points.iter().map(move |&p| {
                        let mut c = prefix.clone();
                        c.push(p);
                        c
                    })
                })
                .collect();
        }
        coords
    }

    fn evaluate(&self, coords: &[f64]) -> Result<SweepRow> {
        let mut params = self.fixed;
        let mut scaled_time = self
            .channel
            .map(|ch| ch.decay_rate * ch.time)
            .unwrap_or(0.0);
        for (axis, &value) in self.axes.iter().zip(coords) {
            match axis.name {
                AxisName::K0 => params.k0 = value,
                AxisName::R => params.r = value,
                AxisName::T => params.temperature = value,
                AxisName::GammaT => scaled_time = value,
            }
        }
        let mut state = thermal_state_closed(&params)?;
        if let Some(ch) = &self.channel {
            state = evolve_xstate(&state, ch.kind, gamma_from_scaled_time(scaled_time))?;
        }
        let report = full_report(&state);
        let values: Vec<f64> = self.measures.iter().map(|m| m.of(&report)).collect();
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidXState(format!(
                "non-finite measure value {bad}"
            )));
        }
        Ok(SweepRow {
            coords: coords.to_vec(),
            values,
            branch: report.discord_branch,
        })
    }
}

/// One evaluated point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    /// Axis values, in axis order.
    pub coords: Vec<f64>,
    /// Measure values, in the spec's measure order.
    pub values: Vec<f64>,
    pub branch: DiscordBranch,
}

fn describe(spec: &SweepSpec, coords: &[f64]) -> String {
    spec.axes
        .iter()
        .zip(coords)
        .map(|(a, v)| format!("{}={}", a.name, v))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Evaluates every grid point. A failing point aborts the sweep, reporting
/// its coordinates.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let coords = spec.coordinates();
    let results: Vec<Result<SweepRow>> = coords.par_iter().map(|c| spec.evaluate(c)).collect();
    results
        .into_iter()
        .zip(&coords)
        .map(|(r, c)| {
            r.map_err(|e| Error::SweepPoint {
                coords: describe(spec, c),
                source: Box::new(e),
            })
        })
        .collect()
}
