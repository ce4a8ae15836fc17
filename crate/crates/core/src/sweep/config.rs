//! Sweep descriptions from flat `key = value` text or command-line options.

use super::{Axis, AxisName, ChannelSetting, Measure, SweepSpec};
use crate::channels::ChannelKind;
use crate::error::{Error, Result};
use crate::model::DotParams;

const DEFAULT_K0: f64 = 10.0;
const DEFAULT_R: f64 = 1.0;
const DEFAULT_T: f64 = 0.4;

/// Splits UTF-8 text into `(key, value)` pairs. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(n, line)| {
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidSweep(format!("config line {n}: expected `key = value`"))
            })?;
            Ok((key.trim().to_string(), value.trim().to_string()))
        })
        .collect()
}

/// Loosely typed sweep options, as given on the command line or in a config
/// file. [`SweepOptions::build`] turns them into a validated [`SweepSpec`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepOptions {
    /// Axis descriptions: `name=start:stop[:steps]` or `name=v1,v2,...`.
    pub axes: Vec<String>,
    pub k0: Option<f64>,
    pub r: Option<f64>,
    pub temperature: Option<f64>,
    pub channel: Option<String>,
    pub decay_rate: Option<f64>,
    /// Adds a `gamma_t` axis over `[0, decay_rate * time_max]`.
    pub time_max: Option<f64>,
    /// Fixed evolution time when `gamma_t` is not swept.
    pub time: Option<f64>,
    pub steps: Option<usize>,
    pub measures: Option<String>,
    pub out: Option<String>,
    pub format: Option<String>,
}

fn number(key: &str, value: &str) -> Result<f64> {
    value
        .parse()
        .map_err(|_| Error::InvalidSweep(format!("`{key}`: `{value}` is not a number")))
}

impl SweepOptions {
    pub fn from_config(text: &str) -> Result<Self> {
        let mut opts = Self::default();
        for (key, value) in parse_key_values(text)? {
            match key.as_str() {
                "axis" => opts.axes.push(value),
                "k0" => opts.k0 = Some(number(&key, &value)?),
                "r" => opts.r = Some(number(&key, &value)?),
                "T" => opts.temperature = Some(number(&key, &value)?),
                "channel" => opts.channel = Some(value),
                "decay_rate" | "decay-rate" => opts.decay_rate = Some(number(&key, &value)?),
                "time_max" | "time-max" => opts.time_max = Some(number(&key, &value)?),
                "time" => opts.time = Some(number(&key, &value)?),
                "steps" => {
                    opts.steps = Some(value.parse().map_err(|_| {
                        Error::InvalidSweep(format!("`steps`: `{value}` is not a count"))
                    })?)
                }
                "measures" => opts.measures = Some(value),
                "out" => opts.out = Some(value),
                "format" => opts.format = Some(value),
                other => return Err(Error::InvalidSweep(format!("unknown config key `{other}`"))),
            }
        }
        Ok(opts)
    }

    /// Options in `over` take precedence; a non-empty axis list replaces the
    /// base one.
    pub fn overlay(self, over: SweepOptions) -> SweepOptions {
        SweepOptions {
            axes: if over.axes.is_empty() {
                self.axes
            } else {
                over.axes
            },
            k0: over.k0.or(self.k0),
            r: over.r.or(self.r),
            temperature: over.temperature.or(self.temperature),
            channel: over.channel.or(self.channel),
            decay_rate: over.decay_rate.or(self.decay_rate),
            time_max: over.time_max.or(self.time_max),
            time: over.time.or(self.time),
            steps: over.steps.or(self.steps),
            measures: over.measures.or(self.measures),
            out: over.out.or(self.out),
            format: over.format.or(self.format),
        }
    }

    pub fn build(&self) -> Result<SweepSpec> {
        let channel = self
            .channel
            .as_deref()
            .map(|kind| -> Result<ChannelSetting> {
                Ok(ChannelSetting {
                    kind: kind
                        .parse::<ChannelKind>()
                        .map_err(|e| Error::InvalidSweep(e.to_string()))?,
                    decay_rate: self.decay_rate.unwrap_or(1.0),
                    time: self.time.unwrap_or(0.0),
                })
            })
            .transpose()?;

        let mut parsed: Vec<(AxisName, AxisSource)> = self
            .axes
            .iter()
            .map(|s| parse_axis(s))
            .collect::<Result<_>>()?;
        if let Some(time_max) = self.time_max {
            let ch = channel
                .ok_or_else(|| Error::InvalidSweep("--time-max requires --channel".into()))?;
            if !parsed.iter().any(|(n, _)| *n == AxisName::GammaT) {
                parsed.insert(
                    0,
                    (
                        AxisName::GammaT,
                        AxisSource::Range(0.0, ch.decay_rate * time_max, None),
                    ),
                );
            }
        }
        let default_steps = self
            .steps
            .unwrap_or(if parsed.len() <= 1 { 101 } else { 51 });
        let axes = parsed
            .into_iter()
            .map(|(name, source)| match source {
                AxisSource::Range(start, stop, steps) => {
                    Axis::range(name, start, stop, steps.unwrap_or(default_steps))
                }
                AxisSource::List(values) => Axis::list(name, values),
            })
            .collect();

        let measures = Measure::parse_list(self.measures.as_deref().unwrap_or("discord,lqu"))?;
        let spec = SweepSpec {
            axes,
            fixed: DotParams {
                k0: self.k0.unwrap_or(DEFAULT_K0),
                r: self.r.unwrap_or(DEFAULT_R),
                temperature: self.temperature.unwrap_or(DEFAULT_T),
            },
            channel,
            measures,
            notes: Vec::new(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

enum AxisSource {
    Range(f64, f64, Option<usize>),
    List(Vec<f64>),
}

fn parse_axis(text: &str) -> Result<(AxisName, AxisSource)> {
    let (name, body) = text.split_once('=').ok_or_else(|| {
        Error::InvalidSweep(format!(
            "axis `{text}`: expected name=start:stop[:steps] or name=v1,v2,..."
        ))
    })?;
    let name: AxisName = name.trim().parse()?;
    let body = body.trim();
    if body.contains(':') {
        let parts: Vec<&str> = body.split(':').map(str::trim).collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Error::InvalidSweep(format!(
                "axis `{text}`: expected start:stop[:steps]"
            )));
        }
        let steps = parts
            .get(2)
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidSweep(format!("axis `{text}`: bad step count")))
            })
            .transpose()?;
        Ok((
            name,
            AxisSource::Range(number(text, parts[0])?, number(text, parts[1])?, steps),
        ))
    } else {
        let values = body
            .split(',')
            .map(|v| number(text, v.trim()))
            .collect::<Result<_>>()?;
        Ok((name, AxisSource::List(values)))
    }
}
