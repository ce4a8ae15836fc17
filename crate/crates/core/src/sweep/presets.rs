use std::fmt;
use std::str::FromStr;

use super::{Axis, AxisName, ChannelSetting, Measure, SweepSpec};
use crate::channels::ChannelKind;
use crate::error::{Error, Result};
use crate::model::DotParams;

/// Resolution of one-axis presets.
pub const LINE_STEPS: usize = 101;
/// Per-axis resolution of two-axis presets.
pub const GRID_STEPS: usize = 51;

/// Upper end of the `Γ t` axis in the channel presets.
const MAX_SCALED_TIME: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigurePreset {
    /// Discord and LQU against field strength `r`.
    Fig1,
    /// Discord and LQU against coupling `k0`.
    Fig2,
    /// Discord and LQU over the (T, r) plane.
    Fig3,
    /// `r` sweeps at several temperatures.
    Fig4,
    /// Dephasing over (Γt, k0).
    Fig5,
    /// Amplitude damping over (Γt, k0).
    Fig6,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 6] = [
        FigurePreset::Fig1,
        FigurePreset::Fig2,
        FigurePreset::Fig3,
        FigurePreset::Fig4,
        FigurePreset::Fig5,
        FigurePreset::Fig6,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigurePreset::Fig1 => "fig1",
            FigurePreset::Fig2 => "fig2",
            FigurePreset::Fig3 => "fig3",
            FigurePreset::Fig4 => "fig4",
            FigurePreset::Fig5 => "fig5",
            FigurePreset::Fig6 => "fig6",
        }
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FigurePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigurePreset::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::InvalidSweep(format!("unknown figure `{s}` (fig1..fig6)")))
    }
}

fn params(k0: f64, r: f64, temperature: f64) -> DotParams {
    DotParams { k0, r, temperature }
}

fn channel(kind: ChannelKind) -> Option<ChannelSetting> {
    Some(ChannelSetting {
        kind,
        decay_rate: 1.0,
        time: 0.0,
    })
}

pub fn figure_preset(id: FigurePreset) -> SweepSpec {
    let measures = vec![Measure::Discord, Measure::Lqu];
    let mut notes = vec![format!("preset: {id}")];
    let (axes, fixed, channel) = match id {
        FigurePreset::Fig1 => {
            notes.push("fixed: k0=10 T=0.4 (implementer default)".into());
            (
                vec![Axis::range(AxisName::R, 0.0, 5.0, LINE_STEPS)],
                params(10.0, 0.0, 0.4),
                None,
            )
        }
        FigurePreset::Fig2 => {
            notes.push("fixed: r=1 T=0.4 (implementer default)".into());
            (
                vec![Axis::range(AxisName::K0, -10.0, 10.0, LINE_STEPS)],
                params(0.0, 1.0, 0.4),
                None,
            )
        }
        FigurePreset::Fig3 => {
            notes.push("fixed: k0=10".into());
            (
                vec![
                    Axis::range(AxisName::T, 0.1, 4.0, GRID_STEPS),
                    Axis::range(AxisName::R, 0.0, 5.0, GRID_STEPS),
                ],
                params(10.0, 0.0, 1.0),
                None,
            )
        }
        FigurePreset::Fig4 => {
            notes.push("fixed: k0=10".into());
            notes.push(
                "T values 0.4, 1, 2 are implementer defaults; T=4 is the high-temperature case"
                    .into(),
            );
            (
                vec![
                    Axis::list(AxisName::T, vec![0.4, 1.0, 2.0, 4.0]),
                    Axis::range(AxisName::R, 0.0, 5.0, LINE_STEPS),
                ],
                params(10.0, 0.0, 1.0),
                None,
            )
        }
        FigurePreset::Fig5 | FigurePreset::Fig6 => {
            let kind = if id == FigurePreset::Fig5 {
                ChannelKind::Dephasing
            } else {
                ChannelKind::AmplitudeDamping
            };
            notes.push(format!("fixed: r=1 T=0.4 channel={kind}"));
            notes.push(format!(
                "gamma_t is the dimensionless decay rate times time; range [0, {MAX_SCALED_TIME}] is an implementer default"
            ));
            (
                vec![
                    Axis::range(AxisName::GammaT, 0.0, MAX_SCALED_TIME, GRID_STEPS),
                    Axis::range(AxisName::K0, -10.0, 10.0, GRID_STEPS),
                ],
                params(0.0, 1.0, 0.4),
                channel(kind),
            )
        }
    };
    SweepSpec {
        axes,
        fixed,
        channel,
        measures,
        notes,
    }
}
