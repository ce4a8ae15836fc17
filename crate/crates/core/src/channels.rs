//! Local dephasing and amplitude-damping noise acting identically on both
//! qubits.
//!
//! A single-qubit channel with Kraus operators `{E_k}` acts on the pair
//! through the four products `E_μ ⊗ E_ν`. The damping strength is
//! `γ = 1 - exp(-Γ t)`.
//!
//! Amplitude damping relaxes `|0> -> |1>` (`F2 ∝ (σx - iσy)/2 = |1><0|`), so
//! the fixed point of the two-qubit channel is `|11><11|`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::SymXState;
use crate::qmath::{apply_kraus, kron, paulis, Mat2, Mat4, TwoQubitState, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    Dephasing,
    AmplitudeDamping,
}

impl ChannelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ChannelKind::Dephasing => "dephasing",
            ChannelKind::AmplitudeDamping => "amplitude",
        }
    }
}

impl std::fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dephasing" => Ok(ChannelKind::Dephasing),
            "amplitude" | "amplitude_damping" | "amplitude-damping" => {
                Ok(ChannelKind::AmplitudeDamping)
            }
            other => Err(Error::InvalidChannel(format!(
                "unknown channel `{other}` (expected dephasing or amplitude)"
            ))),
        }
    }
}

/// `γ = 1 - exp(-x)` for the dimensionless product `x = Γ t`.
pub fn gamma_from_scaled_time(scaled_time: f64) -> f64 {
    -(-scaled_time).exp_m1()
}

/// A channel applied for a given time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelSpec {
    kind: ChannelKind,
    decay_rate: f64,
    time: f64,
}

impl ChannelSpec {
    pub fn new(kind: ChannelKind, decay_rate: f64, time: f64) -> Result<Self> {
        for (name, value) in [("decay rate", decay_rate), ("time", time)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidChannel(format!(
                    "{name} must be finite and non-negative, got {value}"
                )));
            }
        }
        Ok(Self {
            kind,
            decay_rate,
            time,
        })
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn decay_rate(&self) -> f64 {
        self.decay_rate
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// Damping strength shared by both qubits.
    pub fn gamma(&self) -> f64 {
        gamma_from_scaled_time(self.decay_rate * self.time)
    }
}

fn check_gamma(gamma: f64) -> Result<()> {
    if (0.0..=1.0).contains(&gamma) {
        Ok(())
    } else {
        Err(Error::GammaOutOfRange(gamma))
    }
}

fn real_diag(a: f64, b: f64) -> Mat2 {
    Mat2::new(
        C64::new(a, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(b, 0.0),
    )
}

/// `E0 = diag(1, sqrt(1-γ))`, `E1 = diag(0, sqrt(γ))`.
pub fn dephasing_kraus(gamma: f64) -> Result<[Mat2; 2]> {
    check_gamma(gamma)?;
    Ok([
        real_diag(1.0, (1.0 - gamma).sqrt()),
        real_diag(0.0, gamma.sqrt()),
    ])
}

/// `F1 = diag(sqrt(1-γ), 1)`, `F2 = (sqrt(γ)/2)(σx - iσy)`.
pub fn amplitude_damping_kraus(gamma: f64) -> Result<[Mat2; 2]> {
    check_gamma(gamma)?;
    let [sx, sy, _] = paulis();
    let lowering = (sx - sy * C64::new(0.0, 1.0)).scale(0.5);
    Ok([
        real_diag((1.0 - gamma).sqrt(), 1.0),
        lowering.scale(gamma.sqrt()),
    ])
}

pub fn single_qubit_kraus(kind: ChannelKind, gamma: f64) -> Result<[Mat2; 2]> {
    match kind {
        ChannelKind::Dephasing => dephasing_kraus(gamma),
        ChannelKind::AmplitudeDamping => amplitude_damping_kraus(gamma),
    }
}

/// The four operators `E_μ ⊗ E_ν`.
pub fn two_qubit_kraus(kind: ChannelKind, gamma: f64) -> Result<Vec<Mat4>> {
    let ops = single_qubit_kraus(kind, gamma)?;
    Ok(ops
        .iter()
        .flat_map(|a| ops.iter().map(move |b| kron(a, b)))
        .collect())
}

/// Dense evolution by explicit Kraus application.
pub fn evolve_with_gamma(
    rho: &TwoQubitState,
    kind: ChannelKind,
    gamma: f64,
) -> Result<TwoQubitState> {
    apply_kraus(rho, &two_qubit_kraus(kind, gamma)?)
}

pub fn evolve(rho: &TwoQubitState, spec: &ChannelSpec) -> Result<TwoQubitState> {
    evolve_with_gamma(rho, spec.kind(), spec.gamma())
}

/// Dephasing on the X parameterization: only the coherence decays,
/// `y -> y (1 - γ)`.
pub fn evolve_xstate_dephasing(state: &SymXState, gamma: f64) -> Result<SymXState> {
    check_gamma(gamma)?;
    state.with_y(state.y() * (1.0 - gamma))
}

/// Amplitude damping on the X parameterization, derived from the Kraus
/// operators. The input is normalized first; the output has `Z = 1`.
///
/// ```text
/// u' = u (1-γ)^2
/// w' = w (1-γ) + u γ (1-γ)
/// y' = y (1-γ)
/// v' = v + 2 w γ + u γ^2
/// ```
pub fn evolve_xstate_amplitude(state: &SymXState, gamma: f64) -> Result<SymXState> {
    check_gamma(gamma)?;
    let (u, w, y, v) = state.normalized_weights();
    let keep = 1.0 - gamma;
    SymXState::new(
        u * keep * keep,
        w * keep + u * gamma * keep,
        y * keep,
        v + 2.0 * w * gamma + u * gamma * gamma,
    )
}

pub fn evolve_xstate(state: &SymXState, kind: ChannelKind, gamma: f64) -> Result<SymXState> {
    match kind {
        ChannelKind::Dephasing => evolve_xstate_dephasing(state, gamma),
        ChannelKind::AmplitudeDamping => evolve_xstate_amplitude(state, gamma),
    }
}
