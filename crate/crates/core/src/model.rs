//! The two-electron vertical quantum dot: exchange Hamiltonian with a Zeeman
//! term, and its Gibbs state.
//!
//! Energies and temperatures share one unit (`ħ = k_B = 1`). The Hamiltonian
//! is
//!
//! ```text
//! H = (k0/4) S1·S2 - r S^z_total
//!   = (k0/16)(XX + YY + ZZ) - (r/2)(ZI + IZ)
//! ```
//!
//! with levels `k0/16 - r` (|00>), `k0/16` (triplet m = 0), `k0/16 + r`
//! (|11>) and `-3 k0/16` (singlet).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qmath::{identity2, kron, paulis, spectral_decompose, Mat4, TwoQubitState, C64};

/// Physical parameters of the dot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DotParams {
    /// Bare exchange coupling at zero field.
    pub k0: f64,
    /// Zeeman energy, gyromagnetic ratio times field.
    pub r: f64,
    /// Temperature, strictly positive.
    #[serde(rename = "T")]
    pub temperature: f64,
}

impl DotParams {
    pub fn new(k0: f64, r: f64, temperature: f64) -> Result<Self> {
        let params = Self { k0, r, temperature };
        params.validate()?;
        Ok(params)
    }

    /// Builds the coupling from the level spacing and exchange energy,
    /// `k0 = delta - 2 E_s`.
    pub fn from_level_spacing(
        level_spacing: f64,
        exchange_energy: f64,
        r: f64,
        temperature: f64,
    ) -> Result<Self> {
        Self::new(level_spacing - 2.0 * exchange_energy, r, temperature)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("k0", self.k0), ("r", self.r), ("T", self.temperature)] {
            if !value.is_finite() {
                return Err(Error::NonFiniteParameter { name, value });
            }
        }
        if self.temperature <= 0.0 {
            return Err(Error::NonPositiveTemperature(self.temperature));
        }
        Ok(())
    }

    /// Same dot with the field reversed.
    pub fn with_reversed_field(self) -> Self {
        Self { r: -self.r, ..self }
    }
}

/// The four energy levels of the Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Levels {
    pub up_up: f64,
    pub triplet_zero: f64,
    pub down_down: f64,
    pub singlet: f64,
}

impl Levels {
    pub fn of(k0: f64, r: f64) -> Self {
        Self {
            up_up: k0 / 16.0 - r,
            triplet_zero: k0 / 16.0,
            down_down: k0 / 16.0 + r,
            singlet: -3.0 * k0 / 16.0,
        }
    }

    pub fn ground(&self) -> f64 {
        self.up_up
            .min(self.triplet_zero)
            .min(self.down_down)
            .min(self.singlet)
    }
}

/// The Hamiltonian as a dense matrix, built from Pauli products.
pub fn hamiltonian(params: &DotParams) -> Mat4 {
    let [x, y, z] = paulis();
    let id = identity2();
    let exchange = kron(&x, &x) + kron(&y, &y) + kron(&z, &z);
    let zeeman = kron(&z, &id) + kron(&id, &z);
    exchange.scale(params.k0 / 16.0) - zeeman.scale(params.r / 2.0)
}

/// Symmetric X state
///
/// ```text
///          | u 0 0 0 |
/// rho = 1/Z| 0 w y 0 |,   Z = u + 2w + v
///          | 0 y w 0 |
///          | 0 0 0 v |
/// ```
///
/// Weights are stored unnormalized. Thermal states have all of `u, v, w`
/// strictly positive; channel-evolved states may reach zero weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymXState {
    u: f64,
    w: f64,
    y: f64,
    v: f64,
    z: f64,
}

impl SymXState {
    pub fn new(u: f64, w: f64, y: f64, v: f64) -> Result<Self> {
        for (name, value) in [("u", u), ("w", w), ("y", y), ("v", v)] {
            if !value.is_finite() {
                return Err(Error::InvalidXState(format!(
                    "{name} = {value} is not finite"
                )));
            }
        }
        if u < 0.0 || v < 0.0 || w < 0.0 {
            return Err(Error::InvalidXState(format!(
                "negative weight (u = {u}, w = {w}, v = {v})"
            )));
        }
        let z = u + 2.0 * w + v;
        if z <= 0.0 {
            return Err(Error::InvalidXState("partition function is zero".into()));
        }
        if w < y.abs() - 1e-12 * z {
            return Err(Error::InvalidXState(format!(
                "middle block is not positive (w = {w}, |y| = {})",
                y.abs()
            )));
        }
        Ok(Self { u, w, y, v, z })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    /// Partition function `u + 2w + v`.
    pub fn z(&self) -> f64 {
        self.z
    }

    /// Weights divided by `Z`, in the order `(u, w, y, v)`.
    pub fn normalized_weights(&self) -> (f64, f64, f64, f64) {
        (
            self.u / self.z,
            self.w / self.z,
            self.y / self.z,
            self.v / self.z,
        )
    }

    /// Same state rescaled to `Z = 1`.
    pub fn normalized(&self) -> Self {
        let (u, w, y, v) = self.normalized_weights();
        Self {
            u,
            w,
            y,
            v,
            z: u + 2.0 * w + v,
        }
    }

    /// Swaps the `|00>` and `|11>` weights, which is what reversing the field
    /// does to a thermal state.
    pub fn with_u_v_swapped(&self) -> Self {
        Self {
            u: self.v,
            v: self.u,
            ..*self
        }
    }

    pub fn with_y(&self, y: f64) -> Result<Self> {
        Self::new(self.u, self.w, y, self.v)
    }

    /// The X-state as a dense matrix (normalized).
    pub fn to_matrix(&self) -> Mat4 {
        let (u, w, y, v) = self.normalized_weights();
        let mut m = Mat4::zeros();
        m[(0, 0)] = C64::new(u, 0.0);
        m[(1, 1)] = C64::new(w, 0.0);
        m[(2, 2)] = C64::new(w, 0.0);
        m[(1, 2)] = C64::new(y, 0.0);
        m[(2, 1)] = C64::new(y, 0.0);
        m[(3, 3)] = C64::new(v, 0.0);
        m
    }

    pub fn to_dense(&self) -> TwoQubitState {
        TwoQubitState::new(self.to_matrix()).expect("a valid X state is a valid density matrix")
    }

    /// Recognizes a dense state of the symmetric X form (to within `tol`
    /// elementwise) and returns it with `Z = 1`.
    pub fn from_dense(rho: &TwoQubitState, tol: f64) -> Result<Self> {
        let m = rho.elements();
        let off_pattern = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)];
        for (i, j) in off_pattern {
            if m[(i, j)].norm() > tol {
                return Err(Error::InvalidXState(format!(
                    "element ({i}, {j}) = {} is not zero",
                    m[(i, j)]
                )));
            }
        }
        if m[(1, 2)].im.abs() > tol {
            return Err(Error::InvalidXState("coherence y is not real".into()));
        }
        if (m[(1, 1)].re - m[(2, 2)].re).abs() > tol {
            return Err(Error::InvalidXState(
                "middle diagonal entries differ".into(),
            ));
        }
        let w = 0.5 * (m[(1, 1)].re + m[(2, 2)].re);
        Self::new(
            m[(0, 0)].re.max(0.0),
            w,
            m[(1, 2)].re,
            m[(3, 3)].re.max(0.0),
        )
    }
}

/// Gibbs state from the closed-form Boltzmann weights.
///
/// Every exponent is shifted by the ground energy, so one weight is exactly 1
/// and nothing overflows at low temperature.
pub fn thermal_state_closed(params: &DotParams) -> Result<SymXState> {
    params.validate()?;
    let t = params.temperature;
    let levels = Levels::of(params.k0, params.r);
    let ground = levels.ground();
    let boltzmann = |energy: f64| (-(energy - ground) / t).exp();
    let u = boltzmann(levels.up_up);
    let v = boltzmann(levels.down_down);
    let triplet = boltzmann(levels.triplet_zero);
    let singlet = boltzmann(levels.singlet);
    SymXState::new(u, 0.5 * (triplet + singlet), 0.5 * (triplet - singlet), v)
}

/// Gibbs state `exp(-H/T) / Tr exp(-H/T)` from a numerical diagonalization of
/// the Hamiltonian. Used to check [`thermal_state_closed`].
pub fn thermal_state_oracle(params: &DotParams) -> Result<TwoQubitState> {
    params.validate()?;
    let spectrum = spectral_decompose(&hamiltonian(params))?;
    let ground = spectrum.eigenvalues()[3];
    let t = params.temperature;
    let unnormalized = spectrum.map(|e| (-(e - ground) / t).exp());
    let partition = unnormalized.trace().re;
    TwoQubitState::new(unnormalized.unscale(partition))
}
