//! Quantum discord and local quantum uncertainty of the thermal state of a
//! two-electron vertical quantum dot, and their evolution under local
//! dephasing and amplitude-damping noise.
//!
//! ```
//! use qdot::{full_report, thermal_state_closed, DotParams};
//!
//! let state = thermal_state_closed(&DotParams::new(10.0, 1.0, 0.4)?)?;
//! let report = full_report(&state);
//! assert!(report.discord > 0.9 && report.lqu > 0.8);
//! # Ok::<(), qdot::Error>(())
//! ```

pub mod channels;
pub mod correlations;
pub mod error;
pub mod model;
pub mod qmath;
pub mod sweep;

pub use channels::{ChannelKind, ChannelSpec};
pub use correlations::{
    discord_bruteforce, discord_closed, full_report, lqu_closed, lqu_generic, mutual_information,
    CorrelationReport, DiscordBranch, MeasurementDirection,
};
pub use error::{Error, Result};
pub use model::{thermal_state_closed, thermal_state_oracle, DotParams, SymXState};
pub use qmath::{Subsystem, TwoQubitState};
