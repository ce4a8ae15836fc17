//! Compiles and runs the code blocks of the guide as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/thermal_state.md")]
pub mod thermal_state {}

#[doc = include_str!("../../../book/src/discord.md")]
pub mod discord {}

#[doc = include_str!("../../../book/src/lqu.md")]
pub mod lqu {}

#[doc = include_str!("../../../book/src/channels.md")]
pub mod channels {}

#[doc = include_str!("../../../book/src/sweeps.md")]
pub mod sweeps {}
