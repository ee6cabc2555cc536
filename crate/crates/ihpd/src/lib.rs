//! Simulation, file formats and command-line support for `ihpd-core`.

pub mod formats;
pub mod sim;
