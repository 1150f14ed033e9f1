//! Support library for the `trinom` binary: complex literal parsing,
//! tolerance configuration, and region rasterization.

pub mod config;
pub mod literal;
pub mod raster;
