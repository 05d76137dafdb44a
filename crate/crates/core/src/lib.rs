//! Scattering of squeezed coherent light by a dispersive, absorbing
//! dielectric slab in vacuum.
//!
//! The crate covers the single-mode picture (quadrature variances of the
//! transmitted and reflected light as functions of slab thickness), the
//! continuum picture (Gaussian squeezed pulses, narrow-band output pulse
//! parameters and squeezing spectra) and the Poynting flux of the scattered
//! field. A command-line front end writes the data behind each figure as
//! CSV or JSON.

pub mod cli;
pub mod constants;
pub mod continuum;
pub mod error;
pub mod numerics;
pub mod poynting;
pub mod single_mode;
pub mod slab;

pub use error::{Error, Result};
pub use slab::{scatter_coefficients, Channel, DielectricModel, ScatterCoefficients, SlabSpec};
pub use single_mode::{QuadratureVariances, SqueezeParams};
