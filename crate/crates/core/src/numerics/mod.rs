//! Shared numerical kernels: bracketed root finding, grid-scan extremum
//! search, finite-difference derivatives and fixed-order quadrature.
//!
//! These routines double as independent oracles for the closed-form results
//! elsewhere in the crate, so they deliberately favour robustness (bisection,
//! golden section, fixed-order Gauss-Legendre) over speed.

mod diff;
mod extrema;
mod quadrature;
mod roots;

pub use diff::{finite_diff, DerivativeOrder};
pub use extrema::{golden_section_min, grid_scan_extrema, ExtremumKind};
pub use quadrature::{simpson, GaussLegendre};
pub use roots::{find_root, Bracket};
