//! Physical constants (CODATA 2018, SI units).

/// Speed of light in vacuum, m/s (exact).
pub const C: f64 = 299_792_458.0;

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K (exact).
pub const K_B: f64 = 1.380_649e-23;

/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;

/// Angular frequency of light with vacuum wavelength `wavelength` (m).
pub fn omega_from_wavelength(wavelength: f64) -> f64 {
    2.0 * std::f64::consts::PI * C / wavelength
}

/// Vacuum wavelength (m) of light with angular frequency `omega` (rad/s).
pub fn wavelength_from_omega(omega: f64) -> f64 {
    2.0 * std::f64::consts::PI * C / omega
}
