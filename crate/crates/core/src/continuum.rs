//! Continuum-mode squeezed pulses: power spectra, the narrow-band
//! description of the scattered pulse and the continuum quadrature variance.
//!
//! Spectra carry the prefactor `hbar omega / (2 eps0 c sigma)`; divide by
//! [`spectral_prefactor`] at `omega_c` for area-independent numbers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{C, EPSILON_0, HBAR};
use crate::error::{Error, Result};
use crate::numerics::GaussLegendre;
use crate::slab::{channel_amplitude, noise_moment, propagation_phase, scatter_coefficients, thermal_occupation, Channel, SlabSpec};

/// Shape of the squeeze exponent `rho(omega)` across the pulse band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SqueezeProfile {
    /// `rho_I exp[-L^2 (omega - omega_c)^2 / 4c^2]`.
    #[default]
    Gaussian,
    /// Second-order expansion `rho_I [1 - L^2 (omega - omega_c)^2 / 4c^2]`,
    /// clamped at zero.
    Parabolic,
}

/// Gaussian squeezed pulse. `alpha0 = 0` selects squeezed vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianPulseSpec {
    pub omega_c: f64,
    /// Root-mean-square spatial length `L_I` (m).
    pub length: f64,
    pub rho_i: f64,
    /// Coherent amplitude at the carrier; its argument is the coherent phase.
    pub alpha0: Complex64,
    /// Squeeze phase.
    pub theta: f64,
    #[serde(default)]
    pub profile: SqueezeProfile,
}

impl GaussianPulseSpec {
    /// Squeezed-vacuum pulse with a Gaussian squeeze profile.
    pub fn new(omega_c: f64, length: f64, rho_i: f64) -> Result<Self> {
        let p = GaussianPulseSpec {
            omega_c,
            length,
            rho_i,
            alpha0: Complex64::new(0.0, 0.0),
            theta: 0.0,
            profile: SqueezeProfile::Gaussian,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_coherent(self, alpha0: Complex64) -> Self {
        GaussianPulseSpec { alpha0, ..self }
    }

    pub fn with_theta(self, theta: f64) -> Self {
        GaussianPulseSpec { theta, ..self }
    }

    pub fn with_profile(self, profile: SqueezeProfile) -> Self {
        GaussianPulseSpec { profile, ..self }
    }

    pub fn with_rho(self, rho_i: f64) -> Self {
        GaussianPulseSpec { rho_i, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_c > 0.0 && self.omega_c.is_finite()) {
            return Err(Error::InvalidParameter { name: "omega_c", reason: format!("must be > 0, got {}", self.omega_c) });
        }
        if !(self.length > 0.0 && self.length.is_finite()) {
            return Err(Error::InvalidParameter { name: "length", reason: format!("must be > 0, got {}", self.length) });
        }
        if !(self.rho_i >= 0.0 && self.rho_i.is_finite()) {
            return Err(Error::InvalidParameter { name: "rho_i", reason: format!("must be >= 0, got {}", self.rho_i) });
        }
        if self.bandwidth() >= self.omega_c / 20.0 {
            return Err(Error::InvalidParameter {
                name: "length",
                reason: format!("pulse too short: c/L = {:e} rad/s is not below omega_c/20", self.bandwidth()),
            });
        }
        Ok(())
    }

    /// `c / L_I`.
    pub fn bandwidth(&self) -> f64 {
        C / self.length
    }

    pub fn is_squeezed_vacuum(&self) -> bool {
        self.alpha0 == Complex64::new(0.0, 0.0)
    }

    /// Coherent phase `phi`.
    pub fn phi(&self) -> f64 {
        self.alpha0.arg()
    }

    /// `exp[-L^2 (omega - omega_c)^2 / 4c^2]`.
    pub fn envelope(&self, omega: f64) -> f64 {
        let d = (omega - self.omega_c) / self.bandwidth();
        (-0.25 * d * d).exp()
    }

    /// Coherent spectral amplitude `alpha(omega)`.
    pub fn alpha(&self, omega: f64) -> Complex64 {
        self.alpha0 * self.envelope(omega)
    }

    /// Squeeze exponent `rho_I(omega)` for the pulse's profile.
    pub fn rho(&self, omega: f64) -> f64 {
        match self.profile {
            SqueezeProfile::Gaussian => self.rho_i * self.envelope(omega),
            SqueezeProfile::Parabolic => incident_squeeze_profile(self, omega),
        }
    }

    /// Integration band `omega_c +- 8 c / L_I`.
    pub fn band(&self) -> (f64, f64) {
        let half = 8.0 * self.bandwidth();
        (self.omega_c - half, self.omega_c + half)
    }
}

/// `hbar omega / (2 eps0 c sigma)`.
pub fn spectral_prefactor(omega: f64, sigma: f64) -> f64 {
    HBAR * omega / (2.0 * EPSILON_0 * C * sigma)
}

/// Incident power spectrum. For squeezed vacuum this is the spectrum of the
/// squeezed quadrature, `prefactor * exp(-2 rho(omega))`.
pub fn incident_spectrum(pulse: &GaussianPulseSpec, sigma: f64, omega: f64) -> f64 {
    let pref = spectral_prefactor(omega, sigma);
    let rho = pulse.rho(omega);
    if pulse.is_squeezed_vacuum() {
        return pref * (-2.0 * rho).exp();
    }
    let a2 = pulse.alpha(omega).norm_sqr();
    let angle = 2.0 * (pulse.theta - pulse.phi());
    pref * a2 * ((2.0 * rho).cosh() - (2.0 * rho).sinh() * angle.cos())
}

/// Scattered spectrum `|C|^2 S_I + prefactor * nbar * A`.
pub fn scattered_spectrum_exact(slab: &SlabSpec, pulse: &GaussianPulseSpec, omega: f64, channel: Channel) -> Result<f64> {
    let coeffs = scatter_coefficients(slab, omega)?;
    let c2 = coeffs.magnitude(channel).powi(2);
    let thermal = spectral_prefactor(omega, slab.sigma) * thermal_occupation(omega, slab.temperature) * coeffs.absorptance;
    Ok(c2 * incident_spectrum(pulse, slab.sigma, omega) + thermal)
}

/// Expansion `C(omega) = C(omega_c) exp[2i gamma l d - 8 beta^2 l^2 d^2]`,
/// `d = omega - omega_c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NarrowbandCoefficients {
    pub channel: Channel,
    pub c_at_center: Complex64,
    /// `gamma`, s/m.
    pub gamma: Complex64,
    /// `beta^2`, s^2/m^2.
    pub beta_sq: Complex64,
}

/// Narrow-band coefficients at the carrier, with `k' = n / c`.
///
/// Only the constant-index model is accepted.
pub fn narrowband_coefficients(slab: &SlabSpec, omega_c: f64, channel: Channel) -> Result<NarrowbandCoefficients> {
    let n = slab
        .model
        .constant_index()
        .ok_or_else(|| Error::Domain("narrow-band coefficients need the constant-index model".into()))?;
    let l = slab.half_thickness;
    let c_at_center = channel_amplitude(slab, omega_c, channel)?;
    let e = propagation_phase(n, omega_c, 4.0 * l);
    let np1 = n + 1.0;
    let nm1 = n - 1.0;
    let den = np1 * np1 - nm1 * nm1 * e;
    let kp = n / C;
    let gamma_t = kp - 1.0 / C + 2.0 * kp * nm1 * nm1 * e / den;
    let beta_sq_t = kp * kp * (n * n - 1.0).powi(2) * e / (den * den);
    let (gamma, beta_sq) = match channel {
        Channel::Transmitted => (gamma_t, beta_sq_t),
        Channel::Reflected => {
            let em1 = e - 1.0;
            if em1.norm() < 1e-14 {
                return Err(Error::Singularity { omega: omega_c, l });
            }
            (gamma_t + kp * (e + 1.0) / em1, beta_sq_t - kp * kp * e / (em1 * em1))
        }
    };
    Ok(NarrowbandCoefficients { channel, c_at_center, gamma, beta_sq })
}

/// Thresholds deciding when the narrow-band output description is trusted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NarrowbandThresholds {
    /// Required ratio `L_I / (2 l eta_c)`.
    pub length_factor: f64,
    /// Smallest accepted `|a| / (rho_I L_I^2 / 4c^2)` for the shift denominator `a`.
    pub denominator_rel: f64,
}

impl Default for NarrowbandThresholds {
    fn default() -> Self {
        NarrowbandThresholds { length_factor: 10.0, denominator_rel: 1e-3 }
    }
}

/// Narrow-band descriptors of a scattered squeezed-vacuum pulse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseParams {
    pub channel: Channel,
    /// `Delta omega`; the output peak sits at `omega_c - delta_omega`.
    pub delta_omega: f64,
    /// `L_Gamma^2`, m^2.
    pub length_sq: f64,
    pub rho_gamma: f64,
    /// Effective squeeze exponent `rho'`.
    pub rho_eff: f64,
    pub valid: bool,
}

impl PulseParams {
    fn invalid(channel: Channel) -> Self {
        PulseParams {
            channel,
            delta_omega: f64::NAN,
            length_sq: f64::NAN,
            rho_gamma: f64::NAN,
            rho_eff: f64::NAN,
            valid: false,
        }
    }
}

pub fn output_pulse_params(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<PulseParams> {
    output_pulse_params_with(slab, pulse, channel, &NarrowbandThresholds::default())
}

/// Output frequency shift, length and squeeze exponents. Breakdown of the
/// narrow-band picture is reported through `valid`, not as an error; an
/// exactly singular reflected expansion yields NaN fields.
pub fn output_pulse_params_with(
    slab: &SlabSpec,
    pulse: &GaussianPulseSpec,
    channel: Channel,
    thresholds: &NarrowbandThresholds,
) -> Result<PulseParams> {
    let nb = match narrowband_coefficients(slab, pulse.omega_c, channel) {
        Ok(nb) => nb,
        Err(Error::Singularity { .. }) => {
            log::warn!("narrow-band expansion singular for channel {channel}");
            return Ok(PulseParams::invalid(channel));
        }
        Err(e) => return Err(e),
    };
    let l = slab.half_thickness;
    let eta_c = nb_eta(slab);
    let incident = pulse.rho_i * pulse.length * pulse.length / (4.0 * C * C);
    let a = incident - 8.0 * nb.beta_sq.re * l * l;
    let im_gl = nb.gamma.im * l;
    let delta_omega = -im_gl / a;
    let ln_c = nb.c_at_center.norm().ln();
    let rho_gamma = (pulse.rho_i - ln_c) - im_gl * delta_omega;
    // equal to -4c^2 Im(gamma) l / (rho_gamma delta_omega), but finite at zero shift
    let length_sq = 4.0 * C * C * a / rho_gamma;
    let rho_eff = rho_gamma * (1.0 - length_sq * delta_omega * delta_omega / (4.0 * C * C)) * length_sq
        / (pulse.length * pulse.length);
    let long_enough = pulse.length > thresholds.length_factor * 2.0 * l * eta_c;
    let valid = long_enough && a > 0.0 && a.abs() >= thresholds.denominator_rel * incident && rho_eff.is_finite();
    Ok(PulseParams { channel, delta_omega, length_sq, rho_gamma, rho_eff, valid })
}

fn nb_eta(slab: &SlabSpec) -> f64 {
    slab.model.constant_index().map_or(1.0, |n| n.re)
}

/// Output squeeze profile `rho_Gamma(omega)`, clamped at zero.
pub fn squeezing_spectrum(params: &PulseParams, pulse: &GaussianPulseSpec, omega: f64) -> f64 {
    let d = omega - pulse.omega_c + params.delta_omega;
    (params.rho_gamma * (1.0 - params.length_sq * d * d / (4.0 * C * C))).max(0.0)
}

/// Incident profile `rho_I [1 - L_I^2 (omega - omega_c)^2 / 4c^2]`, clamped at zero.
pub fn incident_squeeze_profile(pulse: &GaussianPulseSpec, omega: f64) -> f64 {
    let d = (omega - pulse.omega_c) / pulse.bandwidth();
    (pulse.rho_i * (1.0 - 0.25 * d * d)).max(0.0)
}

/// Narrow-band squeezed-vacuum output spectrum
/// `prefactor * exp{-2 rho_Gamma [1 - L_Gamma^2 (omega - omega_c + Delta omega)^2 / 4c^2]}`
/// (the parabola is not clamped here).
pub fn narrowband_spectrum(params: &PulseParams, pulse: &GaussianPulseSpec, sigma: f64, omega: f64) -> f64 {
    let d = omega - pulse.omega_c + params.delta_omega;
    let rho = params.rho_gamma * (1.0 - params.length_sq * d * d / (4.0 * C * C));
    spectral_prefactor(omega, sigma) * (-2.0 * rho).exp()
}

/// Variance of the optimally detected quadrature of a scattered
/// squeezed-vacuum pulse, evaluated at the carrier.
pub fn continuum_quadrature_variance(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<f64> {
    let c2 = channel_amplitude(slab, pulse.omega_c, channel)?.norm_sqr();
    let noise = noise_moment(slab, pulse.omega_c)?;
    Ok(0.25 * (1.0 - c2 * (1.0 - (-2.0 * pulse.rho_i).exp()) + 2.0 * noise))
}

/// Fraction of the incident pulse energy carried by one channel,
/// `int omega |C|^2 |alpha|^2 / int omega |alpha|^2` over the pulse band.
pub fn energy_weighted_fraction(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<f64> {
    let gl = GaussLegendre::new(64);
    let (lo, hi) = pulse.band();
    let mut num = 0.0;
    let mut den = 0.0;
    for (w, wt) in gl.composite_points(lo, hi, 16) {
        let weight = wt * w * pulse.envelope(w).powi(2);
        num += weight * channel_amplitude(slab, w, channel)?.norm_sqr();
        den += weight;
    }
    Ok(num / den)
}
