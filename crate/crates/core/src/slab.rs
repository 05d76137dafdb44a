//! Dielectric models and the linear response of a planar slab of thickness
//! `2l` in vacuum at normal incidence.
//!
//! The slab is described by its complex refractive index `n = eta + i kappa`
//! and the complex amplitude coefficients `R_S`, `T_S` that include every
//! internal reflection. The same `T_S` applies to both propagation
//! directions, so only one transmission coefficient is exposed.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::constants::{C, HBAR, K_B};
use crate::error::{Error, Result};

/// Relative permittivity model of the slab material.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DielectricModel {
    /// Frequency-independent index `eta + i kappa`.
    Constant { eta: f64, kappa: f64 },
    /// Single damped oscillator:
    /// `eps(w) = 1 + plasma^2 / (omega0^2 - w^2 - i gamma w)`.
    Lorentz { omega0: f64, plasma: f64, gamma: f64 },
}

impl DielectricModel {
    pub fn constant(eta: f64, kappa: f64) -> Result<Self> {
        let m = DielectricModel::Constant { eta, kappa };
        m.validate()?;
        Ok(m)
    }

    pub fn lorentz(omega0: f64, plasma: f64, gamma: f64) -> Result<Self> {
        let m = DielectricModel::Lorentz { omega0, plasma, gamma };
        m.validate()?;
        Ok(m)
    }

    /// Checks the model invariants. A Lorentz oscillator with `gamma >= 0` is
    /// passive (`Im eps >= 0`) at every positive frequency.
    pub fn validate(&self) -> Result<()> {
        match *self {
            DielectricModel::Constant { eta, kappa } => {
                if !(eta > 0.0 && eta.is_finite()) {
                    return Err(invalid("eta", format!("must be > 0, got {eta}")));
                }
                if !(kappa >= 0.0 && kappa.is_finite()) {
                    return Err(invalid("kappa", format!("must be >= 0, got {kappa}")));
                }
            }
            DielectricModel::Lorentz { omega0, plasma, gamma } => {
                if !(omega0 >= 0.0 && omega0.is_finite()) {
                    return Err(invalid("omega0", format!("must be >= 0, got {omega0}")));
                }
                if !(plasma >= 0.0 && plasma.is_finite()) {
                    return Err(invalid("plasma", format!("must be >= 0, got {plasma}")));
                }
                if !(gamma >= 0.0 && gamma.is_finite()) {
                    return Err(invalid("gamma", format!("must be >= 0 for a passive medium, got {gamma}")));
                }
            }
        }
        Ok(())
    }

    pub fn permittivity(&self, omega: f64) -> Complex64 {
        match *self {
            DielectricModel::Constant { eta, kappa } => {
                let n = Complex64::new(eta, kappa);
                n * n
            }
            DielectricModel::Lorentz { omega0, plasma, gamma } => {
                let den = Complex64::new(omega0 * omega0 - omega * omega, -gamma * omega);
                1.0 + plasma * plasma / den
            }
        }
    }

    /// The index for a frequency-independent model, `None` for dispersive ones.
    pub fn constant_index(&self) -> Option<Complex64> {
        match *self {
            DielectricModel::Constant { eta, kappa } => Some(Complex64::new(eta, kappa)),
            DielectricModel::Lorentz { .. } => None,
        }
    }

    pub fn refractive_index(&self, omega: f64) -> Result<Complex64> {
        refractive_index(self, omega)
    }

    /// True when `Im eps` vanishes at every frequency.
    pub fn is_lossless(&self) -> bool {
        match *self {
            DielectricModel::Constant { kappa, .. } => kappa == 0.0,
            DielectricModel::Lorentz { gamma, .. } => gamma == 0.0,
        }
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParameter { name, reason }
}

pub(crate) fn check_omega(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("angular frequency must be positive, got {omega}")))
    }
}

/// Complex refractive index `n(omega)` with `Re n > 0` and, for passive
/// media, `Im n >= 0`.
pub fn refractive_index(model: &DielectricModel, omega: f64) -> Result<Complex64> {
    check_omega(omega)?;
    if let Some(n) = model.constant_index() {
        return Ok(n);
    }
    // principal branch: Re sqrt >= 0
    let n = model.permittivity(omega).sqrt();
    Ok(if n.re < 0.0 { -n } else { n })
}

/// Channel of the scattered light: forward (transmitted, domain 3) or
/// backward (reflected, domain 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Channel {
    #[serde(rename = "T")]
    Transmitted,
    #[serde(rename = "R")]
    Reflected,
}

impl Channel {
    pub const BOTH: [Channel; 2] = [Channel::Transmitted, Channel::Reflected];
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Transmitted => "T",
            Channel::Reflected => "R",
        })
    }
}

impl FromStr for Channel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "transmitted" => Ok(Channel::Transmitted),
            "R" | "r" | "reflected" => Ok(Channel::Reflected),
            other => Err(Error::Config(format!("unknown channel `{other}` (expected T or R)"))),
        }
    }
}

/// Slab geometry, material and environment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlabSpec {
    /// Half-thickness `l` in metres; the slab occupies `-l < x < l`.
    pub half_thickness: f64,
    pub model: DielectricModel,
    /// Quantization area in the transverse plane, m².
    pub sigma: f64,
    /// Temperature of the slab's thermal reservoir, K.
    pub temperature: f64,
}

impl SlabSpec {
    pub fn new(half_thickness: f64, model: DielectricModel, sigma: f64, temperature: f64) -> Result<Self> {
        let s = SlabSpec { half_thickness, model, sigma, temperature };
        s.validate()?;
        Ok(s)
    }

    /// A zero-temperature slab with unit quantization area.
    pub fn lossy(half_thickness: f64, eta: f64, kappa: f64) -> Result<Self> {
        Self::new(half_thickness, DielectricModel::constant(eta, kappa)?, 1.0, 0.0)
    }

    /// `l = 0` is accepted and describes the absent slab.
    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if !(self.half_thickness >= 0.0 && self.half_thickness.is_finite()) {
            return Err(invalid("half_thickness", format!("must be >= 0, got {}", self.half_thickness)));
        }
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(invalid("sigma", format!("must be > 0, got {}", self.sigma)));
        }
        if !(self.temperature >= 0.0 && self.temperature.is_finite()) {
            return Err(invalid("temperature", format!("must be >= 0, got {}", self.temperature)));
        }
        Ok(())
    }

    pub fn with_half_thickness(&self, half_thickness: f64) -> Self {
        SlabSpec { half_thickness, ..*self }
    }

    pub fn with_model(&self, model: DielectricModel) -> Self {
        SlabSpec { model, ..*self }
    }

    pub fn with_temperature(&self, temperature: f64) -> Self {
        SlabSpec { temperature, ..*self }
    }
}

/// Complex reflection/transmission of the slab at one frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScatterCoefficients {
    pub omega: f64,
    pub r_s: Complex64,
    pub t_s: Complex64,
    pub abs_r: f64,
    pub abs_t: f64,
    /// Half-phase of `r_s`, in `(-pi/2, pi/2]`.
    pub delta_r: f64,
    /// Half-phase of `t_s`, in `(-pi/2, pi/2]`.
    pub delta_t: f64,
    pub absorptance: f64,
}

impl ScatterCoefficients {
    pub fn coefficient(&self, channel: Channel) -> Complex64 {
        match channel {
            Channel::Transmitted => self.t_s,
            Channel::Reflected => self.r_s,
        }
    }

    pub fn magnitude(&self, channel: Channel) -> f64 {
        match channel {
            Channel::Transmitted => self.abs_t,
            Channel::Reflected => self.abs_r,
        }
    }

    pub fn half_phase(&self, channel: Channel) -> f64 {
        match channel {
            Channel::Transmitted => self.delta_t,
            Channel::Reflected => self.delta_r,
        }
    }
}

/// `exp(i k w l / c * n)` for `Im n >= 0`, split so the decaying real
/// exponent never overflows.
#[inline]
pub(crate) fn propagation_phase(n: Complex64, omega: f64, length: f64) -> Complex64 {
    let k = omega * length / C;
    Complex64::from_polar((-k * n.im).exp(), k * n.re)
}

/// `(R_S, T_S)` for index `n` at `omega` and half-thickness `l`.
pub(crate) fn slab_amplitudes(n: Complex64, omega: f64, l: f64) -> Result<(Complex64, Complex64)> {
    let round_trip = propagation_phase(n, omega, 4.0 * l);
    let np1 = n + 1.0;
    let nm1 = n - 1.0;
    let den = np1 * np1 - nm1 * nm1 * round_trip;
    if den.norm() < 1e-14 {
        return Err(Error::Singularity { omega, l });
    }
    let r = (n * n - 1.0) * Complex64::from_polar(1.0, -2.0 * omega * l / C) * (round_trip - 1.0) / den;
    let t = 4.0 * n * propagation_phase(n - 1.0, omega, 2.0 * l) / den;
    Ok((r, t))
}

/// Half of the principal argument, in `(-pi/2, pi/2]`.
pub fn half_phase(z: Complex64) -> f64 {
    0.5 * z.arg()
}

/// Removes the `pi` jumps of a sequence of half-phases sampled along a sweep
/// so that consecutive values differ by at most `pi/2`.
pub fn unwrap_half_phases(phases: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(phases.len());
    let mut offset = 0.0;
    let mut prev: Option<f64> = None;
    for &p in phases {
        if let Some(q) = prev {
            let mut d = p + offset - q;
            while d > FRAC_PI_2 {
                offset -= PI;
                d -= PI;
            }
            while d <= -FRAC_PI_2 {
                offset += PI;
                d += PI;
            }
        }
        let v = p + offset;
        out.push(v);
        prev = Some(v);
    }
    out
}

pub fn scatter_coefficients(slab: &SlabSpec, omega: f64) -> Result<ScatterCoefficients> {
    let n = refractive_index(&slab.model, omega)?;
    let (r_s, t_s) = slab_amplitudes(n, omega, slab.half_thickness)?;
    let abs_r = r_s.norm();
    let abs_t = t_s.norm();
    Ok(ScatterCoefficients {
        omega,
        r_s,
        t_s,
        abs_r,
        abs_t,
        delta_r: half_phase(r_s),
        delta_t: half_phase(t_s),
        absorptance: (1.0 - abs_r * abs_r - abs_t * abs_t).max(0.0),
    })
}

/// `C_T = T_S` or `C_R = R_S` alone, without the derived quantities.
pub fn channel_amplitude(slab: &SlabSpec, omega: f64, channel: Channel) -> Result<Complex64> {
    let n = refractive_index(&slab.model, omega)?;
    let (r, t) = slab_amplitudes(n, omega, slab.half_thickness)?;
    Ok(match channel {
        Channel::Transmitted => t,
        Channel::Reflected => r,
    })
}

/// Transmission through a length `2l` of homogeneous medium with the
/// interface reflections removed: `exp(2 i omega n l / c)`.
pub fn homogeneous_limit(slab: &SlabSpec, omega: f64) -> Result<Complex64> {
    let n = refractive_index(&slab.model, omega)?;
    Ok(propagation_phase(n, omega, 2.0 * slab.half_thickness))
}

/// Bose-Einstein occupation of a mode at `omega`; exactly zero at `T = 0`.
pub fn thermal_occupation(omega: f64, temperature: f64) -> f64 {
    if temperature <= 0.0 {
        return 0.0;
    }
    let x = HBAR * omega / (K_B * temperature);
    1.0 / x.exp_m1()
}

/// Second moment `<F^dagger F>` of the slab noise operator for either port:
/// thermal occupation times absorptance.
pub fn noise_moment(slab: &SlabSpec, omega: f64) -> Result<f64> {
    if slab.temperature <= 0.0 {
        check_omega(omega)?;
        return Ok(0.0);
    }
    let a = scatter_coefficients(slab, omega)?.absorptance;
    Ok(thermal_occupation(omega, slab.temperature) * a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::omega_from_wavelength;
    use proptest::prelude::*;

    const LAMBDA: f64 = 1064e-9;

    fn slab(l: f64, eta: f64, kappa: f64) -> SlabSpec {
        SlabSpec::lossy(l, eta, kappa).unwrap()
    }

    #[test]
    fn constant_index_is_returned_verbatim() {
        let m = DielectricModel::constant(1.5, 0.005).unwrap();
        assert_eq!(refractive_index(&m, 1e15).unwrap(), Complex64::new(1.5, 0.005));
        let vac = DielectricModel::constant(1.0, 0.0).unwrap();
        assert_eq!(refractive_index(&vac, 3.0).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn lorentz_static_limit() {
        let (w0, wp) = (5e15, 4e15);
        let m = DielectricModel::lorentz(w0, wp, 0.0).unwrap();
        let n = refractive_index(&m, 1e10).unwrap();
        let expect = (1.0 + wp * wp / (w0 * w0)).sqrt();
        assert!((n.re - expect).abs() < 1e-9);
        assert!(n.im.abs() < 1e-15);
    }

    #[test]
    fn lorentz_branch_is_passive() {
        let m = DielectricModel::lorentz(3e15, 2e15, 1e14).unwrap();
        for i in 1..200 {
            let w = i as f64 * 3e13;
            let n = refractive_index(&m, w).unwrap();
            assert!(n.re > 0.0 && n.im >= 0.0, "w = {w}: {n}");
            assert!(m.permittivity(w).im >= 0.0);
        }
    }

    #[test]
    fn invalid_models_and_frequencies() {
        assert!(DielectricModel::constant(0.0, 0.0).is_err());
        assert!(DielectricModel::constant(1.5, -0.1).is_err());
        assert!(DielectricModel::lorentz(1.0, 1.0, -1.0).is_err());
        let m = DielectricModel::constant(1.5, 0.0).unwrap();
        assert!(matches!(refractive_index(&m, 0.0), Err(Error::Domain(_))));
        assert!(matches!(refractive_index(&m, -1.0), Err(Error::Domain(_))));
        assert!(SlabSpec::new(-1e-6, m, 1.0, 0.0).is_err());
        assert!(SlabSpec::new(1e-6, m, 0.0, 0.0).is_err());
        assert!(SlabSpec::new(1e-6, m, 1.0, -3.0).is_err());
    }

    #[test]
    fn zero_thickness_is_identity() {
        let c = scatter_coefficients(&slab(0.0, 1.5, 0.01), omega_from_wavelength(LAMBDA)).unwrap();
        assert!((c.t_s - 1.0).norm() < 1e-15);
        assert!(c.r_s.norm() < 1e-15);
        assert!(c.absorptance.abs() < 1e-15);
    }

    #[test]
    fn quarter_wave_resonance_is_transparent() {
        let l = LAMBDA / (4.0 * 1.5);
        let c = scatter_coefficients(&slab(l, 1.5, 0.0), omega_from_wavelength(LAMBDA)).unwrap();
        assert!((c.abs_t - 1.0).abs() < 1e-12);
        assert!(c.abs_r < 1e-12);
    }

    #[test]
    fn eighth_wave_anti_resonance() {
        let l = LAMBDA / (8.0 * 1.5);
        let c = scatter_coefficients(&slab(l, 1.5, 0.0), omega_from_wavelength(LAMBDA)).unwrap();
        assert!((c.abs_t - 12.0 / 13.0).abs() < 1e-12);
        assert!((c.abs_r - 5.0 / 13.0).abs() < 1e-12);
    }

    #[test]
    fn homogeneous_limit_attenuation() {
        let w = omega_from_wavelength(LAMBDA);
        assert!((homogeneous_limit(&slab(3e-6, 1.5, 0.0), w).unwrap().norm() - 1.0).abs() < 1e-15);
        let s = slab(10e-6, 1.5, 0.005);
        let t = homogeneous_limit(&s, w).unwrap();
        let expect = (-2.0 * w * 0.005 * 10e-6 / C).exp();
        assert!((t.norm() - expect).abs() < 1e-14);
        // same number written with the wavelength, 2*pi*kappa*(2l)/lambda
        let alt = (-2.0 * PI * 0.005 * 2.0 * 10e-6 / LAMBDA).exp();
        assert!((t.norm() - alt).abs() < 1e-12);
        // and from the slab expression with the interface factors switched off
        // (n+1 -> 2, n-1 -> 0 in the denominator, 4n -> 4 in the numerator),
        // multiplied by the vacuum reference phase exp(2 i w l / c)
        let n = Complex64::new(1.5, 0.005);
        let oracle = 4.0 * propagation_phase(n - 1.0, w, 20e-6) / 4.0
            * Complex64::from_polar(1.0, 2.0 * w * 10e-6 / C);
        assert!((oracle - t).norm() < 1e-12);
        let thick = homogeneous_limit(&slab(1.0, 1.5, 0.005), w).unwrap();
        assert!(thick.norm() < 1e-300);
    }

    #[test]
    fn thermal_occupation_values() {
        assert_eq!(thermal_occupation(1e15, 0.0), 0.0);
        let w = omega_from_wavelength(LAMBDA);
        let x = HBAR * w / (K_B * 300.0);
        assert!((x - 45.08).abs() < 0.05, "x = {x}");
        let nbar = thermal_occupation(w, 300.0);
        assert!((nbar / (-x).exp() - 1.0).abs() < 1e-12);
        assert!(nbar > 1e-20 && nbar < 1e-19);
        // hbar w / kT = ln 2  =>  nbar = 1
        let t = 300.0;
        let w1 = 2f64.ln() * K_B * t / HBAR;
        assert!((thermal_occupation(w1, t) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn noise_moment_cases() {
        let w = omega_from_wavelength(LAMBDA);
        assert_eq!(noise_moment(&slab(5e-6, 1.5, 0.005), w).unwrap(), 0.0);
        let warm_lossless = slab(5e-6, 1.5, 0.0).with_temperature(300.0);
        assert!(noise_moment(&warm_lossless, w).unwrap().abs() < 1e-30);
        let warm = slab(5e-6, 1.5, 0.005).with_temperature(300.0);
        let a = scatter_coefficients(&warm, w).unwrap().absorptance;
        assert!(a > 0.0 && a < 1.0);
        let m = noise_moment(&warm, w).unwrap();
        assert!((m - thermal_occupation(w, 300.0) * a).abs() <= 1e-12 * m);
    }

    #[test]
    fn unwrap_removes_pi_jumps() {
        let raw = [1.4, 1.5, -1.55, -1.45, 1.6 - PI];
        let u = unwrap_half_phases(&raw);
        for w in u.windows(2) {
            assert!((w[1] - w[0]).abs() < FRAC_PI_2);
        }
        assert!((u[2] - (PI - 1.55)).abs() < 1e-15);
    }

    #[test]
    fn half_phase_along_sweep_unwraps_continuously() {
        let w = omega_from_wavelength(LAMBDA);
        let deltas: Vec<f64> = (0..2000)
            .map(|i| scatter_coefficients(&slab(i as f64 * 2e-9, 1.5, 0.005), w).unwrap().delta_t)
            .collect();
        let u = unwrap_half_phases(&deltas);
        for pair in u.windows(2) {
            assert!((pair[1] - pair[0]).abs() < 0.1);
        }
    }

    proptest! {
        #[test]
        fn passivity(l in 0.0f64..50e-6, eta in 1.0f64..3.5, kappa in 0.0f64..0.2, lam in 300e-9f64..2e-6) {
            let c = scatter_coefficients(&slab(l, eta, kappa), omega_from_wavelength(lam)).unwrap();
            let raw = 1.0 - c.abs_r.powi(2) - c.abs_t.powi(2);
            prop_assert!(raw > -1e-12 && raw <= 1.0);
            prop_assert!(c.absorptance >= 0.0 && c.absorptance <= 1.0);
        }

        #[test]
        fn lossless_unitarity(l in 0.0f64..100e-6, eta in 1.0f64..3.0, lam in 300e-9f64..2e-6) {
            let c = scatter_coefficients(&slab(l, eta, 0.0), omega_from_wavelength(lam)).unwrap();
            prop_assert!((c.abs_r.powi(2) + c.abs_t.powi(2) - 1.0).abs() < 1e-12);
            prop_assert!(c.absorptance < 1e-12);
        }

        #[test]
        fn lossless_periodicity(l in 0.0f64..5e-6, eta in 1.1f64..3.0) {
            let w = omega_from_wavelength(LAMBDA);
            let period = PI * C / (2.0 * eta * w);
            let a = scatter_coefficients(&slab(l, eta, 0.0), w).unwrap().abs_t;
            let b = scatter_coefficients(&slab(l + period, eta, 0.0), w).unwrap().abs_t;
            prop_assert!((a - b).abs() < 1e-10);
        }

        #[test]
        fn phase_round_trip(l in 0.0f64..30e-6, eta in 1.0f64..3.0, kappa in 0.0f64..0.1) {
            let c = scatter_coefficients(&slab(l, eta, kappa), omega_from_wavelength(LAMBDA)).unwrap();
            prop_assert!(c.delta_t > -FRAC_PI_2 && c.delta_t <= FRAC_PI_2);
            prop_assert!(c.delta_r > -FRAC_PI_2 && c.delta_r <= FRAC_PI_2);
            let t = Complex64::from_polar(c.abs_t, 2.0 * c.delta_t);
            let r = Complex64::from_polar(c.abs_r, 2.0 * c.delta_r);
            prop_assert!((t - c.t_s).norm() < 1e-12);
            prop_assert!((r - c.r_s).norm() < 1e-12);
        }
    }
}
