//! Energy flow of the scattered pulse: the normally ordered Poynting vector
//! split into coherent, squeezing and thermal parts, its narrow-band
//! Gaussian envelope and the resolved pulse train of a thick slab.
//!
//! Positions and times enter only through the retarded time `t - x/c`,
//! measured on the output side of the slab.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::constants::{C, HBAR, K_B};
use crate::continuum::{narrowband_coefficients, GaussianPulseSpec};
use crate::error::{Error, Result};
use crate::numerics::{simpson, GaussLegendre};
use crate::slab::{channel_amplitude, refractive_index, scatter_coefficients, thermal_occupation, Channel, SlabSpec};

/// Gauss-Legendre nodes per panel.
const NODES: usize = 64;
/// Minimum number of panels across `omega_c +- 8c/L_I`.
const MIN_PANELS: usize = 16;
/// Largest phase excursion (rad) of the integrand allowed on one panel.
const PANEL_PHASE: f64 = 40.0;
/// Relative change on grid doubling above which a result is rejected.
const DOUBLING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoyntingSample {
    pub x: f64,
    pub t: f64,
    pub coherent: f64,
    pub squeezed: f64,
    pub thermal: f64,
    pub total: f64,
}

/// Narrow-band Gaussian envelope `S0 A exp[-2 (x - ct + dx)^2 / L^2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeParams {
    pub channel: Channel,
    /// Peak relative to the incident peak `S0`.
    pub amplitude: f64,
    pub shift_x: f64,
    pub length_sq: f64,
}

impl EnvelopeParams {
    pub fn evaluate(&self, s0: f64, x: f64, t: f64) -> f64 {
        let u = x - C * t + self.shift_x;
        s0 * self.amplitude * (-2.0 * u * u / self.length_sq).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParsevalCheck {
    /// Time-integrated coherent flux, J/m^2.
    pub lhs: f64,
    /// `eps0 c` times the frequency-integrated coherent spectrum, J/m^2.
    pub rhs: f64,
    pub rel_err: f64,
}

/// `hbar / (4 pi sigma)`.
fn flux_prefactor(sigma: f64) -> f64 {
    HBAR / (4.0 * PI * sigma)
}

/// Round-trip time scale of the slab response: enough internal echoes for
/// `|r|^(2m)` to fall below 1e-12.
fn slab_delay(slab: &SlabSpec, omega: f64) -> Result<f64> {
    let n = refractive_index(&slab.model, omega)?;
    let r = ((n - 1.0) / (n + 1.0)).norm();
    let echoes = if r < 1e-6 { 1.0 } else { (-6.0 / r.log10()).ceil().min(400.0) };
    Ok(2.0 * slab.half_thickness / C * (1.0 + n.re * (2.0 * echoes + 1.0)))
}

/// Direct frequency-domain synthesis of the coherent flux
/// `(hbar / 4 pi sigma) |int sqrt(omega) C(omega) alpha(omega) exp(-i omega tau) d omega|^2`
/// on a fixed band, with node values cached for repeated evaluation.
#[derive(Debug, Clone)]
pub struct CoherentSynthesis {
    prefactor: f64,
    omega_c: f64,
    coarse: Vec<(f64, Complex64)>,
    fine: Vec<(f64, Complex64)>,
    /// Upper bound of the flux over all times.
    bound: f64,
}

impl CoherentSynthesis {
    /// Synthesis valid for `|t - x/c| <= tau_span`.
    pub fn new(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel, tau_span: f64) -> Result<Self> {
        let delay = slab_delay(slab, pulse.omega_c)?;
        Self::build(pulse, slab.sigma, tau_span + delay, |w| channel_amplitude(slab, w, channel))
    }

    /// The incident pulse in free space.
    pub fn free_space(pulse: &GaussianPulseSpec, sigma: f64, tau_span: f64) -> Result<Self> {
        Self::build(pulse, sigma, tau_span, |_| Ok(Complex64::new(1.0, 0.0)))
    }

    fn build(
        pulse: &GaussianPulseSpec,
        sigma: f64,
        time_content: f64,
        coefficient: impl Fn(f64) -> Result<Complex64>,
    ) -> Result<Self> {
        let (lo, hi) = pulse.band();
        let panels = MIN_PANELS.max(((hi - lo) * time_content.abs() / PANEL_PHASE).ceil() as usize);
        let gl = GaussLegendre::new(NODES);
        let weights = |intervals: usize| -> Result<Vec<(f64, Complex64)>> {
            gl.composite_points(lo, hi, intervals)
                .into_iter()
                .map(|(w, wt)| Ok((w - pulse.omega_c, coefficient(w)? * pulse.alpha(w) * (wt * w.sqrt()))))
                .collect()
        };
        let coarse = weights(panels)?;
        let fine = weights(2 * panels)?;
        let prefactor = flux_prefactor(sigma);
        let bound = prefactor * fine.iter().map(|(_, g)| g.norm()).sum::<f64>().powi(2);
        Ok(CoherentSynthesis { prefactor, omega_c: pulse.omega_c, coarse, fine, bound })
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    fn sum(nodes: &[(f64, Complex64)], tau: f64) -> f64 {
        nodes
            .iter()
            .map(|&(d, g)| g * Complex64::from_polar(1.0, -d * tau))
            .sum::<Complex64>()
            .norm_sqr()
    }

    /// Flux at retarded time `tau = t - x/c` on the refined grid, without
    /// the convergence check.
    pub fn eval_unchecked(&self, tau: f64) -> f64 {
        self.prefactor * Self::sum(&self.fine, tau)
    }

    /// Flux at `tau`, rejected when halving the panel width moves it by more
    /// than 1e-6 of the peak bound.
    pub fn eval(&self, tau: f64) -> Result<f64> {
        let fine = self.eval_unchecked(tau);
        if self.bound == 0.0 {
            return Ok(fine);
        }
        let coarse = self.prefactor * Self::sum(&self.coarse, tau);
        let rel_change = (fine - coarse).abs() / self.bound;
        if rel_change > DOUBLING_TOL {
            return Err(Error::Accuracy { rel_change });
        }
        Ok(fine)
    }
}

/// Coherent part of the scattered flux at `(x, t)`.
pub fn coherent_poynting(slab: &SlabSpec, pulse: &GaussianPulseSpec, x: f64, t: f64, channel: Channel) -> Result<f64> {
    let tau = t - x / C;
    CoherentSynthesis::new(slab, pulse, channel, tau.abs())?.eval(tau)
}

/// Peak `S0` of the free-space incident coherent flux.
pub fn free_space_peak(pulse: &GaussianPulseSpec, sigma: f64) -> Result<f64> {
    CoherentSynthesis::free_space(pulse, sigma, 0.0)?.eval(0.0)
}

/// Band integral with the doubling check.
fn band_integral(lo: f64, hi: f64, panels: usize, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let gl = GaussLegendre::new(NODES);
    let run = |intervals: usize| -> Result<f64> {
        gl.composite_points(lo, hi, intervals)
            .into_iter()
            .map(|(w, wt)| Ok(wt * f(w)?))
            .sum()
    };
    let coarse = run(panels)?;
    let fine = run(2 * panels)?;
    if fine != 0.0 {
        let rel_change = ((fine - coarse) / fine).abs();
        if rel_change > DOUBLING_TOL {
            return Err(Error::Accuracy { rel_change });
        }
    }
    Ok(fine)
}

fn band_panels(slab: &SlabSpec, pulse: &GaussianPulseSpec) -> Result<usize> {
    let (lo, hi) = pulse.band();
    Ok(MIN_PANELS.max(((hi - lo) * slab_delay(slab, pulse.omega_c)? / PANEL_PHASE).ceil() as usize))
}

/// Stationary flux of squeezing photons,
/// `(hbar / 4 pi sigma) int omega |C|^2 sinh^2(rho(omega)) d omega`.
pub fn squeezed_flux(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<f64> {
    if pulse.rho_i == 0.0 {
        return Ok(0.0);
    }
    let (lo, hi) = pulse.band();
    let integral = band_integral(lo, hi, band_panels(slab, pulse)?, |w| {
        Ok(w * channel_amplitude(slab, w, channel)?.norm_sqr() * pulse.rho(w).sinh().powi(2))
    })?;
    Ok(flux_prefactor(slab.sigma) * integral)
}

/// Stationary thermal flux radiated by the slab into either side,
/// `(hbar / 4 pi sigma) int omega nbar(omega) A(omega) d omega`, truncated
/// at `hbar omega = 60 k_B T`.
pub fn thermal_flux(slab: &SlabSpec) -> Result<f64> {
    if slab.temperature <= 0.0 || slab.model.is_lossless() || slab.half_thickness == 0.0 {
        return Ok(0.0);
    }
    let hi = 60.0 * K_B * slab.temperature / HBAR;
    let delay = slab_delay(slab, hi)?;
    let panels = 64usize.max((hi * delay / PANEL_PHASE).ceil() as usize);
    let integral = band_integral(0.0, hi, panels, |w| {
        if w == 0.0 {
            return Ok(0.0);
        }
        let a = scatter_coefficients(slab, w)?.absorptance;
        Ok(w * thermal_occupation(w, slab.temperature) * a)
    })?;
    Ok(flux_prefactor(slab.sigma) * integral)
}

/// Evaluates the full flux of one channel on many space-time points,
/// sharing the synthesis grid and the stationary parts.
#[derive(Debug, Clone)]
pub struct PoyntingField {
    synthesis: CoherentSynthesis,
    squeezed: f64,
    thermal: f64,
}

impl PoyntingField {
    pub fn new(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel, tau_span: f64) -> Result<Self> {
        Ok(PoyntingField {
            synthesis: CoherentSynthesis::new(slab, pulse, channel, tau_span)?,
            squeezed: squeezed_flux(slab, pulse, channel)?,
            thermal: thermal_flux(slab)?,
        })
    }

    pub fn sample(&self, x: f64, t: f64) -> Result<PoyntingSample> {
        let coherent = self.synthesis.eval(t - x / C)?;
        Ok(PoyntingSample {
            x,
            t,
            coherent,
            squeezed: self.squeezed,
            thermal: self.thermal,
            total: coherent + self.squeezed + self.thermal,
        })
    }
}

pub fn poynting_sample(slab: &SlabSpec, pulse: &GaussianPulseSpec, x: f64, t: f64, channel: Channel) -> Result<PoyntingSample> {
    PoyntingField::new(slab, pulse, channel, (t - x / C).abs())?.sample(x, t)
}

/// `eps0 c int S_coh(omega) d omega = (hbar / 2 sigma) int omega |C alpha|^2 d omega`.
pub fn coherent_energy(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<f64> {
    let (lo, hi) = pulse.band();
    let integral = band_integral(lo, hi, band_panels(slab, pulse)?, |w| {
        Ok(w * (channel_amplitude(slab, w, channel)? * pulse.alpha(w)).norm_sqr())
    })?;
    Ok(HBAR / (2.0 * slab.sigma) * integral)
}

/// Energy per area of the coherent pulse dissipated in the slab,
/// `(hbar / 2 sigma) int omega A |alpha|^2 d omega`.
pub fn absorbed_energy(slab: &SlabSpec, pulse: &GaussianPulseSpec) -> Result<f64> {
    let (lo, hi) = pulse.band();
    let integral = band_integral(lo, hi, band_panels(slab, pulse)?, |w| {
        Ok(w * scatter_coefficients(slab, w)?.absorptance * pulse.alpha(w).norm_sqr())
    })?;
    Ok(HBAR / (2.0 * slab.sigma) * integral)
}

/// Compares the time integral of the coherent flux at `x = 0` (Simpson, 8193
/// samples over `[-10 L/c, 10 L/c + 4 l eta / c]`) with the frequency
/// integral of the coherent spectrum.
pub fn parseval_check(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<ParsevalCheck> {
    const SAMPLES: usize = 8193;
    let eta = refractive_index(&slab.model, pulse.omega_c)?.re;
    let t0 = -10.0 * pulse.length / C;
    let t1 = 10.0 * pulse.length / C + 4.0 * slab.half_thickness * eta / C;
    let synth = CoherentSynthesis::new(slab, pulse, channel, t0.abs().max(t1))?;
    let dt = (t1 - t0) / (SAMPLES - 1) as f64;
    let values = (0..SAMPLES)
        .into_par_iter()
        .map(|i| synth.eval(t0 + i as f64 * dt))
        .collect::<Result<Vec<f64>>>()?;
    let lhs = simpson(&values, dt);
    let rhs = coherent_energy(slab, pulse, channel)?;
    let scale = lhs.abs().max(rhs.abs());
    let rel_err = if scale == 0.0 { 0.0 } else { (lhs - rhs).abs() / scale };
    Ok(ParsevalCheck { lhs, rhs, rel_err })
}

/// Gaussian envelope of the coherent flux in the long-pulse regime, from
/// `A = 2 l c gamma` and `B = L_I^2 + 32 c^2 l^2 beta^2`.
pub fn narrowband_envelope(slab: &SlabSpec, pulse: &GaussianPulseSpec, channel: Channel) -> Result<EnvelopeParams> {
    let nb = narrowband_coefficients(slab, pulse.omega_c, channel)?;
    let l = slab.half_thickness;
    let eta = refractive_index(&slab.model, pulse.omega_c)?.re;
    if pulse.length <= 10.0 * 2.0 * l * eta {
        log::warn!("pulse length {:e} m is not long compared with the optical thickness", pulse.length);
    }
    let li2 = pulse.length * pulse.length;
    let a = 2.0 * l * C * nb.gamma;
    let b = li2 + 32.0 * C * C * l * l * nb.beta_sq;
    if b.re <= 0.0 {
        return Err(Error::Regime(format!("envelope width undefined: Re B = {:e}", b.re)));
    }
    let ab = a * b.conj();
    let b2 = b.norm_sqr();
    let shift_x = ab.re / b.re;
    let length_sq = b2 / b.re;
    let offset = (a * a * b.conj()).re - ab.re * ab.re / b.re;
    let amplitude = nb.c_at_center.norm_sqr() * li2 / b.norm() * (-2.0 * offset / b2).exp();
    Ok(EnvelopeParams { channel, amplitude, shift_x, length_sq })
}

/// Resolved train of transmitted echoes for a pulse much shorter than the
/// optical thickness (`L_I < 2 l eta / 5`). Uses the normal-incidence
/// interface factors `r = (n-1)/(n+1)`, `t1 = 2/(n+1)`, `t2 = 2n/(n+1)`
/// and a single absorption factor for the whole train.
pub fn pulse_train(slab: &SlabSpec, pulse: &GaussianPulseSpec, s0: f64, x: f64, t: f64) -> Result<f64> {
    let n = slab
        .model
        .constant_index()
        .ok_or_else(|| Error::Domain("pulse train needs the constant-index model".into()))?;
    let l = slab.half_thickness;
    if pulse.length >= 2.0 * l * n.re / 5.0 {
        return Err(Error::Regime(format!(
            "pulse length {:e} m is not short compared with the optical thickness {:e} m",
            pulse.length,
            2.0 * l * n.re
        )));
    }
    let r = ((n - 1.0) / (n + 1.0)).norm();
    if r >= 1.0 {
        return Err(Error::Domain(format!("interface reflectivity |r| = {r} >= 1")));
    }
    let t12 = (4.0 * n / ((n + 1.0) * (n + 1.0))).norm_sqr();
    let base = s0 * t12 * (-4.0 * n.im * pulse.omega_c * l / C).exp();
    let li2 = pulse.length * pulse.length;
    let r4 = r.powi(4);
    let mut weight = 1.0;
    let mut total = 0.0;
    let mut m = 0u32;
    while weight * base >= 1e-12 * s0 && m < 10_000 {
        let dx = -2.0 * l * (1.0 - (2.0 * m as f64 + 1.0) * n.re);
        let u = x - C * t + dx;
        total += weight * (-2.0 * u * u / li2).exp();
        weight *= r4;
        m += 1;
        if r4 == 0.0 {
            break;
        }
    }
    Ok(base * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::omega_from_wavelength;
    use crate::numerics::golden_section_min;

    fn wc() -> f64 {
        omega_from_wavelength(633e-9)
    }

    fn pulse(l_i: f64) -> GaussianPulseSpec {
        GaussianPulseSpec::new(wc(), l_i, 1.5).unwrap().with_coherent(Complex64::new(1e6, 0.0))
    }

    fn slab(l: f64, eta: f64, kappa: f64) -> SlabSpec {
        SlabSpec::lossy(l, eta, kappa).unwrap()
    }

    #[test]
    fn free_space_gaussian() {
        let p = pulse(80e-6);
        let none = slab(0.0, 1.5, 0.002);
        let synth = CoherentSynthesis::new(&none, &p, Channel::Transmitted, 1e-12).unwrap();
        let s0 = free_space_peak(&p, 1.0).unwrap();
        for k in -8..=8 {
            let tau = k as f64 * 0.25 * p.length / C;
            let got = synth.eval(tau).unwrap();
            // sqrt(omega) weighting skews the envelope at the 1e-3 level
            let want = s0 * (-2.0 * (C * tau).powi(2) / (p.length * p.length)).exp();
            assert!((got - want).abs() < 2e-3 * s0, "k {k}: {got:e} vs {want:e}");
        }
        let refl = CoherentSynthesis::new(&none, &p, Channel::Reflected, 1e-12).unwrap();
        assert_eq!(refl.eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn peak_matches_closed_form() {
        // |int sqrt(w) alpha dw|^2 with sqrt(w) frozen at the carrier
        let p = pulse(80e-6);
        let s0 = free_space_peak(&p, 1.0).unwrap();
        let approx = flux_prefactor(1.0) * wc() * (1e6f64 * 2.0 * PI.sqrt() * p.bandwidth()).powi(2);
        assert!((s0 / approx - 1.0).abs() < 1e-4);
    }

    #[test]
    fn translation_covariance() {
        let p = pulse(80e-6);
        let s = slab(1e-6, 1.5, 0.002);
        for (x, t) in [(0.0, 1e-13), (3e-5, 1e-13 + 1e-13), (-2e-5, 1e-13 - 2e-5 / C)] {
            let a = coherent_poynting(&s, &p, x, t, Channel::Transmitted).unwrap();
            let b = coherent_poynting(&s, &p, 0.0, t - x / C, Channel::Transmitted).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.max(b));
        }
    }

    #[test]
    fn accuracy_error_on_undersampled_grid() {
        let p = pulse(80e-6);
        let s = slab(1e-6, 1.5, 0.002);
        // a grid built for tau ~ 0 cannot resolve the phase far out
        let synth = CoherentSynthesis::new(&s, &p, Channel::Transmitted, 0.0).unwrap();
        let far = 400.0 * p.length / C;
        assert!(matches!(synth.eval(far), Err(Error::Accuracy { .. })));
    }

    #[test]
    fn squeezed_flux_properties() {
        let p = pulse(80e-6);
        let none = slab(0.0, 1.5, 0.002);
        let s = slab(1e-6, 1.5, 0.002);
        assert_eq!(squeezed_flux(&s, &p.with_rho(0.0), Channel::Transmitted).unwrap(), 0.0);
        let mut prev = 0.0;
        for rho in [0.2, 0.5, 1.0, 1.5, 2.0] {
            let f = squeezed_flux(&s, &p.with_rho(rho), Channel::Transmitted).unwrap();
            assert!(f > prev);
            prev = f;
        }
        let free = squeezed_flux(&none, &p, Channel::Transmitted).unwrap();
        let gl = GaussLegendre::new(64);
        let (lo, hi) = p.band();
        let oracle = flux_prefactor(1.0) * gl.integrate_composite(lo, hi, 64, |w| w * p.rho(w).sinh().powi(2));
        assert!((free / oracle - 1.0).abs() < 1e-10);
    }

    #[test]
    fn thermal_flux_cases() {
        assert_eq!(thermal_flux(&slab(1e-6, 1.5, 0.01)).unwrap(), 0.0);
        assert_eq!(thermal_flux(&slab(1e-6, 1.5, 0.0).with_temperature(300.0)).unwrap(), 0.0);
        let warm = thermal_flux(&slab(1e-6, 1.5, 0.01).with_temperature(300.0)).unwrap();
        let hot = thermal_flux(&slab(1e-6, 1.5, 0.01).with_temperature(600.0)).unwrap();
        assert!(warm > 0.0 && hot > warm);
        let p = pulse(80e-6);
        let sample = poynting_sample(&slab(1e-6, 1.5, 0.01), &p, 0.0, 0.0, Channel::Reflected).unwrap();
        assert_eq!(sample.thermal, 0.0);
        assert_eq!(sample.total, sample.coherent + sample.squeezed);
    }

    #[test]
    fn parseval_free_space_and_slab() {
        let p = pulse(80e-6);
        let none = slab(0.0, 1.5, 0.002);
        let free = parseval_check(&none, &p, Channel::Transmitted).unwrap();
        assert!(free.rel_err < 1e-6, "{free:?}");
        let zero = parseval_check(&none, &p, Channel::Reflected).unwrap();
        assert_eq!((zero.lhs, zero.rhs, zero.rel_err), (0.0, 0.0, 0.0));
        let s = slab(1e-6, 1.5, 0.002);
        for ch in Channel::BOTH {
            let chk = parseval_check(&s, &p, ch).unwrap();
            assert!(chk.rel_err < 1e-6, "{ch}: {chk:?}");
        }
    }

    #[test]
    fn energy_balance() {
        let p = pulse(80e-6);
        let incident = coherent_energy(&slab(0.0, 1.5, 0.0), &p, Channel::Transmitted).unwrap();
        let lossless = slab(1e-6, 2.2, 0.0);
        let out = coherent_energy(&lossless, &p, Channel::Transmitted).unwrap()
            + coherent_energy(&lossless, &p, Channel::Reflected).unwrap();
        assert!((out / incident - 1.0).abs() < 1e-12);
        let lossy = slab(1e-6, 2.2, 0.05);
        let out = coherent_energy(&lossy, &p, Channel::Transmitted).unwrap()
            + coherent_energy(&lossy, &p, Channel::Reflected).unwrap();
        let deficit = incident - out;
        assert!(deficit > 0.0);
        let absorbed = absorbed_energy(&lossy, &p).unwrap();
        assert!((deficit / absorbed - 1.0).abs() < 1e-6);
    }

    #[test]
    fn zero_thickness_envelope() {
        let p = pulse(80e-6);
        let env = narrowband_envelope(&slab(0.0, 1.5, 0.002), &p, Channel::Transmitted).unwrap();
        assert_eq!(env.shift_x, 0.0);
        assert!((env.length_sq / (p.length * p.length) - 1.0).abs() < 1e-15);
        assert!((env.amplitude - 1.0).abs() < 1e-15);
    }

    #[test]
    fn envelope_matches_direct_synthesis() {
        let p = pulse(80e-6);
        let s0 = free_space_peak(&p, 1.0).unwrap();
        for (eta, kappa) in [(1.5, 0.002), (1.5, 0.0), (2.5, 0.02)] {
            let s = slab(1e-6, eta, kappa);
            for ch in Channel::BOTH {
                let env = narrowband_envelope(&s, &p, ch).unwrap();
                let span = 5.0 * p.length / C;
                let synth = CoherentSynthesis::new(&s, &p, ch, span).unwrap();
                let peak = (0..=200)
                    .map(|i| {
                        let tau = -span + i as f64 * 2.0 * span / 200.0;
                        let direct = synth.eval(tau).unwrap();
                        let approx = env.evaluate(s0, 0.0, tau);
                        assert!((direct - approx).abs() < 0.02 * s0 * env.amplitude.max(1e-300) + 0.02 * direct,
                            "eta {eta} {ch} tau {tau:e}: {direct:e} vs {approx:e}");
                        direct
                    })
                    .fold(0.0, f64::max);
                // location of the maximum
                let tau_max = golden_section_min(|tau| -synth.eval_unchecked(tau), -span, span, 1e-18);
                assert!((C * tau_max - env.shift_x).abs() < p.length / 50.0, "{ch}");
                assert!(peak > 0.0);
            }
        }
    }

    #[test]
    fn resonant_delay_is_positive() {
        let p = pulse(80e-6);
        let s = slab(633e-9 / 6.0, 1.5, 0.0);
        let env = narrowband_envelope(&s, &p, Channel::Transmitted).unwrap();
        assert!(env.shift_x > 0.0);
        // the Fabry-Perot delay exceeds the single-pass excess path 2l(eta - 1)
        assert!(env.shift_x > 2.0 * s.half_thickness * 0.5);
    }

    #[test]
    fn pulse_train_echo_structure() {
        let l = 10e-6;
        let p = pulse(3e-6);
        let s = slab(l, 1.5, 0.0);
        let s0 = free_space_peak(&p, 1.0).unwrap();
        let first = pulse_train(&s, &p, s0, 0.0, 2.0 * l * 0.5 / C).unwrap();
        let second = pulse_train(&s, &p, s0, 0.0, (2.0 * l * 0.5 + 4.0 * l * 1.5) / C).unwrap();
        assert!((second / first - 0.2f64.powi(4)).abs() < 1e-12);
        assert!((first / s0 - (4.0 * 1.5 / 6.25f64).powi(2)).abs() < 1e-12);
        assert!(matches!(pulse_train(&s, &pulse(80e-6), s0, 0.0, 0.0), Err(Error::Regime(_))));
    }
}
