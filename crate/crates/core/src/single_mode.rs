//! Single-mode squeezed coherent light scattered by the slab.
//!
//! Variances are in units where the vacuum (and coherent state) quadrature
//! variance is `1/4`. The incident state is squeezed with magnitude `rho`
//! and phase `theta` (`xi = rho exp(2 i theta)`); the displacement `alpha`
//! never enters a variance.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::C;
use crate::error::{Error, Result};
use crate::numerics::{find_root, Bracket, ExtremumKind};
use crate::slab::{check_omega, noise_moment, refractive_index, scatter_coefficients, slab_amplitudes, Channel, DielectricModel, SlabSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeParams {
    pub rho: f64,
    pub theta: f64,
    pub alpha: Complex64,
}

impl SqueezeParams {
    pub fn new(rho: f64, theta: f64) -> Result<Self> {
        if !(rho >= 0.0 && rho.is_finite()) {
            return Err(Error::InvalidParameter { name: "rho", reason: format!("must be >= 0, got {rho}") });
        }
        Ok(SqueezeParams { rho, theta, alpha: Complex64::new(0.0, 0.0) })
    }

    pub fn with_displacement(self, alpha: Complex64) -> Self {
        SqueezeParams { alpha, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureVariances {
    /// Variance of the squeezed (optimally rotated) quadrature.
    pub var_x: f64,
    /// Variance of the orthogonal, anti-squeezed quadrature.
    pub var_y: f64,
    /// Rotation angle `theta + delta` that minimizes the variance.
    pub phi_opt: f64,
}

impl QuadratureVariances {
    pub fn product(&self) -> f64 {
        self.var_x * self.var_y
    }
}

/// Variance of the output quadrature rotated by `phi`.
pub fn variance_vs_angle(slab: &SlabSpec, omega: f64, sq: &SqueezeParams, phi: f64, channel: Channel) -> Result<f64> {
    let coeffs = scatter_coefficients(slab, omega)?;
    let mag2 = coeffs.magnitude(channel).powi(2);
    let delta = coeffs.half_phase(channel);
    let noise = noise_moment(slab, omega)?;
    let (s, c) = (sq.rho.sinh(), sq.rho.cosh());
    let angle = 2.0 * (phi - (sq.theta + delta));
    Ok(0.25 * (1.0 + 2.0 * mag2 * (s * s - s * c * angle.cos()) + 2.0 * noise))
}

/// Squeezed and anti-squeezed variances of one output channel.
pub fn channel_variances(slab: &SlabSpec, omega: f64, sq: &SqueezeParams, channel: Channel) -> Result<QuadratureVariances> {
    let coeffs = scatter_coefficients(slab, omega)?;
    let mag2 = coeffs.magnitude(channel).powi(2);
    let noise = noise_moment(slab, omega)?;
    let base = 1.0 - mag2 + 2.0 * noise;
    Ok(QuadratureVariances {
        var_x: 0.25 * (base + mag2 * (-2.0 * sq.rho).exp()),
        var_y: 0.25 * (base + mag2 * (2.0 * sq.rho).exp()),
        phi_opt: sq.theta + coeffs.half_phase(channel),
    })
}

pub fn transmitted_variances(slab: &SlabSpec, omega: f64, sq: &SqueezeParams) -> Result<QuadratureVariances> {
    channel_variances(slab, omega, sq, Channel::Transmitted)
}

pub fn reflected_variances(slab: &SlabSpec, omega: f64, sq: &SqueezeParams) -> Result<QuadratureVariances> {
    channel_variances(slab, omega, sq, Channel::Reflected)
}

/// `var_x * var_y` of the transmitted light for a lossless slab at zero
/// temperature. The reflected product is identical in that case.
pub fn uncertainty_product_lossless(slab: &SlabSpec, omega: f64, sq: &SqueezeParams) -> Result<f64> {
    let n = refractive_index(&slab.model, omega)?;
    if n.im != 0.0 {
        return Err(Error::Domain(format!("uncertainty product formula needs kappa = 0, got {}", n.im)));
    }
    if slab.temperature != 0.0 {
        return Err(Error::Domain(format!("uncertainty product formula needs T = 0, got {}", slab.temperature)));
    }
    Ok(transmitted_variances(slab, omega, sq)?.product())
}

/// Auxiliary material combinations shared by the extremum equations.
#[derive(Debug, Clone, Copy)]
struct IndexTerms {
    eta: f64,
    kappa: f64,
    eps_r: f64,
    eps_i: f64,
    eps_abs: f64,
    a_plus: f64,
    a_minus: f64,
    b_eta: f64,
    b_kappa: f64,
}

impl IndexTerms {
    fn new(n: Complex64) -> Self {
        let eps = n * n;
        let eps_abs = eps.norm();
        let a_plus = eps_abs + 1.0;
        let a_minus = eps_abs - 1.0;
        IndexTerms {
            eta: n.re,
            kappa: n.im,
            eps_r: eps.re,
            eps_i: eps.im,
            eps_abs,
            a_plus,
            a_minus,
            b_eta: a_plus * a_plus + 4.0 * n.re * n.re,
            b_kappa: a_minus * a_minus - 4.0 * n.im * n.im,
        }
    }

    /// Amplitude of the purely oscillatory part of the transmitted residual,
    /// `eta B_k sin(y) + 2 eps_i A_- cos(y)`.
    fn oscillation_amplitude(&self) -> f64 {
        (self.eta * self.b_kappa).hypot(2.0 * self.eps_i * self.a_minus)
    }
}

fn residual_at(terms: &IndexTerms, omega: f64, l: f64, channel: Channel) -> f64 {
    let x = 4.0 * omega * terms.kappa * l / C;
    let y = 4.0 * omega * terms.eta * l / C;
    let t = terms;
    match channel {
        Channel::Transmitted => {
            t.kappa * t.b_eta * x.sinh()
                + t.eta * t.b_kappa * y.sin()
                + 2.0 * t.eps_i * (t.a_plus * x.cosh() + t.a_minus * y.cos())
        }
        Channel::Reflected => {
            (2.0 * t.kappa * t.eps_abs * x.sinh() + t.eps_i * x.cosh()) * y.cos() - t.eps_i
                + (2.0 * t.eta * t.eps_abs * x.cosh() + (t.eps_abs * t.eps_abs + t.eps_r) * x.sinh()) * y.sin()
        }
    }
}

/// Left-hand side of the extremum condition in `l` for `|C|^2` of the given
/// channel (thermal noise neglected). Zero exactly at the extrema of the
/// channel's variances.
///
/// The equation is evaluated with `n(omega)`, so any dielectric model is
/// accepted; the frequency is held fixed while `l` varies.
pub fn extremum_residual(slab: &SlabSpec, omega: f64, l: f64, channel: Channel) -> Result<f64> {
    let n = refractive_index(&slab.model, omega)?;
    Ok(residual_at(&IndexTerms::new(n), omega, l, channel))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extremum {
    pub l: f64,
    /// Kind of extremum of the squeezed-quadrature variance.
    pub kind: ExtremumKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremaScan {
    pub extrema: Vec<Extremum>,
    /// Set when the range was shorter than one oscillation period.
    pub range_too_short: bool,
}

/// Squeezed-quadrature variance profile used to classify extrema. Its shape
/// in `l` depends only on `|C|^2`; unit squeezing is used.
fn classification_variance(n: Complex64, omega: f64, l: f64, channel: Channel) -> f64 {
    let mag2 = match slab_amplitudes(n, omega, l) {
        Ok((r, t)) => match channel {
            Channel::Transmitted => t.norm_sqr(),
            Channel::Reflected => r.norm_sqr(),
        },
        Err(_) => f64::NAN,
    };
    0.25 * (1.0 - mag2 * (1.0 - (-2.0f64).exp()))
}

/// All roots of the extremum residual within `l_range`, bracketed on a grid
/// of step `lambda / (40 eta)` and bisected to relative tolerance 1e-12,
/// then classified by the second difference of the variance at
/// `+-lambda / (400 eta)`.
pub fn find_extrema(slab: &SlabSpec, omega: f64, l_range: (f64, f64), channel: Channel) -> Result<ExtremaScan> {
    let n = refractive_index(&slab.model, omega)?;
    let (lo, hi) = l_range;
    if !(lo >= 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain(format!("invalid thickness range [{lo}, {hi}]")));
    }
    let wavelength = 2.0 * PI * C / omega;
    let period = wavelength / (4.0 * n.re);
    if hi - lo < period {
        log::warn!("thickness range {:e} m is shorter than one oscillation period {:e} m", hi - lo, period);
        return Ok(ExtremaScan { extrema: Vec::new(), range_too_short: true });
    }
    let terms = IndexTerms::new(n);
    let f = |l: f64| residual_at(&terms, omega, l, channel);
    let step = wavelength / (40.0 * n.re);
    let h = wavelength / (400.0 * n.re);
    let steps = ((hi - lo) / step).ceil() as usize;

    let mut roots = Vec::new();
    let mut prev = (lo, f(lo));
    if prev.1 == 0.0 {
        roots.push(lo);
    }
    for i in 1..=steps {
        let x = (lo + i as f64 * step).min(hi);
        let fx = f(x);
        if fx == 0.0 {
            roots.push(x);
        } else if prev.1 != 0.0 && (prev.1 < 0.0) != (fx < 0.0) {
            let bracket = Bracket::from_values(prev.0, x, prev.1, fx)?;
            roots.push(find_root(f, &bracket, 1e-12 * x)?);
        }
        prev = (x, fx);
    }

    let var = |l: f64| classification_variance(n, omega, l, channel);
    let extrema = roots
        .into_iter()
        .map(|l| {
            let lm = (l - h).max(0.0);
            let curvature = var(lm) + var(l + h) - 2.0 * var(l);
            let kind = if curvature > 0.0 { ExtremumKind::Min } else { ExtremumKind::Max };
            Extremum { l, kind }
        })
        .collect();
    Ok(ExtremaScan { extrema, range_too_short: false })
}

/// Half-thickness beyond which the transmitted variance no longer oscillates.
///
/// Solves `kappa B_eta sinh(x) + 2 eps_i A_+ cosh(x) = OSC` for
/// `x = 4 omega kappa l / c` in closed form, where `OSC` is the amplitude
/// `sqrt((eta B_k)^2 + (2 eps_i A_-)^2)` of the oscillatory part of the
/// residual. Returns `+inf` for a lossless slab.
pub fn l_max(slab: &SlabSpec, omega: f64) -> Result<f64> {
    let n = refractive_index(&slab.model, omega)?;
    let t = IndexTerms::new(n);
    if t.kappa == 0.0 {
        return Ok(f64::INFINITY);
    }
    let osc = t.oscillation_amplitude();
    let d = osc * osc + t.kappa * t.kappa * t.b_eta * t.b_eta;
    let disc = d - 4.0 * t.eps_i * t.eps_i * t.a_plus * t.a_plus;
    if disc < 0.0 {
        return Err(Error::NoExtremum(format!(
            "oscillation amplitude too small for any extremum (discriminant {disc:e})"
        )));
    }
    let base = -2.0 * t.eps_i * t.kappa * t.a_plus * t.b_eta;
    let scale = C / (4.0 * omega * t.kappa);
    [1.0, -1.0]
        .iter()
        .map(|s| (base + s * osc * disc.sqrt()) / d)
        .filter(|tau| tau.abs() < 1.0)
        .map(|tau| scale * tau.atanh())
        .filter(|l| *l > 0.0)
        .fold(None, |acc: Option<f64>, l| Some(acc.map_or(l, |a| a.max(l))))
        .ok_or_else(|| Error::NoExtremum("no real positive branch for l_max".into()))
}

/// Limits of the reflected variances for an infinitely thick slab,
/// `(var_x, var_y)`.
pub fn asymptotic_reflected_limits(model: &DielectricModel, omega: f64, rho: f64) -> Result<(f64, f64)> {
    if rho.is_nan() || rho < 0.0 {
        return Err(Error::InvalidParameter { name: "rho", reason: format!("must be >= 0, got {rho}") });
    }
    let n = refractive_index(model, omega)?;
    let t = IndexTerms::new(n);
    let frac = (n * n - 1.0).norm_sqr() / (t.b_eta + 4.0 * t.eta * t.a_plus);
    Ok((
        0.25 * (1.0 - (1.0 - (-2.0 * rho).exp()) * frac),
        0.25 * (1.0 + ((2.0 * rho).exp() - 1.0) * frac),
    ))
}

/// First-order-in-kappa positions of the `m`-th transmitted extremum for a
/// weakly absorbing slab. The two entries correspond to the two correction
/// terms `f = -8 kappa eta^2 / (eta^2-1)^2` and `f = 8 kappa / (eta^2-1)^2`;
/// which one applies to a given root is decided by classification.
pub fn poor_absorber_extrema(model: &DielectricModel, omega: f64, m: u32) -> Result<[f64; 2]> {
    check_omega(omega)?;
    let n = refractive_index(model, omega)?;
    let (eta, kappa) = (n.re, n.im);
    let g = (eta * eta - 1.0).powi(2);
    if g == 0.0 {
        return Err(Error::Domain("poor-absorber expansion needs eta != 1".into()));
    }
    let scale = C / (4.0 * omega * eta);
    let mpi = m as f64 * PI;
    Ok([
        scale * ((-8.0 * kappa * eta * eta / g).atan() + mpi),
        scale * ((8.0 * kappa / g).atan() + mpi),
    ])
}
