use rayon::prelude::*;

use super::config::{Command, RunConfig, SweepVar};
use crate::constants::C;
use crate::continuum::{
    incident_spectrum, incident_squeeze_profile, output_pulse_params_with, scattered_spectrum_exact, spectral_prefactor,
    squeezing_spectrum, GaussianPulseSpec, PulseParams,
};
use crate::error::Result;
use crate::poynting::PoyntingField;
use crate::single_mode::{channel_variances, find_extrema, l_max, SqueezeParams};
use crate::slab::{scatter_coefficients, Channel, DielectricModel, SlabSpec};
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub const COEFFICIENTS_HEADER: [&str; 6] = ["x", "abs_R", "abs_T", "delta_R", "delta_T", "absorptance"];
pub const VARIANCES_HEADER: [&str; 5] = ["l", "varX_T", "varY_T", "varX_R", "varY_R"];
pub const EXTREMA_HEADER: [&str; 4] = ["l", "kind", "varX", "varY"];
pub const SPECTRUM_HEADER: [&str; 8] = ["omega", "dw_rel", "rho_I", "rho_T", "rho_R", "S_I", "S_T", "S_R"];
pub const PULSEPARAMS_HEADER: [&str; 9] = [
    "eta_c", "dw_T_rel", "dw_R_rel", "Lratio_T", "Lratio_R", "rhoeff_T_rel", "rhoeff_R_rel", "valid_T", "valid_R",
];
pub const POYNTING_HEADER: [&str; 6] = ["x", "t", "coherent", "squeezed", "thermal", "total"];

pub fn run_command(cfg: &RunConfig) -> Result<Table> {
    log::info!("running {:?} over {} {} points", cfg.command, cfg.sweep.variable, cfg.sweep.points);
    log::info!(
        "narrow-band thresholds: length factor {}, denominator {:e}",
        cfg.thresholds.length_factor,
        cfg.thresholds.denominator_rel
    );
    match cfg.command {
        Command::Coefficients => cmd_coefficients(cfg),
        Command::Variances => cmd_variances(cfg),
        Command::Extrema => cmd_extrema(cfg),
        Command::Spectrum => cmd_spectrum(cfg),
        Command::Pulseparams => cmd_pulseparams(cfg),
        Command::Poynting => cmd_poynting(cfg),
    }
}

fn base_slab(cfg: &RunConfig) -> Result<SlabSpec> {
    SlabSpec::new(cfg.half_thickness, DielectricModel::constant(cfg.eta, cfg.kappa)?, cfg.sigma, cfg.temperature)
}

/// Slab and angular frequency at one sweep value.
fn point(cfg: &RunConfig, value: f64) -> Result<(SlabSpec, f64)> {
    let slab = base_slab(cfg)?;
    let omega = cfg.omega();
    Ok(match cfg.sweep.variable {
        SweepVar::L => (slab.with_half_thickness(value), omega),
        SweepVar::Eta => (slab.with_model(DielectricModel::constant(value, cfg.kappa)?), omega),
        SweepVar::Kappa => (slab.with_model(DielectricModel::constant(cfg.eta, value)?), omega),
        SweepVar::Omega => (slab, value),
        SweepVar::T => (slab, omega),
    })
}

fn pulse(cfg: &RunConfig, omega_c: f64) -> Result<GaussianPulseSpec> {
    Ok(GaussianPulseSpec::new(omega_c, cfg.pulse_length, cfg.rho)?.with_theta(cfg.theta))
}

/// Evaluates rows in parallel and returns them in sweep order, reporting the
/// first failing point.
fn sweep_rows(cfg: &RunConfig, row: impl Fn(f64) -> Result<Vec<Cell>> + Sync + Send) -> Result<Vec<Vec<Cell>>> {
    let results: Vec<Result<Vec<Cell>>> = cfg.sweep.values().into_par_iter().map(row).collect();
    results.into_iter().collect()
}

fn num(v: f64) -> Cell {
    Cell::Num(v)
}

pub fn cmd_coefficients(cfg: &RunConfig) -> Result<Table> {
    let rows = sweep_rows(cfg, |v| {
        let (slab, omega) = point(cfg, v)?;
        let c = scatter_coefficients(&slab, omega)?;
        Ok(vec![num(v), num(c.abs_r), num(c.abs_t), num(c.delta_r), num(c.delta_t), num(c.absorptance)])
    })?;
    Ok(Table { header: COEFFICIENTS_HEADER.to_vec(), rows })
}

pub fn cmd_variances(cfg: &RunConfig) -> Result<Table> {
    let sq = SqueezeParams::new(cfg.rho, cfg.theta)?;
    let rows = sweep_rows(cfg, |l| {
        let (slab, omega) = point(cfg, l)?;
        let t = channel_variances(&slab, omega, &sq, Channel::Transmitted)?;
        let r = channel_variances(&slab, omega, &sq, Channel::Reflected)?;
        Ok(vec![num(l), num(t.var_x), num(t.var_y), num(r.var_x), num(r.var_y)])
    })?;
    Ok(Table { header: VARIANCES_HEADER.to_vec(), rows })
}

/// Extrema of the chosen channel within the sweep range, followed by one
/// row of kind `lmax` for the transmitted oscillation cutoff.
pub fn cmd_extrema(cfg: &RunConfig) -> Result<Table> {
    let slab = base_slab(cfg)?;
    let omega = cfg.omega();
    let sq = SqueezeParams::new(cfg.rho, cfg.theta)?;
    let scan = find_extrema(&slab, omega, (cfg.sweep.from, cfg.sweep.to), cfg.channel)?;
    if scan.range_too_short {
        log::warn!("sweep range is shorter than one oscillation period; no extrema listed");
    }
    let mut rows = Vec::with_capacity(scan.extrema.len() + 1);
    for e in &scan.extrema {
        let v = channel_variances(&slab.with_half_thickness(e.l), omega, &sq, cfg.channel)?;
        rows.push(vec![num(e.l), Cell::Text(e.kind.to_string()), num(v.var_x), num(v.var_y)]);
    }
    let lm = l_max(&slab, omega)?;
    let (vx, vy) = if lm.is_finite() {
        let v = channel_variances(&slab.with_half_thickness(lm), omega, &sq, Channel::Transmitted)?;
        (v.var_x, v.var_y)
    } else {
        (f64::NAN, f64::NAN)
    };
    rows.push(vec![num(lm), Cell::Text("lmax".into()), num(vx), num(vy)]);
    Ok(Table { header: EXTREMA_HEADER.to_vec(), rows })
}

pub fn cmd_pulseparams(cfg: &RunConfig) -> Result<Table> {
    let omega_c = cfg.omega();
    let p = pulse(cfg, omega_c)?;
    let li2 = cfg.pulse_length * cfg.pulse_length;
    let rows = sweep_rows(cfg, |eta| {
        let (slab, _) = point(cfg, eta)?;
        let t = output_pulse_params_with(&slab, &p, Channel::Transmitted, &cfg.thresholds)?;
        let r = output_pulse_params_with(&slab, &p, Channel::Reflected, &cfg.thresholds)?;
        let lratio = |q: &PulseParams| li2 / q.length_sq;
        let rho_rel = |q: &PulseParams| q.rho_eff / cfg.rho;
        Ok(vec![
            num(eta),
            num(t.delta_omega / omega_c),
            num(r.delta_omega / omega_c),
            num(lratio(&t)),
            num(lratio(&r)),
            num(rho_rel(&t)),
            num(rho_rel(&r)),
            Cell::Bool(t.valid),
            Cell::Bool(r.valid),
        ])
    })?;
    Ok(Table { header: PULSEPARAMS_HEADER.to_vec(), rows })
}

/// Squeeze profiles and exact squeezed-vacuum spectra, normalized by
/// `hbar omega_c / (2 eps0 c sigma)`.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Table> {
    let omega_c = cfg.omega();
    let p = pulse(cfg, omega_c)?;
    let slab = base_slab(cfg)?;
    let pt = output_pulse_params_with(&slab, &p, Channel::Transmitted, &cfg.thresholds)?;
    let pr = output_pulse_params_with(&slab, &p, Channel::Reflected, &cfg.thresholds)?;
    for q in [&pt, &pr] {
        if !q.valid {
            log::warn!("narrow-band description not valid for channel {}", q.channel);
        }
    }
    let norm = spectral_prefactor(omega_c, slab.sigma);
    let profile = |q: &PulseParams, w: f64| if q.rho_gamma.is_nan() { f64::NAN } else { squeezing_spectrum(q, &p, w) };
    let rows = sweep_rows(cfg, |w| {
        Ok(vec![
            num(w),
            num((w - omega_c) / omega_c),
            num(incident_squeeze_profile(&p, w)),
            num(profile(&pt, w)),
            num(profile(&pr, w)),
            num(incident_spectrum(&p, slab.sigma, w) / norm),
            num(scattered_spectrum_exact(&slab, &p, w, Channel::Transmitted)? / norm),
            num(scattered_spectrum_exact(&slab, &p, w, Channel::Reflected)? / norm),
        ])
    })?;
    Ok(Table { header: SPECTRUM_HEADER.to_vec(), rows })
}

pub fn cmd_poynting(cfg: &RunConfig) -> Result<Table> {
    let p = pulse(cfg, cfg.omega())?.with_coherent(Complex64::new(cfg.alpha0, 0.0));
    let slab = base_slab(cfg)?;
    let retarded = |t: f64| t - cfg.x / C;
    let span = retarded(cfg.sweep.from).abs().max(retarded(cfg.sweep.to).abs());
    let field = PoyntingField::new(&slab, &p, cfg.channel, span)?;
    let rows = sweep_rows(cfg, |t| {
        let s = field.sample(cfg.x, t)?;
        Ok(vec![num(s.x), num(s.t), num(s.coherent), num(s.squeezed), num(s.thermal), num(s.total)])
    })?;
    Ok(Table { header: POYNTING_HEADER.to_vec(), rows })
}
