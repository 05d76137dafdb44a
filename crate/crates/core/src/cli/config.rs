use clap::{Parser, ValueEnum};
use serde::Serialize;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::constants::{omega_from_wavelength, C};
use crate::continuum::NarrowbandThresholds;
use crate::error::{Error, Result};
use crate::slab::Channel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Scattering coefficients along a sweep.
    Coefficients,
    /// Transmitted and reflected quadrature variances versus half-thickness.
    Variances,
    /// Variance extrema and the oscillation cutoff l_max.
    Extrema,
    /// Incident and scattered squeezing spectra across the pulse band.
    Spectrum,
    /// Narrow-band output pulse parameters versus carrier index.
    Pulseparams,
    /// Poynting flux of the scattered pulse versus time.
    Poynting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepVar {
    L,
    Eta,
    Kappa,
    Omega,
    T,
}

impl fmt::Display for SweepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepVar::L => "l",
            SweepVar::Eta => "eta",
            SweepVar::Kappa => "kappa",
            SweepVar::Omega => "omega",
            SweepVar::T => "t",
        })
    }
}

/// Inclusive uniform sweep `var:from:to:points`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sweep {
    pub variable: SweepVar,
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

impl Sweep {
    pub fn new(variable: SweepVar, from: f64, to: f64, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::Config(format!("sweep needs at least 2 points, got {points}")));
        }
        if !(from.is_finite() && to.is_finite() && from < to) {
            return Err(Error::Config(format!("empty sweep range [{from}, {to}]")));
        }
        Ok(Sweep { variable, from, to, points })
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.to - self.from) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i + 1 == self.points { self.to } else { self.from + i as f64 * step })
            .collect()
    }
}

impl FromStr for Sweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Config(format!("sweep `{s}` is not of the form var:from:to:points")));
        }
        let variable = match parts[0] {
            "l" => SweepVar::L,
            "eta" => SweepVar::Eta,
            "kappa" => SweepVar::Kappa,
            "omega" => SweepVar::Omega,
            "t" => SweepVar::T,
            other => return Err(Error::Config(format!("unknown sweep variable `{other}`"))),
        };
        let num = |p: &str| p.parse::<f64>().map_err(|_| Error::Config(format!("bad number `{p}` in sweep")));
        let points = parts[3].parse::<usize>().map_err(|_| Error::Config(format!("bad point count `{}`", parts[3])))?;
        Sweep::new(variable, num(parts[1])?, num(parts[2])?, points)
    }
}

/// Command-line arguments. Unset physical options fall back to the preset,
/// then to built-in defaults.
#[derive(Debug, Clone, Parser)]
#[command(name = "squeezeslab", version, about = "Squeezed light scattered by a lossy dielectric slab")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Real refractive index (carrier value for pulses).
    #[arg(long)]
    pub eta: Option<f64>,
    /// Extinction coefficient.
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Vacuum wavelength (carrier for pulses), m.
    #[arg(long)]
    pub wavelength: Option<f64>,
    /// Slab half-thickness l, m.
    #[arg(long = "half-thickness")]
    pub half_thickness: Option<f64>,
    /// Squeeze magnitude (peak value for pulses).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Squeeze phase, rad.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Slab temperature, K.
    #[arg(long)]
    pub temp: Option<f64>,
    /// Quantization area, m^2.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Root-mean-square pulse length L_I, m.
    #[arg(long = "pulse-length")]
    pub pulse_length: Option<f64>,
    /// Real coherent peak amplitude of the pulse.
    #[arg(long)]
    pub alpha0: Option<f64>,
    /// Observation position for the Poynting flux, m.
    #[arg(long)]
    pub x: Option<f64>,
    /// Output channel for single-channel commands (T or R).
    #[arg(long)]
    pub channel: Option<Channel>,
    /// Sweep as var:from:to:points with var in l, eta, kappa, omega, t.
    #[arg(long)]
    pub sweep: Option<Sweep>,
    /// Minimum L_I / (2 l eta) for a valid narrow-band result.
    #[arg(long = "length-factor")]
    pub length_factor: Option<f64>,
    /// Minimum relative size of the frequency-shift denominator.
    #[arg(long = "denominator-rel")]
    pub denominator_rel: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Fully resolved run parameters, echoed in JSON output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub preset: Option<Preset>,
    pub eta: f64,
    pub kappa: f64,
    pub wavelength: f64,
    pub half_thickness: f64,
    pub rho: f64,
    pub theta: f64,
    pub temperature: f64,
    pub sigma: f64,
    pub pulse_length: f64,
    pub alpha0: f64,
    pub x: f64,
    pub channel: Channel,
    pub sweep: Sweep,
    pub thresholds: NarrowbandThresholds,
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn omega(&self) -> f64 {
        omega_from_wavelength(self.wavelength)
    }

    pub fn from_args(args: &Args) -> Result<Self> {
        let base = Base::for_preset(args.preset);
        let mut cfg = RunConfig {
            command: args.command,
            preset: args.preset,
            eta: args.eta.unwrap_or(base.eta),
            kappa: args.kappa.unwrap_or(base.kappa),
            wavelength: args.wavelength.unwrap_or(base.wavelength),
            half_thickness: args.half_thickness.unwrap_or(base.half_thickness),
            rho: args.rho.unwrap_or(base.rho),
            theta: args.theta.unwrap_or(0.0),
            temperature: args.temp.unwrap_or(0.0),
            sigma: args.sigma.unwrap_or(1.0),
            pulse_length: args.pulse_length.unwrap_or(base.pulse_length),
            alpha0: args.alpha0.unwrap_or(1.0),
            x: args.x.unwrap_or(0.0),
            channel: args.channel.unwrap_or(Channel::Transmitted),
            // placeholder until the command default is known
            sweep: Sweep { variable: SweepVar::L, from: 0.0, to: 1.0, points: 2 },
            thresholds: NarrowbandThresholds {
                length_factor: args.length_factor.unwrap_or(NarrowbandThresholds::default().length_factor),
                denominator_rel: args.denominator_rel.unwrap_or(NarrowbandThresholds::default().denominator_rel),
            },
            format: args.format,
            out: args.out.clone(),
        };
        cfg.sweep = match args.sweep {
            Some(s) => s,
            None => cfg.default_sweep()?,
        };
        cfg.check()?;
        Ok(cfg)
    }

    fn default_sweep(&self) -> Result<Sweep> {
        let preset = self.preset;
        let s = match self.command {
            Command::Coefficients | Command::Variances | Command::Extrema => match preset {
                Some(Preset::Fig2) => Sweep::new(SweepVar::L, 2e-9, 20e-6, 10_000)?,
                Some(Preset::Fig3) => Sweep::new(SweepVar::L, 2e-9, 200e-6, 100_000)?,
                _ => Sweep::new(SweepVar::L, 2e-9, 20e-6, 10_000)?,
            },
            Command::Pulseparams => Sweep::new(SweepVar::Eta, 1.05, 3.0, 200)?,
            Command::Spectrum => {
                let wc = self.omega();
                let half = 8.0 * C / self.pulse_length;
                Sweep::new(SweepVar::Omega, wc - half, wc + half, 4097)?
            }
            Command::Poynting => {
                let scale = self.pulse_length / C;
                let tail = 4.0 * self.half_thickness * self.eta / C;
                Sweep::new(SweepVar::T, self.x / C - 5.0 * scale, self.x / C + 5.0 * scale + tail, 1001)?
            }
        };
        Ok(s)
    }

    fn check(&self) -> Result<()> {
        use SweepVar::*;
        let allowed: &[SweepVar] = match self.command {
            Command::Coefficients => &[L, Eta, Kappa, Omega],
            Command::Variances | Command::Extrema => &[L],
            Command::Spectrum => &[Omega],
            Command::Pulseparams => &[Eta],
            Command::Poynting => &[T],
        };
        if !allowed.contains(&self.sweep.variable) {
            return Err(Error::Config(format!(
                "command {:?} cannot sweep `{}`",
                self.command, self.sweep.variable
            )));
        }
        let positive = [
            ("wavelength", self.wavelength),
            ("sigma", self.sigma),
            ("pulse-length", self.pulse_length),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("--{name} must be > 0, got {v}")));
            }
        }
        let nonneg = [
            ("half-thickness", self.half_thickness),
            ("kappa", self.kappa),
            ("rho", self.rho),
            ("temp", self.temperature),
        ];
        for (name, v) in nonneg {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("--{name} must be >= 0, got {v}")));
            }
        }
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return Err(Error::Config(format!("--eta must be > 0, got {}", self.eta)));
        }
        let s = self.sweep;
        let bad_lower = match s.variable {
            L | Kappa => s.from < 0.0,
            Eta | Omega => s.from <= 0.0,
            T => false,
        };
        if bad_lower {
            return Err(Error::Config(format!("sweep of `{}` starts outside its domain at {}", s.variable, s.from)));
        }
        Ok(())
    }
}

/// Parameter set behind a preset.
struct Base {
    eta: f64,
    kappa: f64,
    wavelength: f64,
    half_thickness: f64,
    rho: f64,
    pulse_length: f64,
}

impl Base {
    fn for_preset(preset: Option<Preset>) -> Self {
        let single_mode = Base { eta: 1.5, kappa: 0.005, wavelength: 1064e-9, half_thickness: 1e-6, rho: 0.8, pulse_length: 80e-6 };
        let pulse = Base { eta: 1.5, kappa: 0.002, wavelength: 633e-9, half_thickness: 1e-6, rho: 1.5, pulse_length: 80e-6 };
        match preset {
            None => Base { kappa: 0.0, ..single_mode },
            Some(Preset::Fig2) => single_mode,
            Some(Preset::Fig3) => Base { kappa: 0.0075, ..single_mode },
            Some(Preset::Fig4 | Preset::Fig5 | Preset::Fig6 | Preset::Fig7) => pulse,
        }
    }
}
