//! A short pulse leaves a thick slab as a train of echoes; compare the
//! closed-form train with direct synthesis. The closed form applies the
//! single-pass absorption to every echo, so later echoes exceed the
//! synthesis by the extra round-trip loss.

use num_complex::Complex64;
use squeezeslab::constants::{omega_from_wavelength, C};
use squeezeslab::continuum::GaussianPulseSpec;
use squeezeslab::poynting::{free_space_peak, pulse_train, CoherentSynthesis};
use squeezeslab::{Channel, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let (l, eta) = (10e-6, 1.5);
    let slab = SlabSpec::lossy(l, eta, 0.002)?;
    let pulse = GaussianPulseSpec::new(omega_from_wavelength(633e-9), 2.0 * l * eta / 10.0, 1.5)?
        .with_coherent(Complex64::new(1.0, 0.0));
    let s0 = free_space_peak(&pulse, 1.0)?;
    let first = 2.0 * l * (eta - 1.0) / C;
    let spacing = 4.0 * l * eta / C;
    let direct = CoherentSynthesis::new(&slab, &pulse, Channel::Transmitted, first + 3.0 * spacing)?;
    for k in 0..3 {
        let t = first + k as f64 * spacing;
        println!(
            "echo {k} at {:.3e} s: train {:.4e}  direct {:.4e}  (S0 = {s0:.4e})",
            t,
            pulse_train(&slab, &pulse, s0, 0.0, t)?,
            direct.eval(t)?
        );
    }
    Ok(())
}
