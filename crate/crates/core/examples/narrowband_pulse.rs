//! Frequency shift, length and effective squeezing of a scattered pulse.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::continuum::{output_pulse_params, GaussianPulseSpec};
use squeezeslab::{Channel, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let wc = omega_from_wavelength(633e-9);
    let pulse = GaussianPulseSpec::new(wc, 80e-6, 1.5)?;
    println!("{:>6} {:>4} {:>12} {:>10} {:>10} {:>6}", "eta", "ch", "dw/wc", "L_I^2/L^2", "rho'/rho", "valid");
    for eta in [1.05, 1.2, 1.5, 2.0, 3.0] {
        let slab = SlabSpec::lossy(1e-6, eta, 0.002)?;
        for ch in Channel::BOTH {
            let p = output_pulse_params(&slab, &pulse, ch)?;
            println!(
                "{eta:>6.2} {ch:>4} {:>12.3e} {:>10.6} {:>10.6} {:>6}",
                p.delta_omega / wc,
                pulse.length.powi(2) / p.length_sq,
                p.rho_eff / pulse.rho_i,
                p.valid
            );
        }
    }
    Ok(())
}
