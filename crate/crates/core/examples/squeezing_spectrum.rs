//! Incident and scattered squeeze profiles and exact spectra across the band.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::continuum::{
    incident_spectrum, incident_squeeze_profile, output_pulse_params, scattered_spectrum_exact, spectral_prefactor,
    squeezing_spectrum, GaussianPulseSpec,
};
use squeezeslab::{Channel, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let wc = omega_from_wavelength(633e-9);
    let pulse = GaussianPulseSpec::new(wc, 80e-6, 1.5)?;
    let slab = SlabSpec::lossy(1e-6, 1.5, 0.002)?;
    let pt = output_pulse_params(&slab, &pulse, Channel::Transmitted)?;
    let norm = spectral_prefactor(wc, slab.sigma);
    let (lo, hi) = pulse.band();
    println!("{:>10} {:>8} {:>8} {:>12} {:>12}", "dw/wc", "rho_I", "rho_T", "S_I", "S_T");
    for i in 0..=8 {
        let w = lo + (hi - lo) * i as f64 / 8.0;
        println!(
            "{:>10.2e} {:>8.4} {:>8.4} {:>12.4e} {:>12.4e}",
            (w - wc) / wc,
            incident_squeeze_profile(&pulse, w),
            squeezing_spectrum(&pt, &pulse, w),
            incident_spectrum(&pulse, slab.sigma, w) / norm,
            scattered_spectrum_exact(&slab, &pulse, w, Channel::Transmitted)? / norm
        );
    }
    Ok(())
}
