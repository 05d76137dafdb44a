//! Thicknesses of extremal transmitted squeezing and the oscillation cutoff.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::single_mode::{find_extrema, l_max, poor_absorber_extrema};
use squeezeslab::{Channel, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let omega = omega_from_wavelength(1064e-9);
    for kappa in [0.005, 0.0075] {
        let slab = SlabSpec::lossy(1e-6, 1.5, kappa)?;
        let lm = l_max(&slab, omega)?;
        let scan = find_extrema(&slab, omega, (2e-9, 3e-6), Channel::Transmitted)?;
        println!("kappa = {kappa}: l_max = {:.3} um", lm * 1e6);
        for e in scan.extrema.iter().take(6) {
            println!("  {:<4} at {:.5} um", e.kind.to_string(), e.l * 1e6);
        }
        let [a, b] = poor_absorber_extrema(&slab.model, omega, 1)?;
        println!("  first-order poor-absorber roots: {:.5} um, {:.5} um", a * 1e6, b * 1e6);
    }
    Ok(())
}
