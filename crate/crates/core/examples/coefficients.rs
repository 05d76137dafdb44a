//! Reflection and transmission of a lossy slab across a thickness sweep.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::{scatter_coefficients, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let omega = omega_from_wavelength(1064e-9);
    let slab = SlabSpec::lossy(0.0, 1.5, 0.005)?;
    println!("{:>10} {:>10} {:>10} {:>12}", "l (um)", "|R|", "|T|", "absorptance");
    for i in 0..=10 {
        let l = 0.1e-6 * i as f64;
        let c = scatter_coefficients(&slab.with_half_thickness(l), omega)?;
        println!("{:>10.2} {:>10.6} {:>10.6} {:>12.3e}", l * 1e6, c.abs_r, c.abs_t, c.absorptance);
    }
    Ok(())
}
