//! Quadrature variances of a single squeezed mode after the slab.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::single_mode::{channel_variances, variance_vs_angle};
use squeezeslab::{Channel, SlabSpec, SqueezeParams};

fn main() -> squeezeslab::Result<()> {
    let omega = omega_from_wavelength(1064e-9);
    let sq = SqueezeParams::new(0.8, 0.0)?;
    println!("incident: {:.6} / {:.6}", 0.25 * (-1.6f64).exp(), 0.25 * 1.6f64.exp());
    for l in [0.1e-6, 0.5e-6, 2e-6, 10e-6] {
        let slab = SlabSpec::lossy(l, 1.5, 0.005)?;
        for ch in Channel::BOTH {
            let v = channel_variances(&slab, omega, &sq, ch)?;
            println!(
                "l = {:>5.1} um {ch}: var_x {:.6}  var_y {:.6}  product {:.6}  phi_opt {:+.4}",
                l * 1e6,
                v.var_x,
                v.var_y,
                v.product(),
                v.phi_opt
            );
        }
    }
    // the variance against homodyne angle is periodic in pi
    let slab = SlabSpec::lossy(1e-6, 1.5, 0.005)?;
    let a = variance_vs_angle(&slab, omega, &sq, 0.3, Channel::Transmitted)?;
    let b = variance_vs_angle(&slab, omega, &sq, 0.3 + std::f64::consts::PI, Channel::Transmitted)?;
    println!("V(0.3) = {a:.6}, V(0.3 + pi) = {b:.6}");
    Ok(())
}
