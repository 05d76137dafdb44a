//! Reflected variances of a very thick absorbing slab approach fixed limits.

use squeezeslab::constants::omega_from_wavelength;
use squeezeslab::single_mode::{asymptotic_reflected_limits, channel_variances};
use squeezeslab::{Channel, DielectricModel, SlabSpec, SqueezeParams};

fn main() -> squeezeslab::Result<()> {
    let lambda = 1064e-9;
    let omega = omega_from_wavelength(lambda);
    let model = DielectricModel::constant(1.5, 0.0075)?;
    let sq = SqueezeParams::new(0.8, 0.0)?;
    let (x, y) = asymptotic_reflected_limits(&model, omega, 0.8)?;
    println!("limits: var_x {x:.6}  var_y {y:.6}");
    for n in [10.0, 50.0, 100.0, 500.0] {
        let slab = SlabSpec::new(n * lambda, model, 1.0, 0.0)?;
        let v = channel_variances(&slab, omega, &sq, Channel::Reflected)?;
        println!("l = {n:>5} lambda: var_x {:.6}  var_y {:.6}", v.var_x, v.var_y);
    }
    Ok(())
}
