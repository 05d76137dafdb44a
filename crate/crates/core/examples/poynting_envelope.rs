//! Time-resolved Poynting flux of a coherent pulse behind the slab, with the
//! energy balance checked by Parseval.

use num_complex::Complex64;
use squeezeslab::constants::{omega_from_wavelength, C};
use squeezeslab::continuum::GaussianPulseSpec;
use squeezeslab::poynting::{parseval_check, PoyntingField};
use squeezeslab::{Channel, SlabSpec};

fn main() -> squeezeslab::Result<()> {
    let pulse = GaussianPulseSpec::new(omega_from_wavelength(633e-9), 80e-6, 1.5)?.with_coherent(Complex64::new(1.0, 0.0));
    let slab = SlabSpec::lossy(1e-6, 1.5, 0.002)?.with_temperature(300.0);
    let span = 4.0 * pulse.length / C;
    let field = PoyntingField::new(&slab, &pulse, Channel::Transmitted, span)?;
    for i in -4..=4 {
        let t = i as f64 * pulse.length / C;
        let s = field.sample(0.0, t)?;
        println!(
            "t = {:>+9.3e} s: coherent {:.4e}  squeezed {:.4e}  thermal {:.4e}",
            t, s.coherent, s.squeezed, s.thermal
        );
    }
    for ch in Channel::BOTH {
        let p = parseval_check(&slab, &pulse, ch)?;
        println!("{ch}: time integral {:.6e}, spectral integral {:.6e}, rel {:.1e}", p.lhs, p.rhs, p.rel_err);
    }
    Ok(())
}
