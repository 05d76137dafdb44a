use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
}

/// Central-difference derivative of a complex-valued function of a real
/// variable, with one level of Richardson extrapolation.
///
/// First order uses the symmetric two-point stencil, second order the
/// five-point stencil. A sensible default step is `x0 * 1e-6`.
pub fn finite_diff(
    f: impl Fn(f64) -> Complex64,
    x0: f64,
    h: f64,
    order: DerivativeOrder,
) -> Complex64 {
    match order {
        DerivativeOrder::First => {
            let d = |h: f64| (f(x0 + h) - f(x0 - h)) / (2.0 * h);
            (4.0 * d(0.5 * h) - d(h)) / 3.0
        }
        DerivativeOrder::Second => {
            let f0 = f(x0);
            let d = |h: f64| {
                (-f(x0 + 2.0 * h) + 16.0 * f(x0 + h) - 30.0 * f0 + 16.0 * f(x0 - h)
                    - f(x0 - 2.0 * h))
                    / (12.0 * h * h)
            };
            (16.0 * d(0.5 * h) - d(h)) / 15.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cexp(x: f64) -> Complex64 {
        Complex64::new(x.exp(), 0.0)
    }

    #[test]
    fn exp_at_zero() {
        let d1 = finite_diff(cexp, 0.0, 1e-3, DerivativeOrder::First);
        let d2 = finite_diff(cexp, 0.0, 1e-2, DerivativeOrder::Second);
        assert!((d1.re - 1.0).abs() < 1e-10, "{d1}");
        assert!((d2.re - 1.0).abs() < 1e-10, "{d2}");
    }

    #[test]
    fn complex_phase() {
        // d/dx exp(i 3x) = 3i exp(i 3x)
        let f = |x: f64| Complex64::new(0.0, 3.0 * x).exp();
        let x0 = 0.7;
        let d = finite_diff(f, x0, 1e-3, DerivativeOrder::First);
        let want = Complex64::new(0.0, 3.0) * f(x0);
        assert!((d - want).norm() < 1e-9);
    }

    #[test]
    fn plain_central_difference_is_second_order() {
        // Without extrapolation the error of the symmetric stencil falls by ~4
        // when the step halves.
        let f = |x: f64| x.sin();
        let d = |h: f64| (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
        let e1 = (d(1e-2) - 1f64.cos()).abs();
        let e2 = (d(5e-3) - 1f64.cos()).abs();
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
        // and the extrapolated estimate beats both
        let r = finite_diff(|x| Complex64::new(f(x), 0.0), 1.0, 1e-2, DerivativeOrder::First);
        assert!((r.re - 1f64.cos()).abs() < e2 / 100.0);
    }
}
