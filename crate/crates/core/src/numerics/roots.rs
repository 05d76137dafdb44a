use crate::error::{Error, Result};

/// An interval on which a real function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Evaluates `f` at both ends and checks for a strict sign change.
    pub fn new(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<Self> {
        Self::from_values(lo, hi, f(lo), f(hi))
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let (lo, hi, f_lo, f_hi) = if lo <= hi {
            (lo, hi, f_lo, f_hi)
        } else {
            (hi, lo, f_hi, f_lo)
        };
        if (f_lo * f_hi).is_nan() || f_lo * f_hi >= 0.0 || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(Bracket { lo, hi, f_lo, f_hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Bisection on a valid bracket until its width is below `tol`.
///
/// Convergence is guaranteed; the number of function evaluations is at most
/// `ceil(log2((hi - lo) / tol))`.
pub fn find_root(f: impl Fn(f64) -> f64, bracket: &Bracket, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("root tolerance must be positive, got {tol}")));
    }
    let Bracket { mut lo, mut hi, mut f_lo, f_hi } = *bracket;
    if (f_lo * f_hi).is_nan() || f_lo * f_hi >= 0.0 {
        return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cell::Cell;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn cosine_root() {
        let b = Bracket::new(f64::cos, 1.0, 2.0).unwrap();
        let r = find_root(f64::cos, &b, 1e-13).unwrap();
        assert!((r - FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn rejects_same_sign() {
        assert!(matches!(
            Bracket::new(|x| x * x + 1.0, -1.0, 1.0),
            Err(Error::InvalidBracket { .. })
        ));
        let bogus = Bracket { lo: 0.0, hi: 1.0, f_lo: 1.0, f_hi: 2.0 };
        assert!(find_root(|x| x, &bogus, 1e-6).is_err());
    }

    #[test]
    fn iteration_bound() {
        let calls = Cell::new(0usize);
        let f = |x: f64| {
            calls.set(calls.get() + 1);
            x - 0.3
        };
        let b = Bracket::from_values(0.0, 1.0, -0.3, 0.7).unwrap();
        let tol = 1e-9;
        find_root(f, &b, tol).unwrap();
        let bound = ((b.width() / tol).log2()).ceil() as usize;
        assert!(calls.get() <= bound, "{} > {}", calls.get(), bound);
    }

    proptest! {
        // Roots of a factored cubic are recovered from any bracket that
        // isolates exactly one of them.
        #[test]
        fn cubic_roots(a in -5.0f64..-1.0, b in -0.5f64..0.5, c in 1.0f64..5.0) {
            let f = |x: f64| (x - a) * (x - b) * (x - c);
            for (root, lo, hi) in [(a, a - 0.4, 0.5 * (a + b)), (b, 0.5 * (a + b), 0.5 * (b + c)), (c, 0.5 * (b + c), c + 0.7)] {
                let br = Bracket::new(f, lo, hi).unwrap();
                let x = find_root(f, &br, 1e-12).unwrap();
                prop_assert!((x - root).abs() < 1e-11);
            }
        }
    }
}
