use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Min,
    Max,
}

impl std::fmt::Display for ExtremumKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtremumKind::Min => f.write_str("min"),
            ExtremumKind::Max => f.write_str("max"),
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of `f` on `[a, b]`, stopping once the
/// interval is narrower than `tol`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Dense scan for local extrema of `f` on `[lo, hi]`.
///
/// Every interior grid point that is strictly below (above) both neighbours is
/// refined by golden section on the two adjacent cells to `step / 100`.
/// `step` must be below half the shortest oscillation period of `f`.
pub fn grid_scan_extrema(
    f: impl Fn(f64) -> f64,
    range: (f64, f64),
    step: f64,
) -> Vec<(f64, ExtremumKind)> {
    let (lo, hi) = range;
    if step.is_nan() || step <= 0.0 || lo.is_nan() || hi.is_nan() || hi <= lo {
        return Vec::new();
    }
    let n = ((hi - lo) / step).floor() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    for i in 1..xs.len().saturating_sub(1) {
        let (a, m, b) = (ys[i - 1], ys[i], ys[i + 1]);
        let kind = if m < a && m <= b {
            ExtremumKind::Min
        } else if m > a && m >= b {
            ExtremumKind::Max
        } else {
            continue;
        };
        let tol = step / 100.0;
        let x = match kind {
            ExtremumKind::Min => golden_section_min(&f, xs[i - 1], xs[i + 1], tol),
            ExtremumKind::Max => golden_section_min(|x| -f(x), xs[i - 1], xs[i + 1], tol),
        };
        out.push((x, kind));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn sine_extrema() {
        let ext = grid_scan_extrema(f64::sin, (0.0, 4.0 * PI), PI / 20.0);
        assert_eq!(ext.len(), 4);
        for (k, (x, kind)) in ext.iter().enumerate() {
            let expected = FRAC_PI_2 + k as f64 * PI;
            assert!((x - expected).abs() < PI / 2000.0, "{x} vs {expected}");
            let want = if k % 2 == 0 { ExtremumKind::Max } else { ExtremumKind::Min };
            assert_eq!(*kind, want);
        }
    }

    #[test]
    fn golden_section_parabola() {
        let x = golden_section_min(|x| (x - 0.3).powi(2), -1.0, 2.0, 1e-9);
        assert!((x - 0.3).abs() < 1e-8);
    }

    #[test]
    fn empty_range() {
        assert!(grid_scan_extrema(f64::sin, (1.0, 0.0), 0.1).is_empty());
        assert!(grid_scan_extrema(f64::sin, (0.0, 1.0), 0.0).is_empty());
    }
}
