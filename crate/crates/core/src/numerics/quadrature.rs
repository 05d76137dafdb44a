use num_complex::Complex64;
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds an `n`-point rule by Newton iteration on the Legendre
    /// polynomial, starting from the Chebyshev-like asymptotic guess.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Mapped (node, weight) pairs for a composite rule with `intervals`
    /// equal panels on `[a, b]`, in ascending order.
    pub fn composite_points(&self, a: f64, b: f64, intervals: usize) -> Vec<(f64, f64)> {
        let h = (b - a) / intervals as f64;
        let mut out = Vec::with_capacity(intervals * self.len());
        for k in 0..intervals {
            let mid = a + (k as f64 + 0.5) * h;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                out.push((mid + 0.5 * h * x, 0.5 * h * w));
            }
        }
        out
    }

    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        self.integrate_composite(a, b, 1, f)
    }

    /// Composite rule with fixed-order summation.
    pub fn integrate_composite(&self, a: f64, b: f64, intervals: usize, f: impl Fn(f64) -> f64) -> f64 {
        self.composite_points(a, b, intervals)
            .into_iter()
            .map(|(x, w)| w * f(x))
            .sum()
    }

    pub fn integrate_composite_complex(
        &self,
        a: f64,
        b: f64,
        intervals: usize,
        f: impl Fn(f64) -> Complex64,
    ) -> Complex64 {
        self.composite_points(a, b, intervals)
            .into_iter()
            .map(|(x, w)| f(x) * w)
            .sum()
    }
}

/// Legendre polynomial P_n(x) and its derivative.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Simpson rule over uniformly spaced samples (odd count; an even
/// count falls back to a trapezoid on the last cell).
pub fn simpson(samples: &[f64], dx: f64) -> f64 {
    let n = samples.len();
    if n < 2 {
        return 0.0;
    }
    if n == 2 {
        return 0.5 * dx * (samples[0] + samples[1]);
    }
    let m = if n % 2 == 1 { n } else { n - 1 };
    let mut s = samples[0] + samples[m - 1];
    for (i, v) in samples[1..m - 1].iter().enumerate() {
        s += if i % 2 == 0 { 4.0 * v } else { 2.0 * v };
    }
    let mut total = s * dx / 3.0;
    if m < n {
        total += 0.5 * dx * (samples[n - 2] + samples[n - 1]);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 64, 128] {
            let gl = GaussLegendre::new(n);
            let s: f64 = gl.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n = {n}: {s}");
        }
    }

    #[test]
    fn exact_for_polynomials() {
        let gl = GaussLegendre::new(8);
        // degree 15 integrates exactly
        let v = gl.integrate(0.0, 2.0, |x| x.powi(15));
        assert!((v - 2f64.powi(16) / 16.0).abs() < 1e-9);
    }

    #[test]
    fn composite_gaussian() {
        let gl = GaussLegendre::new(64);
        let v = gl.integrate_composite(-8.0, 8.0, 16, |x| (-x * x).exp());
        assert!((v - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn simpson_cubic_exact() {
        let dx = 0.1;
        let ys: Vec<f64> = (0..=20).map(|i| (i as f64 * dx).powi(3)).collect();
        assert!((simpson(&ys, dx) - 4.0).abs() < 1e-12);
    }
}
