//! Composite Simpson quadrature on uniform grids.

/// Composite Simpson rule of `f` over `[a, b]` with `intervals` (rounded up
/// to an even count) subintervals.
pub fn simpson(a: f64, b: f64, intervals: usize, f: impl Fn(f64) -> f64) -> f64 {
    let n = (intervals.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + h * i as f64);
    }
    acc * h / 3.0
}

/// Simpson weights for `n + 1` equally spaced nodes (`n` even) with spacing `h`.
pub fn simpson_weights(n: usize, h: f64) -> Vec<f64> {
    debug_assert!(n.is_multiple_of(2) && n >= 2);
    (0..=n)
        .map(|i| {
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            w * h / 3.0
        })
        .collect()
}

/// Uniform nodes on `[a, b]` together with their Simpson weights.
#[derive(Debug, Clone)]
pub struct SimpsonGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl SimpsonGrid {
    pub fn new(a: f64, b: f64, intervals: usize) -> Self {
        let n = (intervals.max(2) + 1) & !1;
        let h = (b - a) / n as f64;
        Self {
            nodes: (0..=n).map(|i| a + h * i as f64).collect(),
            weights: simpson_weights(n, h),
        }
    }

    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    pub fn spacing(&self) -> f64 {
        self.nodes[1] - self.nodes[0]
    }
}
