//! Quartic potentials `U(x) = a4 x^4/4 + a3 x^3/3 + a2 x^2/2 + a1 x + a0`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarticPotential {
    pub a4: f64,
    pub a3: f64,
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl QuarticPotential {
    pub fn new(a4: f64, a3: f64, a2: f64, a1: f64, a0: f64) -> Self {
        Self { a4, a3, a2, a1, a0 }
    }

    /// Symmetric double well `C (x^2 - x_s^2)^2` with `C = m omega^2 / (8 x_s^2)`.
    ///
    /// Minima sit at `±x_s` with zero energy and share the curvature
    /// `m omega^2` of the reference oscillator; the barrier height is
    /// `m omega^2 x_s^2 / 8`.
    pub fn symmetric_double_well(m: f64, omega: f64, x_s: f64) -> Result<Self> {
        ensure(m > 0.0 && omega > 0.0 && x_s > 0.0, || {
            format!("double well needs m, omega, x_s > 0 (got {m}, {omega}, {x_s})")
        })?;
        let k = m * omega * omega;
        Ok(Self {
            a4: k / (2.0 * x_s * x_s),
            a3: 0.0,
            a2: -k / 2.0,
            a1: 0.0,
            a0: k * x_s * x_s / 8.0,
        })
    }

    /// Anharmonic oscillator `x^2/2 + b x^4/4` (unit mass and frequency).
    pub fn anharmonic(b: f64) -> Self {
        Self::new(b, 0.0, 1.0, 0.0, 0.0)
    }

    /// Pure harmonic well `m omega^2 x^2 / 2`.
    pub fn harmonic(m: f64, omega: f64) -> Self {
        Self::new(0.0, 0.0, m * omega * omega, 0.0, 0.0)
    }

    /// `U^(order)(x)` for `order` in `0..=4`.
    pub fn eval(&self, x: f64, order: usize) -> Result<f64> {
        match order {
            0..=4 => Ok(self.derivatives(x)[order]),
            _ => Err(Error::DerivativeOrder(order)),
        }
    }

    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        let x2 = x * x;
        self.a4 * x2 * x2 / 4.0 + self.a3 * x2 * x / 3.0 + self.a2 * x2 / 2.0 + self.a1 * x + self.a0
    }

    /// `[U, U', U'', U''', U'''']` at `x`. Higher derivatives vanish.
    #[inline]
    pub fn derivatives(&self, x: f64) -> [f64; 5] {
        let x2 = x * x;
        [
            self.value(x),
            self.a4 * x2 * x + self.a3 * x2 + self.a2 * x + self.a1,
            3.0 * self.a4 * x2 + 2.0 * self.a3 * x + self.a2,
            6.0 * self.a4 * x + 2.0 * self.a3,
            6.0 * self.a4,
        ]
    }

    pub fn is_symmetric(&self) -> bool {
        self.a3 == 0.0 && self.a1 == 0.0
    }

    /// Real stationary points (roots of `U'`), ascending.
    pub fn stationary_points(&self) -> Vec<f64> {
        let c = [self.a4, self.a3, self.a2, self.a1];
        let lead = c.iter().position(|v| *v != 0.0);
        let Some(lead) = lead else { return Vec::new() };
        if lead == 3 {
            return Vec::new();
        }
        // Cauchy bound on the roots of the derivative polynomial.
        let bound = 1.0 + c[lead + 1..].iter().map(|v| (v / c[lead]).abs()).fold(0.0, f64::max);
        let d1 = |x: f64| self.derivatives(x)[1];
        let samples = 4096;
        let step = 2.0 * bound / samples as f64;
        let mut roots = Vec::new();
        let mut xa = -bound;
        let mut fa = d1(xa);
        for i in 1..=samples {
            let xb = -bound + step * i as f64;
            let fb = d1(xb);
            if fa == 0.0 {
                roots.push(xa);
            } else if fa * fb < 0.0 {
                roots.push(bisect(d1, xa, xb));
            }
            xa = xb;
            fa = fb;
        }
        roots
    }
}

/// Bisection on a bracketing interval, run to floating-point resolution.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const XS: f64 = 2.0 * std::f64::consts::SQRT_2;

    fn sdw() -> QuarticPotential {
        QuarticPotential::symmetric_double_well(1.0, 1.0, XS).unwrap()
    }

    #[test]
    fn double_well_coefficients() {
        let u = sdw();
        assert_abs_diff_eq!(u.a4, 1.0 / 16.0, epsilon = 1e-15);
        assert_abs_diff_eq!(u.a2, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(u.a0, 1.0, epsilon = 1e-14);
        let v = QuarticPotential::symmetric_double_well(1.0, 1.0, 1.0).unwrap();
        assert_eq!((v.a4, v.a2, v.a0), (0.5, -0.5, 0.125));
    }

    #[test]
    fn double_well_values() {
        let u = sdw();
        assert_abs_diff_eq!(u.eval(0.0, 0).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(u.eval(XS, 0).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(u.eval(XS, 2).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(u.eval(-XS, 2).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(u.eval(XS, 1).unwrap(), 0.0, epsilon = 1e-14);
        assert_eq!(u.eval(0.0, 1).unwrap(), 0.0);
        assert_abs_diff_eq!(u.eval(3.0, 4).unwrap(), 6.0 / 16.0, epsilon = 1e-15);
    }

    #[test]
    fn anharmonic_value() {
        let u = QuarticPotential::anharmonic(0.1);
        assert_abs_diff_eq!(u.eval(2.0, 0).unwrap(), 2.4, epsilon = 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(sdw().eval(0.0, 5), Err(Error::DerivativeOrder(5))));
        assert!(QuarticPotential::symmetric_double_well(0.0, 1.0, 1.0).is_err());
        assert!(QuarticPotential::symmetric_double_well(1.0, -1.0, 1.0).is_err());
        assert!(QuarticPotential::symmetric_double_well(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn double_well_stationary_points() {
        let pts = sdw().stationary_points();
        assert_eq!(pts.len(), 3);
        assert_abs_diff_eq!(pts[0], -XS, epsilon = 1e-12);
        assert_abs_diff_eq!(pts[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pts[2], XS, epsilon = 1e-12);
        assert!(QuarticPotential::new(0.0, 0.0, 0.0, 1.0, 0.0)
            .stationary_points()
            .is_empty());
    }

    fn presets() -> Vec<QuarticPotential> {
        vec![
            sdw(),
            QuarticPotential::anharmonic(0.1),
            QuarticPotential::harmonic(1.0, 1.0),
            QuarticPotential::new(0.3, -0.2, -1.1, 0.4, 0.7),
        ]
    }

    proptest! {
        #[test]
        fn derivatives_match_central_differences(x in -5.0f64..5.0) {
            let h = 1e-4;
            for u in presets() {
                for k in 1..=4 {
                    let fd = (u.eval(x + h, k - 1).unwrap() - u.eval(x - h, k - 1).unwrap()) / (2.0 * h);
                    let exact = u.eval(x, k).unwrap();
                    let scale = exact.abs().max(1.0);
                    prop_assert!((fd - exact).abs() <= 1e-6 * scale, "k={} x={} fd={} exact={}", k, x, fd, exact);
                }
            }
        }

        #[test]
        fn symmetric_well_is_even(x in -10.0f64..10.0) {
            let u = sdw();
            prop_assert_eq!(u.value(x), u.value(-x));
        }
    }
}
