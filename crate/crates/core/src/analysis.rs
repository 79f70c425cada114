//! Period, extremum and shape estimators for sampled time series.

use crate::par::{map_range, Exec};

/// Centered moving average with an odd `window` (even values are bumped up);
/// the window shrinks symmetrically near the ends.
pub fn moving_average(y: &[f64], window: usize) -> Vec<f64> {
    let half = window / 2;
    let n = y.len();
    let mut prefix = vec![0.0; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + y[i];
    }
    (0..n)
        .map(|i| {
            let h = half.min(i).min(n - 1 - i);
            (prefix[i + h + 1] - prefix[i - h]) / (2 * h + 1) as f64
        })
        .collect()
}

/// Linearly interpolated sign changes of `y`.
pub fn zero_crossings(t: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 1..y.len().min(t.len()) {
        let (a, b) = (y[i - 1], y[i]);
        if a == 0.0 {
            if i == 1 || y[i - 2].signum() != b.signum() {
                out.push(t[i - 1]);
            }
        } else if a * b < 0.0 {
            out.push(t[i - 1] + (t[i] - t[i - 1]) * a / (a - b));
        }
    }
    out
}

/// Twice the mean spacing of the zero crossings of `y - mean(y)`, after a
/// moving average over `smoothing` samples (1 = none).
pub fn zero_crossing_period(t: &[f64], y: &[f64], smoothing: usize) -> Option<f64> {
    let y = if smoothing > 1 {
        moving_average(y, smoothing)
    } else {
        y.to_vec()
    };
    let mean = y.iter().sum::<f64>() / y.len().max(1) as f64;
    let centered: Vec<f64> = y.iter().map(|v| v - mean).collect();
    let z = zero_crossings(t, &centered);
    if z.len() < 2 {
        return None;
    }
    Some(2.0 * (z[z.len() - 1] - z[0]) / (z.len() - 1) as f64)
}

/// Interior local maxima, each refined by a parabola through the three
/// neighbouring samples. Plateaus count once.
pub fn local_maxima(t: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..y.len().saturating_sub(1) {
        if y[i] > y[i - 1] && y[i] >= y[i + 1] {
            let (a, b, c) = (y[i - 1], y[i], y[i + 1]);
            let denom = a - 2.0 * b + c;
            let h = t[i + 1] - t[i];
            if denom < 0.0 {
                let s = 0.5 * (a - c) / denom;
                out.push((t[i] + s * h, b - 0.25 * (a - c) * s));
            } else {
                out.push((t[i], b));
            }
        }
    }
    out
}

pub fn local_minima(t: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let neg: Vec<f64> = y.iter().map(|v| -v).collect();
    local_maxima(t, &neg).into_iter().map(|(a, b)| (a, -b)).collect()
}

/// Mean spacing between successive local maxima.
pub fn peak_to_peak_period(t: &[f64], y: &[f64]) -> Option<f64> {
    let m = local_maxima(t, y);
    if m.len() < 2 {
        return None;
    }
    Some((m[m.len() - 1].0 - m[0].0) / (m.len() - 1) as f64)
}

/// `(min, max)` over samples with `t >= t_from`.
pub fn extrema(t: &[f64], y: &[f64], t_from: f64) -> Option<(f64, f64)> {
    let mut it = t.iter().zip(y).filter(|(t, _)| **t >= t_from).map(|(_, v)| *v);
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v))))
}

/// Period of the strongest spectral line with period in `[p_min, p_max]`.
///
/// The mean is removed, a Hann window spans the record, and the power
/// `|sum w y exp(-2 pi i f t)|^2` is scanned on a frequency grid eight times
/// finer than the record's resolution, then refined by a parabola. Samples
/// may be unevenly spaced.
pub fn dominant_period(t: &[f64], y: &[f64], p_min: f64, p_max: f64) -> Option<f64> {
    dominant_period_with(t, y, p_min, p_max, Exec::default())
}

pub fn dominant_period_with(t: &[f64], y: &[f64], p_min: f64, p_max: f64, exec: Exec) -> Option<f64> {
    let n = t.len().min(y.len());
    if n < 4 || !(p_min > 0.0 && p_max > p_min) {
        return None;
    }
    let (t0, t1) = (t[0], t[n - 1]);
    let span = t1 - t0;
    if span <= 0.0 {
        return None;
    }
    let mean = y[..n].iter().sum::<f64>() / n as f64;
    let w: Vec<f64> = (0..n)
        .map(|i| {
            let s = (t[i] - t0) / span;
            (y[i] - mean) * (std::f64::consts::PI * s).sin().powi(2)
        })
        .collect();
    let (f_lo, f_hi) = (1.0 / p_max, 1.0 / p_min);
    let df = 1.0 / (8.0 * span);
    let count = ((f_hi - f_lo) / df).ceil() as usize + 1;
    let freq = |k: usize| f_lo + (f_hi - f_lo) * k as f64 / (count - 1).max(1) as f64;
    let power = map_range(exec, count, |k| {
        let omega = 2.0 * std::f64::consts::PI * freq(k);
        let (mut re, mut im) = (0.0, 0.0);
        for i in 0..n {
            let (s, c) = (omega * (t[i] - t0)).sin_cos();
            re += w[i] * c;
            im -= w[i] * s;
        }
        re * re + im * im
    });
    let best = (0..count).max_by(|&a, &b| power[a].total_cmp(&power[b]))?;
    if power[best] <= 0.0 {
        return None;
    }
    let mut f = freq(best);
    if best > 0 && best + 1 < count {
        let (a, b, c) = (power[best - 1], power[best], power[best + 1]);
        let denom = a - 2.0 * b + c;
        if denom < 0.0 {
            f += 0.5 * (a - c) / denom * (freq(best + 1) - freq(best));
        }
    }
    Some(1.0 / f)
}

/// Envelope period of a modulated oscillation: the carrier's local maxima
/// form an unevenly sampled series whose dominant period is returned.
pub fn envelope_period(t: &[f64], y: &[f64], p_min: f64, p_max: f64) -> Option<f64> {
    let peaks = local_maxima(t, y);
    let (pt, py): (Vec<f64>, Vec<f64>) = peaks.into_iter().unzip();
    dominant_period(&pt, &py, p_min, p_max)
}

/// Excess kurtosis `m4 / m2^2 - 3` of a density sampled on a uniform grid.
pub fn excess_kurtosis(xs: &[f64], density: &[f64]) -> f64 {
    let total: f64 = density.iter().sum();
    let mean = xs.iter().zip(density).map(|(x, d)| x * d).sum::<f64>() / total;
    let (mut m2, mut m4) = (0.0, 0.0);
    for (x, d) in xs.iter().zip(density) {
        let u = (x - mean) * (x - mean);
        m2 += u * d;
        m4 += u * u * d;
    }
    m2 /= total;
    m4 /= total;
    m4 / (m2 * m2) - 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn series(period: f64, dt: f64, n: usize, phase: f64) -> (Vec<f64>, Vec<f64>) {
        let t: Vec<f64> = (0..n).map(|i| i as f64 * dt).collect();
        let y = t
            .iter()
            .map(|t| (2.0 * std::f64::consts::PI * t / period + phase).cos())
            .collect();
        (t, y)
    }

    #[test]
    fn moving_average_of_constant_and_ramp() {
        assert_eq!(moving_average(&[2.0; 7], 3), vec![2.0; 7]);
        let ramp: Vec<f64> = (0..9).map(|i| i as f64).collect();
        assert_eq!(moving_average(&ramp, 5), ramp);
    }

    #[test]
    fn crossings_of_a_sine() {
        let (t, y) = series(10.0, 0.1, 1001, 0.3);
        let p = zero_crossing_period(&t, &y, 1).unwrap();
        assert_abs_diff_eq!(p, 10.0, epsilon = 1e-3);
        assert_eq!(zero_crossing_period(&t[..3], &[1.0, 2.0, 3.0], 1), None);
    }

    #[test]
    fn maxima_are_refined() {
        let (t, y) = series(7.3, 0.5, 200, 0.0);
        let m = local_maxima(&t, &y);
        for (k, (tm, ym)) in m.iter().enumerate() {
            assert!((tm - 7.3 * (k + 1) as f64).abs() < 0.05, "{tm}");
            assert!(*ym > 0.99);
        }
        assert_abs_diff_eq!(peak_to_peak_period(&t, &y).unwrap(), 7.3, epsilon = 0.01);
        assert_eq!(local_minima(&t, &y).len(), m.len() + 1);
    }

    #[test]
    fn extrema_after_cutoff() {
        let t = [0.0, 1.0, 2.0, 3.0];
        let y = [10.0, -1.0, 4.0, 2.0];
        assert_eq!(extrema(&t, &y, 1.0), Some((-1.0, 4.0)));
        assert_eq!(extrema(&t, &y, 5.0), None);
    }

    #[test]
    fn envelope_of_beats() {
        let t: Vec<f64> = (0..20000).map(|i| i as f64 * 0.1).collect();
        let y: Vec<f64> = t
            .iter()
            .map(|t| {
                (2.0 * std::f64::consts::PI * t / 5.7).cos() * (1.5 + (2.0 * std::f64::consts::PI * t / 110.0).cos())
            })
            .collect();
        let p = envelope_period(&t, &y, 20.0, 400.0).unwrap();
        assert!((p - 110.0).abs() < 1.0, "{p}");
        let c = dominant_period(&t, &y, 2.0, 20.0).unwrap();
        assert!((c - 5.7).abs() < 0.01, "{c}");
    }

    #[test]
    fn gaussian_has_zero_excess_kurtosis() {
        let xs: Vec<f64> = (0..4001).map(|i| -10.0 + i as f64 * 0.005).collect();
        let d: Vec<f64> = xs.iter().map(|x| (-(x - 0.7) * (x - 0.7) / 0.8).exp()).collect();
        assert_abs_diff_eq!(excess_kurtosis(&xs, &d), 0.0, epsilon = 1e-9);
        let bimodal: Vec<f64> = xs
            .iter()
            .map(|x| (-(x - 3.0) * (x - 3.0) / 0.2).exp() + (-(x + 3.0) * (x + 3.0) / 0.2).exp())
            .collect();
        assert!(excess_kurtosis(&xs, &bimodal) < -1.5);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn periodogram_recovers_pure_tones(period in 3.0f64..60.0, phase in 0.0f64..std::f64::consts::TAU) {
            let (t, y) = series(period, 0.25, 2000, phase);
            let p = dominant_period(&t, &y, 2.0, 100.0).unwrap();
            prop_assert!((p - period).abs() < 2e-3 * period, "{} vs {}", p, period);
        }

        #[test]
        fn zero_crossings_recover_pure_tones(period in 3.0f64..60.0, phase in 0.0f64..std::f64::consts::TAU) {
            let (t, y) = series(period, 0.1, 10000, phase);
            let p = zero_crossing_period(&t, &y, 1).unwrap();
            prop_assert!((p - period).abs() < 1e-2 * period);
        }
    }
}
