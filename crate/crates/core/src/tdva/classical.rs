//! Newtonian orbits in the bare potential and their turning points.

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::potential::{bisect, QuarticPotential};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub t: f64,
    pub x: f64,
    pub p: f64,
}

/// RK4 orbit of `m x'' = -U'(x)` sampled every `dt_out`.
pub fn classical_orbit(
    u: &QuarticPotential,
    m: f64,
    x0: f64,
    p0: f64,
    t_end: f64,
    dt: f64,
    dt_out: f64,
) -> Result<Vec<PhasePoint>> {
    ensure(dt > 0.0 && dt_out > 0.0, || {
        format!("steps must be positive (dt = {dt}, dt_out = {dt_out})")
    })?;
    ensure(m > 0.0, || format!("mass must be positive (got {m})"))?;
    let k = (dt_out / dt - 1e-9).ceil().max(1.0) as usize;
    let h = dt_out / k as f64;
    let n_out = (t_end / dt_out + 1e-9).floor().max(0.0) as usize;
    let f = |x: f64, p: f64| (p / m, -u.derivatives(x)[1]);
    let (mut x, mut p) = (x0, p0);
    let mut out = vec![PhasePoint { t: 0.0, x, p }];
    for j in 0..n_out {
        for _ in 0..k {
            let (a1, b1) = f(x, p);
            let (a2, b2) = f(x + h / 2.0 * a1, p + h / 2.0 * b1);
            let (a3, b3) = f(x + h / 2.0 * a2, p + h / 2.0 * b2);
            let (a4, b4) = f(x + h * a3, p + h * b3);
            x += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
            p += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
        }
        out.push(PhasePoint {
            t: (j + 1) as f64 * dt_out,
            x,
            p,
        });
    }
    Ok(out)
}

/// Outermost solutions of `U(x) = E`, i.e. the extent of the classically
/// allowed region reachable at energy `E`.
pub fn turning_points(u: &QuarticPotential, energy: f64) -> Result<(f64, f64)> {
    if !(u.a4 > 0.0) {
        return Err(Error::NoTurningPoint { energy });
    }
    let mut stat = u.stationary_points();
    stat.sort_by(f64::total_cmp);
    if stat.is_empty() {
        return Err(Error::NoTurningPoint { energy });
    }
    let f = |x: f64| u.value(x) - energy;
    let tol = 1e-12 * energy.abs().max(1.0);
    // Bracket far enough out that U > E on both sides.
    let mut reach = 1.0 + stat.iter().fold(0.0f64, |a, s| a.max(s.abs()));
    while f(reach) <= 0.0 || f(-reach) <= 0.0 {
        reach *= 2.0;
    }

    let right = {
        let mut nodes = stat.clone();
        nodes.push(reach);
        let mut found = None;
        for w in nodes.windows(2).rev() {
            let (a, b) = (w[0], w[1]);
            if f(a).abs() <= tol {
                found = Some(a);
                break;
            }
            if f(a) < 0.0 && f(b) > 0.0 {
                found = Some(bisect(f, a, b));
                break;
            }
        }
        found
    };
    let left = {
        let mut nodes = vec![-reach];
        nodes.extend(stat.iter().copied());
        let mut found = None;
        for w in nodes.windows(2) {
            let (a, b) = (w[0], w[1]);
            if f(b).abs() <= tol {
                found = Some(b);
                break;
            }
            if f(a) > 0.0 && f(b) < 0.0 {
                found = Some(bisect(f, a, b));
                break;
            }
        }
        found
    };
    match (left, right) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ => Err(Error::NoTurningPoint { energy }),
    }
}

/// Largest `|p|` on the orbit of energy `E`: attained where `U` is lowest
/// inside the allowed region.
pub fn momentum_extremum(u: &QuarticPotential, m: f64, energy: f64) -> Result<f64> {
    let (lo, hi) = turning_points(u, energy)?;
    let u_min = u
        .stationary_points()
        .into_iter()
        .filter(|&s| s >= lo && s <= hi)
        .map(|s| u.value(s))
        .fold(u.value(lo).min(u.value(hi)), f64::min);
    Ok((2.0 * m * (energy - u_min)).max(0.0).sqrt())
}
