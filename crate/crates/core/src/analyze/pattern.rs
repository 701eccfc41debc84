use serde::Serialize;

use crate::hopf_predict::{time_reverse, HopfPrediction};
use crate::simulate::Trajectory;
use crate::spectral::Direction;
use crate::{Error, Result};

/// Fraction tolerance used for runs just past the bifurcation point.
pub const DEFAULT_FRACTION_TOL: f64 = 0.03;

const MIN_AMPLITUDE: f64 = 1e-8;
const MAX_SPREAD: f64 = 0.05;
const PEAK_UNIQUENESS: f64 = 1e-6;

/// Measured phase pattern. `fractions[j]` is the lag of node `j` behind
/// node 0 as a fraction of the period, so `x_j(t) ≈ x_0(t − fractions[j]·T)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasePattern {
    pub period: f64,
    pub fractions: Vec<f64>,
    pub direction: Direction,
    /// Wavenumber of the best-fitting constant phase step.
    pub wavenumber: usize,
    /// Per-node RMS of `x_j(t) − x_0(t − θ_j)` relative to the RMS of node 0.
    #[serde(rename = "residuals")]
    pub waveform_mismatch: Vec<f64>,
}

fn centered(v: &[f64]) -> Vec<f64> {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter().map(|x| x - mean).collect()
}

fn amplitude(v: &[f64]) -> f64 {
    let (lo, hi) = v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    0.5 * (hi - lo)
}

/// Upward mean crossings with linear sub-sample refinement. A crossing only
/// counts after the trace has dipped below `-amp/10`, which filters
/// small wiggles around the mean.
fn upward_crossings(trace: &[f64], t0: f64, h: f64) -> Vec<f64> {
    let m = centered(trace);
    let arm = -0.1 * amplitude(trace);
    let mut armed = false;
    let mut out = Vec::new();
    for i in 0..m.len().saturating_sub(1) {
        if m[i] < arm {
            armed = true;
        }
        if armed && m[i] < 0.0 && m[i + 1] >= 0.0 {
            let frac = -m[i] / (m[i + 1] - m[i]);
            out.push(t0 + (i as f64 + frac) * h);
            armed = false;
        }
    }
    out
}

fn period_of(trace: &[f64], t0: f64, h: f64, node: usize) -> Result<f64> {
    if amplitude(trace) < MIN_AMPLITUDE {
        return Err(Error::NoOscillation(node));
    }
    let ups = upward_crossings(trace, t0, h);
    if ups.len() < 3 {
        return Err(Error::NoOscillation(node));
    }
    let intervals: Vec<f64> = ups.windows(2).map(|w| w[1] - w[0]).collect();
    let mean = intervals.iter().sum::<f64>() / intervals.len() as f64;
    let (lo, hi) = intervals.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    let spread = (hi - lo) / mean;
    if spread > MAX_SPREAD {
        return Err(Error::IrregularPeriod { node, spread });
    }
    Ok((ups[ups.len() - 1] - ups[0]) / (ups.len() - 1) as f64)
}

/// Period of node `node` (first component) from its upward mean crossings.
pub fn estimate_period(tr: &Trajectory, node: usize) -> Result<f64> {
    period_of(&tr.node_trace(node, 0), tr.time(0), tr.step(), node)
}

/// Linear interpolation of `v` at fractional sample index `s` (clamped).
fn sample(v: &[f64], s: f64) -> f64 {
    let s = s.clamp(0.0, (v.len() - 1) as f64);
    let i = (s.floor() as usize).min(v.len() - 2);
    let f = s - i as f64;
    v[i] * (1.0 - f) + v[i + 1] * f
}

struct LagEstimate {
    samples: f64,
}

/// Lag (in samples) of `y` behind `x`, from the peak of the normalised
/// cross-correlation over one period, refined by a parabola through the
/// peak and its neighbours.
fn lag_of(x: &[f64], y: &[f64], per: f64, node: usize) -> Result<LagEstimate> {
    const PAD: usize = 2;
    let span = per.ceil() as usize + PAD;
    let usable = x.len().saturating_sub(span + PAD);
    let whole = (usable as f64 / per).floor();
    if whole < 1.0 {
        return Err(Error::NoOscillation(node));
    }
    let seg = (whole * per).round() as usize;
    let xs = &x[PAD..PAD + seg];
    let xnorm = xs.iter().map(|v| v * v).sum::<f64>().sqrt();
    let corr = |tau: isize| -> f64 {
        let start = (PAD as isize + tau) as usize;
        let ys = &y[start..start + seg];
        let ynorm = ys.iter().map(|v| v * v).sum::<f64>().sqrt();
        if ynorm == 0.0 || xnorm == 0.0 {
            return 0.0;
        }
        xs.iter().zip(ys).map(|(a, b)| a * b).sum::<f64>() / (xnorm * ynorm)
    };
    let cycle = (per.round() as usize).max(1);
    let values: Vec<f64> = (0..cycle).map(|t| corr(t as isize)).collect();
    let (best, &peak) = values.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).expect("non-empty cycle");
    for (t, &v) in values.iter().enumerate() {
        let d = (t as isize - best as isize).rem_euclid(cycle as isize) as usize;
        let dist = d.min(cycle - d);
        if dist > 2 && v >= peak - PEAK_UNIQUENESS {
            let is_local_max = v >= values[(t + cycle - 1) % cycle] && v >= values[(t + 1) % cycle];
            if is_local_max {
                return Err(Error::AmbiguousLag(node));
            }
        }
    }
    let (cm, c0, cp) = (corr(best as isize - 1), peak, corr(best as isize + 1));
    let curvature = cm - 2.0 * c0 + cp;
    let delta = if curvature < 0.0 { (0.5 * (cm - cp) / curvature).clamp(-0.5, 0.5) } else { 0.0 };
    Ok(LagEstimate { samples: best as f64 + delta })
}

fn wrap_unit(f: f64) -> f64 {
    let w = f.rem_euclid(1.0);
    if w >= 1.0 - 1e-12 {
        0.0
    } else {
        w
    }
}

/// Signed circular distance between two fractions, in `[-1/2, 1/2)`.
fn circular_diff(a: f64, b: f64) -> f64 {
    (a - b + 0.5).rem_euclid(1.0) - 0.5
}

/// Best constant phase step `m/n` for the consecutive differences, by
/// circular least squares.
fn infer_step(fractions: &[f64]) -> Result<usize> {
    let n = fractions.len();
    let diffs: Vec<f64> = (0..n).map(|j| fractions[(j + 1) % n] - fractions[j]).collect();
    let mut costs: Vec<(usize, f64)> = (0..n)
        .map(|m| {
            let target = m as f64 / n as f64;
            (m, diffs.iter().map(|d| circular_diff(*d, target).powi(2)).sum::<f64>())
        })
        .collect();
    costs.sort_by(|a, b| a.1.total_cmp(&b.1));
    if n > 1 && (costs[1].1 - costs[0].1).abs() <= 1e-12 {
        return Err(Error::AmbiguousLag(0));
    }
    Ok(costs[0].0)
}

fn direction_of(n: usize, m: usize) -> (Direction, usize) {
    if m == 0 {
        (Direction::NotRotating, 0)
    } else if 2 * m == n {
        (Direction::NotRotating, m)
    } else if 2 * m < n {
        (Direction::Clockwise, m)
    } else {
        (Direction::Anticlockwise, n - m)
    }
}

/// Phase pattern of the first component of every node.
pub fn extract_pattern(tr: &Trajectory) -> Result<PhasePattern> {
    extract_pattern_component(tr, 0)
}

/// Phase pattern of component `comp` of every node, relative to node 0.
pub fn extract_pattern_component(tr: &Trajectory, comp: usize) -> Result<PhasePattern> {
    let n = tr.network().n();
    let h = tr.step();
    let reference_raw = tr.node_trace(0, comp);
    let period = period_of(&reference_raw, tr.time(0), h, 0)?;
    let per = period / h;
    let reference = centered(&reference_raw);
    let ref_rms = (reference.iter().map(|v| v * v).sum::<f64>() / reference.len() as f64).sqrt();

    let mut fractions = vec![0.0; n];
    let mut mismatch = vec![0.0; n];
    for j in 1..n {
        let raw = tr.node_trace(j, comp);
        if amplitude(&raw) < MIN_AMPLITUDE {
            return Err(Error::NoOscillation(j));
        }
        let trace = centered(&raw);
        let lag = lag_of(&reference, &trace, per, j)?;
        fractions[j] = wrap_unit(lag.samples / per);
        // x_j(t) vs x_0(t − θ_j), over samples where the shifted index is valid
        let shift = lag.samples;
        let start = shift.ceil() as usize;
        let (mut acc, mut count) = (0.0, 0usize);
        for (t, v) in raw.iter().enumerate().skip(start) {
            let d = v - sample(&reference_raw, t as f64 - shift);
            acc += d * d;
            count += 1;
        }
        mismatch[j] = if count == 0 || ref_rms == 0.0 { 0.0 } else { (acc / count as f64).sqrt() / ref_rms };
    }
    let m = infer_step(&fractions)?;
    let (direction, wavenumber) = direction_of(n, m);
    Ok(PhasePattern { period, fractions, direction, wavenumber, waveform_mismatch: mismatch })
}

/// Relative RMS of `x_j(t) + x_j(t − T/2)` for each node: zero when the
/// solution is fixed by the glide reflection `x(t) ↦ −x(t − T/2)`.
pub fn glide_residual(tr: &Trajectory, period: f64) -> Vec<f64> {
    let half = 0.5 * period / tr.step();
    let start = half.ceil() as usize;
    (0..tr.network().n())
        .map(|j| {
            let x = tr.node_trace(j, 0);
            let (mut num, mut den, mut count) = (0.0, 0.0, 0usize);
            for t in start..x.len() {
                let s = x[t] + sample(&x, t as f64 - half);
                num += s * s;
                den += x[t] * x[t];
                count += 1;
            }
            if count == 0 || den == 0.0 {
                f64::INFINITY
            } else {
                (num / den).sqrt()
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "match")]
    pub matched: bool,
    pub max_fraction_error: f64,
    /// `|T_measured − T_predicted| / T_predicted`.
    pub period_error: f64,
    /// True when the match was against the time-reversed prediction.
    pub time_reversed: bool,
}

fn max_error(p: &HopfPrediction, pat: &PhasePattern) -> f64 {
    p.phase_fractions.iter().zip(&pat.fractions).map(|(a, b)| circular_diff(*a, *b).abs()).fold(0.0, f64::max)
}

/// Compares a measured pattern with a prediction: every fraction within
/// `tol` on the circle and the same direction. With `allow_time_reverse`
/// the time-reversed prediction is accepted too.
pub fn verify_prediction(p: &HopfPrediction, pat: &PhasePattern, tol: f64, allow_time_reverse: bool) -> VerifyReport {
    let period_error = (pat.period - p.period_limit).abs() / p.period_limit;
    if p.n() != pat.fractions.len() {
        return VerifyReport { matched: false, max_fraction_error: f64::INFINITY, period_error, time_reversed: false };
    }
    let err = max_error(p, pat);
    let direct = err <= tol && p.direction == pat.direction;
    if !direct && allow_time_reverse {
        let r = time_reverse(p);
        let rerr = max_error(&r, pat);
        if rerr <= tol && r.direction == pat.direction {
            return VerifyReport { matched: true, max_fraction_error: rerr, period_error, time_reversed: true };
        }
    }
    VerifyReport { matched: direct, max_fraction_error: err, period_error, time_reversed: false }
}
