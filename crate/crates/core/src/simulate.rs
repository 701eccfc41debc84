//! Fixed-step RK4 integration of ring ODEs.

use std::collections::BTreeMap;
use std::io::Write;

use num_complex::Complex64;

use crate::ring_model::{RingNetwork, VectorField};
use crate::spectral::root_of_unity;
use crate::{Error, Result};

/// States with a component above this magnitude abort the integration.
pub const DIVERGENCE_BOUND: f64 = 1e6;

/// Uniformly sampled solution. Row `i` is the state at `t0 + i·step`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    t0: f64,
    step: f64,
    dim: usize,
    states: Vec<f64>,
    network: RingNetwork,
    params: BTreeMap<String, f64>,
}

impl Trajectory {
    /// Builds a trajectory from raw samples (row-major, `network.state_dim()`
    /// columns), e.g. for synthetic signals.
    pub fn from_samples(network: RingNetwork, t0: f64, step: f64, states: Vec<f64>) -> Result<Self> {
        let dim = network.state_dim();
        if !states.len().is_multiple_of(dim) || states.is_empty() {
            return Err(Error::DimensionMismatch { expected: dim, got: states.len() % dim });
        }
        if step <= 0.0 || !step.is_finite() {
            return Err(Error::InvalidStep(format!("step {step}")));
        }
        Ok(Trajectory { t0, step, dim, states, network, params: BTreeMap::new() })
    }

    pub fn len(&self) -> usize {
        self.states.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.step
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.time(i)).collect()
    }

    pub fn state(&self, i: usize) -> &[f64] {
        &self.states[i * self.dim..(i + 1) * self.dim]
    }

    pub fn last_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    /// Time series of one coordinate of the state vector.
    pub fn channel(&self, j: usize) -> Vec<f64> {
        self.states.iter().skip(j).step_by(self.dim).copied().collect()
    }

    /// Time series of component `comp` of node `node`.
    pub fn node_trace(&self, node: usize, comp: usize) -> Vec<f64> {
        self.channel(node * self.network.node_dim() + comp)
    }

    pub fn network(&self) -> &RingNetwork {
        &self.network
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    /// Reverses the sample order on the same time grid: if this is a
    /// solution of `ẋ = f(x)`, the result is a solution of `ẋ = −f(x)`.
    pub fn time_mirror(&self) -> Trajectory {
        let mut states = Vec::with_capacity(self.states.len());
        for i in (0..self.len()).rev() {
            states.extend_from_slice(self.state(i));
        }
        Trajectory { states, ..self.clone() }
    }

    /// CSV with header `t,x0,x1,…` and 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let header: Vec<String> =
            std::iter::once("t".to_string()).chain((0..self.dim).map(|j| format!("x{j}"))).collect();
        writeln!(w, "{}", header.join(","))?;
        for i in 0..self.len() {
            let mut line = format_float(self.time(i));
            for v in self.state(i) {
                line.push(',');
                line.push_str(&format_float(*v));
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }
}

/// Scientific notation with 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Default step `min(1e-2, T/200)` for an expected period `T`.
pub fn default_step(period: Option<f64>) -> f64 {
    period.map_or(1e-2, |t| (t / 200.0).min(1e-2))
}

/// `amplitude · Re(y ⊗ v_k)`: seeds mode `k` of the ring. `y` is the node
/// component vector (defaults to the first unit vector).
pub fn mode_seed(network: &RingNetwork, k: usize, y: Option<&[Complex64]>, amplitude: f64) -> Vec<f64> {
    let (n, l) = (network.n(), network.node_dim());
    let mut out = vec![0.0; n * l];
    for c in 0..n {
        let z = root_of_unity(n, c * k);
        for i in 0..l {
            let yi = y.map_or(if i == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }, |y| y[i]);
            out[c * l + i] = amplitude * (yi * z).re;
        }
    }
    out
}

struct Stepper<'a> {
    vf: &'a VectorField,
    lambda: f64,
    h: f64,
    k: [Vec<f64>; 4],
    tmp: Vec<f64>,
}

impl<'a> Stepper<'a> {
    fn new(vf: &'a VectorField, lambda: f64, h: f64) -> Self {
        let d = vf.network().state_dim();
        Stepper { vf, lambda, h, k: [vec![0.0; d], vec![0.0; d], vec![0.0; d], vec![0.0; d]], tmp: vec![0.0; d] }
    }

    fn advance(&mut self, x: &mut [f64], t: f64) -> Result<()> {
        let h = self.h;
        let [k1, k2, k3, k4] = &mut self.k;
        self.vf.evaluate_into(x, self.lambda, k1);
        for (t, (xi, ki)) in self.tmp.iter_mut().zip(x.iter().zip(k1.iter())) {
            *t = xi + 0.5 * h * ki;
        }
        self.vf.evaluate_into(&self.tmp, self.lambda, k2);
        for (t, (xi, ki)) in self.tmp.iter_mut().zip(x.iter().zip(k2.iter())) {
            *t = xi + 0.5 * h * ki;
        }
        self.vf.evaluate_into(&self.tmp, self.lambda, k3);
        for (t, (xi, ki)) in self.tmp.iter_mut().zip(x.iter().zip(k3.iter())) {
            *t = xi + h * ki;
        }
        self.vf.evaluate_into(&self.tmp, self.lambda, k4);
        for i in 0..x.len() {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        for &v in x.iter() {
            if !v.is_finite() {
                return Err(Error::NonFinite(t + h));
            }
            if v.abs() > DIVERGENCE_BOUND {
                return Err(Error::Diverged(t + h));
            }
        }
        Ok(())
    }
}

fn check_setup(vf: &VectorField, x0: &[f64], h: f64) -> Result<()> {
    let d = vf.network().state_dim();
    if x0.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x0.len() });
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidStep(format!("step must be positive, got {h}")));
    }
    if x0.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite(0.0));
    }
    Ok(())
}

fn steps_for(span: f64, h: f64) -> usize {
    (span / h - 1e-9).ceil().max(0.0) as usize
}

fn record(vf: &VectorField, x0: &[f64], lambda: f64, t0: f64, steps: usize, h: f64) -> Result<Trajectory> {
    let d = x0.len();
    let mut states = Vec::with_capacity((steps + 1) * d);
    states.extend_from_slice(x0);
    let mut x = x0.to_vec();
    let mut stepper = Stepper::new(vf, lambda, h);
    for i in 0..steps {
        stepper.advance(&mut x, t0 + i as f64 * h)?;
        states.extend_from_slice(&x);
    }
    let mut params = vf.params().clone();
    params.insert(vf.bifurcation_param().to_string(), lambda);
    Ok(Trajectory { t0, step: h, dim: d, states, network: vf.network().clone(), params })
}

/// Classical RK4 from `x0` at `t = 0` to `t_end` (rounded up to a whole
/// number of steps) with step `h`.
pub fn integrate(vf: &VectorField, x0: &[f64], lambda: f64, t_end: f64, h: f64) -> Result<Trajectory> {
    check_setup(vf, x0, h)?;
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidStep(format!("t_end must be positive, got {t_end}")));
    }
    record(vf, x0, lambda, 0.0, steps_for(t_end, h), h)
}

/// Integrates through `transient` without storing it and returns the
/// following `window`. With an `expected_period`, the window must hold at
/// least five periods.
pub fn settle_and_sample(
    vf: &VectorField,
    x0: &[f64],
    lambda: f64,
    transient: f64,
    window: f64,
    h: f64,
    expected_period: Option<f64>,
) -> Result<Trajectory> {
    check_setup(vf, x0, h)?;
    if !(transient >= 0.0 && window > 0.0) {
        return Err(Error::InvalidStep(format!("transient {transient}, window {window}")));
    }
    if let Some(period) = expected_period {
        if window < 5.0 * period {
            return Err(Error::WindowTooShort { window, period });
        }
    }
    let settle_steps = steps_for(transient, h);
    let mut x = x0.to_vec();
    let mut stepper = Stepper::new(vf, lambda, h);
    for i in 0..settle_steps {
        stepper.advance(&mut x, i as f64 * h)?;
    }
    record(vf, &x, lambda, settle_steps as f64 * h, steps_for(window, h), h)
}
