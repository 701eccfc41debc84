use std::collections::BTreeMap;
use std::sync::Arc;

use super::expr::{Dual, Env, Expr, Scalar, Scope};
use super::network::{RingNetwork, Symmetry};
use crate::spectral::{BlockCoefficients, CouplingCoefficients};
use crate::{Error, Result};

/// Name of the bifurcation parameter used by the built-in models.
pub const LAMBDA: &str = "lambda";

/// The built-in cubic rings `ẋ_c = λx_c − x_c³ + b·x_c² + Σ_r a_r x_{c+r}`.
#[derive(Debug, Clone, PartialEq)]
pub enum BuiltinModel {
    /// Three nodes, `ẋ_c = λx_c − x_c³ + a·x_{c−1}`.
    CubicZ3 { a: f64 },
    /// Five nodes, `ẋ_c = λx_c − x_c³ + a·x_{c−1}`.
    CubicZ5 { a: f64 },
    /// Arbitrary cubic ring; `quadratic` is the coefficient `b` that breaks
    /// the extra `x -> -x` symmetry.
    CubicRing { n: usize, couplings: Vec<(usize, f64)>, quadratic: f64, symmetry: Symmetry },
}

impl BuiltinModel {
    pub fn name(&self) -> &'static str {
        match self {
            BuiltinModel::CubicZ3 { .. } => "cubic_z3",
            BuiltinModel::CubicZ5 { .. } => "cubic_z5",
            BuiltinModel::CubicRing { .. } => "cubic_ring",
        }
    }

    /// Builds the vector field with the bifurcation parameter set to `lambda`.
    pub fn vector_field(&self, lambda: f64) -> Result<VectorField> {
        let (network, couplings, quadratic) = match self {
            // x_{c-1} is range n-1 in the c + r convention
            BuiltinModel::CubicZ3 { a } => (RingNetwork::new(3, &[2], 1, Symmetry::Cyclic)?, vec![(2, *a)], 0.0),
            BuiltinModel::CubicZ5 { a } => (RingNetwork::new(5, &[4], 1, Symmetry::Cyclic)?, vec![(4, *a)], 0.0),
            BuiltinModel::CubicRing { n, couplings, quadratic, symmetry } => {
                let ranges: Vec<usize> = couplings.iter().map(|c| c.0).collect();
                (RingNetwork::new(*n, &ranges, 1, *symmetry)?, couplings.clone(), *quadratic)
            }
        };
        VectorField::cubic(network, &couplings, quadratic, lambda)
    }
}

#[derive(Debug, Clone)]
enum NodeModel {
    Cubic {
        /// Strength per entry of `network.ranges()`.
        strengths: Vec<f64>,
        quadratic: f64,
    },
    Expr {
        components: Arc<Vec<Expr>>,
        param_values: Vec<f64>,
    },
}

/// Linear part of a field at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum Linearization {
    Scalar(CouplingCoefficients),
    Block(BlockCoefficients),
}

/// An admissible vector field on a ring: every node runs the same equation,
/// reading only its own state and the states of its declared inputs.
#[derive(Debug, Clone)]
pub struct VectorField {
    network: RingNetwork,
    model: NodeModel,
    params: BTreeMap<String, f64>,
    bifurcation_param: String,
    negated: bool,
}

impl VectorField {
    /// Scalar cubic ring. Every declared range needs a strength.
    pub fn cubic(network: RingNetwork, couplings: &[(usize, f64)], quadratic: f64, lambda: f64) -> Result<Self> {
        if network.node_dim() != 1 {
            return Err(Error::Config("cubic ring models have scalar nodes".into()));
        }
        let mut strengths = Vec::with_capacity(network.ranges().len());
        for &r in network.ranges() {
            let matches: Vec<f64> = couplings.iter().filter(|c| c.0 == r).map(|c| c.1).collect();
            match matches.as_slice() {
                [s] => strengths.push(*s),
                [] => return Err(Error::Config(format!("no coupling strength for range {r}"))),
                _ => return Err(Error::Config(format!("duplicate coupling strength for range {r}"))),
            }
        }
        if let Some(c) = couplings.iter().find(|c| !network.ranges().contains(&c.0)) {
            return Err(Error::InvalidRange { range: c.0, max: network.n() - 1 });
        }
        let mut params = BTreeMap::new();
        params.insert(LAMBDA.to_string(), lambda);
        for (&r, &s) in network.ranges().iter().zip(&strengths) {
            params.insert(format!("a{r}"), s);
        }
        if quadratic != 0.0 {
            params.insert("b".to_string(), quadratic);
        }
        if network.symmetry() == Symmetry::Dihedral {
            for (&r, &s) in network.ranges().iter().zip(&strengths) {
                let partner = network.n() - r;
                let ps = params[&format!("a{partner}")];
                if ps != s {
                    return Err(Error::AsymmetricCoefficients { r, left: s, right: ps });
                }
            }
        }
        Ok(VectorField {
            network,
            model: NodeModel::Cubic { strengths, quadratic },
            params,
            bifurcation_param: LAMBDA.to_string(),
            negated: false,
        })
    }

    /// Field given by one expression per node component (see [`super::expr`]).
    pub fn from_expressions<S: AsRef<str>>(
        network: RingNetwork,
        components: &[S],
        params: BTreeMap<String, f64>,
        bifurcation_param: &str,
    ) -> Result<Self> {
        if components.len() != network.node_dim() {
            return Err(Error::DimensionMismatch { expected: network.node_dim(), got: components.len() });
        }
        let names: Vec<String> = params.keys().filter(|k| *k != bifurcation_param).cloned().collect();
        let param_values: Vec<f64> = names.iter().map(|k| params[k]).collect();
        let scope =
            Scope { node_dim: network.node_dim(), ranges: network.ranges(), params: &names, lambda: bifurcation_param };
        let components = components.iter().map(|s| Expr::parse(s.as_ref(), &scope)).collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            network,
            model: NodeModel::Expr { components: Arc::new(components), param_values },
            params,
            bifurcation_param: bifurcation_param.to_string(),
            negated: false,
        })
    }

    pub fn network(&self) -> &RingNetwork {
        &self.network
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn bifurcation_param(&self) -> &str {
        &self.bifurcation_param
    }

    /// Configured value of the bifurcation parameter (0 when unset).
    pub fn lambda(&self) -> f64 {
        self.params.get(&self.bifurcation_param).copied().unwrap_or(0.0)
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    /// The time-reversed field `-f`.
    pub fn negate(&self) -> VectorField {
        VectorField { negated: !self.negated, ..self.clone() }
    }

    /// `f(state, λ)`; the state is node-major, `state[c * l + i]`.
    pub fn evaluate(&self, state: &[f64], lambda: f64) -> Result<Vec<f64>> {
        let dim = self.network.state_dim();
        if state.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: state.len() });
        }
        let mut out = vec![0.0; dim];
        self.evaluate_into(state, lambda, &mut out);
        Ok(out)
    }

    /// Unchecked variant of [`evaluate`](Self::evaluate) writing into `out`.
    /// Panics if the lengths do not match the network.
    pub fn evaluate_into(&self, state: &[f64], lambda: f64, out: &mut [f64]) {
        self.eval_generic(state, lambda, out);
        if self.negated {
            out.iter_mut().for_each(|v| *v = -*v);
        }
    }

    fn eval_generic<S: Scalar>(&self, state: &[S], lambda: S, out: &mut [S]) {
        let n = self.network.n();
        let l = self.network.node_dim();
        match &self.model {
            NodeModel::Cubic { strengths, quadratic } => {
                let b = S::constant(*quadratic);
                for c in 0..n {
                    let x = state[c];
                    let mut v = lambda * x - x * x * x + b * x * x;
                    for (&r, &s) in self.network.ranges().iter().zip(strengths) {
                        v = v + S::constant(s) * state[(c + r) % n];
                    }
                    out[c] = v;
                }
            }
            NodeModel::Expr { components, param_values } => {
                let mut inputs: Vec<&[S]> = Vec::with_capacity(self.network.ranges().len());
                for c in 0..n {
                    inputs.clear();
                    for &r in self.network.ranges() {
                        let src = (c + r) % n;
                        inputs.push(&state[src * l..(src + 1) * l]);
                    }
                    let env = Env { own: &state[c * l..(c + 1) * l], inputs: &inputs, params: param_values, lambda };
                    for (i, e) in components.iter().enumerate() {
                        out[c * l + i] = e.eval(&env);
                    }
                }
            }
        }
    }

    /// Exact Jacobian of the node equation at the origin, as circulant
    /// coefficients (scalar nodes) or as block coefficients `(P, Q_r)`.
    pub fn linearize(&self, lambda: f64) -> Result<Linearization> {
        let n = self.network.n();
        let l = self.network.node_dim();
        let sign = if self.negated { -1.0 } else { 1.0 };
        let origin = vec![0.0; self.network.state_dim()];
        let f0 = self.evaluate(&origin, lambda)?;
        let worst = f0.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if worst > 1e-12 {
            return Err(Error::NotAnEquilibrium(worst));
        }
        // Differentiate node 0 by seeding one coordinate of the ring at a time;
        // own coordinates give P, those of node r give Q_r.
        let mut p = vec![0.0; l * l];
        let mut q: Vec<(usize, Vec<f64>)> = self.network.ranges().iter().map(|&r| (r, vec![0.0; l * l])).collect();
        let mut seeded = vec![Dual::constant(0.0); self.network.state_dim()];
        let mut out = vec![Dual::constant(0.0); self.network.state_dim()];
        let lam = Dual::constant(lambda);
        for src in std::iter::once(0).chain(self.network.ranges().iter().copied()) {
            for j in 0..l {
                seeded[src * l + j] = Dual::new(0.0, 1.0);
                self.eval_generic(&seeded, lam, &mut out);
                seeded[src * l + j] = Dual::constant(0.0);
                for i in 0..l {
                    let d = sign * out[i].d;
                    if src == 0 {
                        p[i * l + j] = d;
                    } else {
                        let slot = self.network.ranges().iter().position(|&r| r == src).expect("declared");
                        q[slot].1[i * l + j] = d;
                    }
                }
            }
        }
        let dihedral = self.network.symmetry() == Symmetry::Dihedral;
        if l == 1 {
            let mut a = vec![0.0; n];
            a[0] = p[0];
            for (r, m) in &q {
                a[*r] = m[0];
            }
            Ok(Linearization::Scalar(CouplingCoefficients::new(a, dihedral)?))
        } else {
            Ok(Linearization::Block(BlockCoefficients::with_ranges(n, l, p, q)?))
        }
    }
}
