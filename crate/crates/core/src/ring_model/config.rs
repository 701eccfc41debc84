use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::{BuiltinModel, VectorField};
use super::network::{build_network, Symmetry};
use crate::{Error, Result};

/// Either a built-in model name or the node equation(s) as expressions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelSpec {
    Single(String),
    Components(Vec<String>),
}

/// JSON description of a ring and the field on it.
///
/// ```json
/// {"n": 5, "ranges": [4], "node_dim": 1, "symmetry": "cyclic",
///  "model": "lambda*x - x^3 + a*u4",
///  "params": {"lambda": -1.1, "a": -2}, "bifurcation_param": "lambda"}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkConfig {
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub ranges: Option<Vec<usize>>,
    #[serde(default = "default_node_dim")]
    pub node_dim: usize,
    #[serde(default = "default_symmetry")]
    pub symmetry: Symmetry,
    /// Close the ranges under `r -> n - r` for dihedral rings instead of
    /// rejecting an asymmetric set.
    #[serde(default)]
    pub symmetrize: bool,
    pub model: ModelSpec,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    #[serde(default = "default_bifurcation_param")]
    pub bifurcation_param: String,
    #[serde(default)]
    pub colouring: Option<Vec<usize>>,
}

fn default_node_dim() -> usize {
    1
}

fn default_symmetry() -> Symmetry {
    Symmetry::Cyclic
}

fn default_bifurcation_param() -> String {
    "lambda".to_string()
}

impl NetworkConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Config for a built-in model with the given parameters.
    pub fn builtin(name: &str, params: BTreeMap<String, f64>) -> Self {
        NetworkConfig {
            n: None,
            ranges: None,
            node_dim: 1,
            symmetry: Symmetry::Cyclic,
            symmetrize: false,
            model: ModelSpec::Single(name.to_string()),
            params,
            bifurcation_param: default_bifurcation_param(),
            colouring: None,
        }
    }

    fn param(&self, name: &str) -> Result<f64> {
        self.params.get(name).copied().ok_or_else(|| Error::Config(format!("model needs parameter `{name}`")))
    }

    pub fn lambda(&self) -> f64 {
        self.params.get(&self.bifurcation_param).copied().unwrap_or(0.0)
    }

    /// Resolves the built-in model named in the config, if any.
    pub fn builtin_model(&self) -> Result<Option<BuiltinModel>> {
        let ModelSpec::Single(name) = &self.model else {
            return Ok(None);
        };
        let fixed = |n: usize, r: usize| -> Result<()> {
            if self.n.is_some_and(|m| m != n) || self.ranges.as_ref().is_some_and(|rs| rs != &[r]) {
                return Err(Error::Config(format!("`{name}` is the {n}-node ring with range {r}")));
            }
            if self.node_dim != 1 {
                return Err(Error::Config(format!("`{name}` has scalar nodes")));
            }
            Ok(())
        };
        let model = match name.as_str() {
            "cubic_z3" => {
                fixed(3, 2)?;
                BuiltinModel::CubicZ3 { a: self.param("a")? }
            }
            "cubic_z5" => {
                fixed(5, 4)?;
                BuiltinModel::CubicZ5 { a: self.param("a")? }
            }
            "cubic_ring" => {
                let n = self.n.ok_or_else(|| Error::Config("cubic_ring needs `n`".into()))?;
                let ranges = self.ranges.clone().ok_or_else(|| Error::Config("cubic_ring needs `ranges`".into()))?;
                let net = build_network(n, &ranges, self.node_dim, self.symmetry, self.symmetrize)?;
                let couplings =
                    net.ranges().iter().map(|&r| Ok((r, self.param(&format!("a{r}"))?))).collect::<Result<Vec<_>>>()?;
                BuiltinModel::CubicRing {
                    n,
                    couplings,
                    quadratic: self.params.get("b").copied().unwrap_or(0.0),
                    symmetry: self.symmetry,
                }
            }
            _ => return Ok(None),
        };
        Ok(Some(model))
    }

    pub fn build(&self) -> Result<VectorField> {
        if let Some(model) = self.builtin_model()? {
            if self.bifurcation_param != "lambda" {
                return Err(Error::Config("built-in models use `lambda` as bifurcation parameter".into()));
            }
            return model.vector_field(self.lambda());
        }
        let n = self.n.ok_or_else(|| Error::Config("missing `n`".into()))?;
        let ranges = self.ranges.clone().ok_or_else(|| Error::Config("missing `ranges`".into()))?;
        let net = build_network(n, &ranges, self.node_dim, self.symmetry, self.symmetrize)?;
        let components = match &self.model {
            ModelSpec::Single(s) => vec![s.clone()],
            ModelSpec::Components(v) => v.clone(),
        };
        VectorField::from_expressions(net, &components, self.params.clone(), &self.bifurcation_param)
    }
}
