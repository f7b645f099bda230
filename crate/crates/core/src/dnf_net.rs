//! The three-layer source network: a layer of cuts, one AND gate per
//! polytope, and a single OR output gate.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::geometry::{Cut, Point, PolytopeSpec};

/// Threshold unit over bit inputs: fires iff `Σ weight·bit + bias >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicGate {
    weights: Vec<f64>,
    bias: f64,
}

impl LogicGate {
    pub fn new(weights: Vec<f64>, bias: f64) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite()) || !bias.is_finite() {
            return Err(Error::NonFinite("gate weights"));
        }
        Ok(LogicGate { weights, bias })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn fire(&self, bits: &[bool]) -> Result<bool> {
        if bits.len() != self.weights.len() {
            return Err(Error::BitCountMismatch {
                expected: self.weights.len(),
                found: bits.len(),
            });
        }
        Ok(self.fire_unchecked(bits))
    }

    fn fire_unchecked(&self, bits: &[bool]) -> bool {
        let sum: f64 = self.weights.iter().zip(bits).filter(|(_, &b)| b).map(|(w, _)| w).sum();
        sum + self.bias >= 0.0
    }
}

/// Conjunction of `k` bits: unit weights, bias `-(k - 1/2)`.
pub fn make_and_gate(k: usize) -> Result<LogicGate> {
    if k < 1 {
        return Err(Error::InvalidArity);
    }
    LogicGate::new(vec![1.0; k], -(k as f64 - 0.5))
}

/// Disjunction of `k` bits: unit weights, bias `-1/2`.
pub fn make_or_gate(k: usize) -> Result<LogicGate> {
    if k < 1 {
        return Err(Error::InvalidArity);
    }
    LogicGate::new(vec![1.0; k], -0.5)
}

/// Inverter: weight -1, bias 0, so a 0 input sits on the (inclusive) boundary.
pub fn make_not_gate() -> LogicGate {
    LogicGate {
        weights: vec![-1.0],
        bias: 0.0,
    }
}

/// Three-layer network computing `OR_j AND_{i in polytope j} cut_i(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DnfNetwork {
    dim: usize,
    cut_layer: Vec<Cut>,
    and_layer: Vec<LogicGate>,
    or_gate: LogicGate,
    cluster_extents: Vec<Range<usize>>,
}

/// Bits produced by each layer during one evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnfTrace {
    pub cut_bits: Vec<bool>,
    pub and_bits: Vec<bool>,
    pub output: bool,
}

impl DnfNetwork {
    /// Reassembles a network from stored layers, checking the structural
    /// invariants that [`build_dnf`] establishes.
    pub fn from_parts(
        dim: usize,
        cut_layer: Vec<Cut>,
        and_layer: Vec<LogicGate>,
        or_gate: LogicGate,
        cluster_extents: Vec<Range<usize>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::MalformedNetwork(msg));
        if cluster_extents.is_empty() {
            return bad("no clusters".into());
        }
        if let Some(i) = cut_layer.iter().position(|c| c.dim() != dim) {
            return bad(format!(
                "cut {i} has dimension {}, network has {dim}",
                cut_layer[i].dim()
            ));
        }
        let mut next = 0;
        for (j, r) in cluster_extents.iter().enumerate() {
            if r.start != next || r.end <= r.start {
                return bad(format!("cluster extent {j} is not a contiguous nonempty run"));
            }
            next = r.end;
        }
        if next != cut_layer.len() {
            return bad("cluster extents do not cover the cut layer".into());
        }
        if and_layer.len() != cluster_extents.len() {
            return bad("one AND gate per cluster expected".into());
        }
        for (j, (gate, r)) in and_layer.iter().zip(&cluster_extents).enumerate() {
            if gate.arity() != cut_layer.len() {
                return bad(format!("AND gate {j} must read every cut"));
            }
            let k = r.len() as f64;
            let ok = gate
                .weights()
                .iter()
                .enumerate()
                .all(|(i, &w)| if r.contains(&i) { w == 1.0 } else { w == 0.0 });
            if !ok || gate.bias() != -(k - 0.5) {
                return bad(format!("AND gate {j} does not compute the conjunction of its cuts"));
            }
        }
        if or_gate.arity() != and_layer.len() || or_gate.weights().iter().any(|&w| w != 1.0) || or_gate.bias() != -0.5 {
            return bad("output gate is not a disjunction of the AND layer".into());
        }
        Ok(DnfNetwork {
            dim,
            cut_layer,
            and_layer,
            or_gate,
            cluster_extents,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cut_layer(&self) -> &[Cut] {
        &self.cut_layer
    }

    pub fn and_layer(&self) -> &[LogicGate] {
        &self.and_layer
    }

    pub fn or_gate(&self) -> &LogicGate {
        &self.or_gate
    }

    pub fn cluster_extents(&self) -> &[Range<usize>] {
        &self.cluster_extents
    }

    /// Units per layer: (cuts, conjunctions, 1).
    pub fn layer_sizes(&self) -> [usize; 3] {
        [self.cut_layer.len(), self.and_layer.len(), 1]
    }

    pub fn eval(&self, p: &Point) -> Result<DnfTrace> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        let x = p.coords();
        let cut_bits: Vec<bool> = self.cut_layer.iter().map(|c| c.value_unchecked(x) >= 0.0).collect();
        let and_bits: Vec<bool> = self.and_layer.iter().map(|g| g.fire_unchecked(&cut_bits)).collect();
        let output = self.or_gate.fire_unchecked(&and_bits);
        Ok(DnfTrace {
            cut_bits,
            and_bits,
            output,
        })
    }

    pub fn classify(&self, p: &Point) -> Result<bool> {
        Ok(self.eval(p)?.output)
    }
}

/// Builds the DNF network. Every polytope gets its own copies of its cuts.
pub fn build_dnf(polytopes: &[PolytopeSpec]) -> Result<DnfNetwork> {
    let first = polytopes.first().ok_or(Error::EmptyPolytopeList)?;
    let dim = first.dim();
    let mut cut_layer = Vec::new();
    let mut cluster_extents = Vec::with_capacity(polytopes.len());
    for ps in polytopes {
        if ps.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: ps.dim(),
            });
        }
        if ps.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let start = cut_layer.len();
        cut_layer.extend(ps.cuts().iter().cloned());
        cluster_extents.push(start..cut_layer.len());
    }
    let total = cut_layer.len();
    let and_layer = cluster_extents
        .iter()
        .map(|r| {
            let mut weights = vec![0.0; total];
            weights[r.clone()].fill(1.0);
            LogicGate::new(weights, -(r.len() as f64 - 0.5))
        })
        .collect::<Result<Vec<_>>>()?;
    let or_gate = make_or_gate(polytopes.len())?;
    Ok(DnfNetwork {
        dim,
        cut_layer,
        and_layer,
        or_gate,
        cluster_extents,
    })
}
