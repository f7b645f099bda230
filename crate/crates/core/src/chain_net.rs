//! Lowering of a DNF network into a deep chain with one gate per layer.
//!
//! Every layer holds a single perceptron. Chain gates see the input `x`
//! through skip connections plus the bit of the layer directly before them,
//! weighted by a large carry `S`, so a 1 sticks for the rest of the module.
//! A module over the negated cuts of a polytope therefore computes "outside
//! the polytope"; its closing combiner inverts that bit and ORs it with the
//! previous combiner's bit, which arrives through a skip connection with
//! weight `S`.
//!
//! Chain gates test `-(w · x + b) >= 0`, so a module reports "inside" only
//! when every cut value is strictly positive. Points exactly on a hyperplane
//! are classified 1 by the DNF network and 0 here.

use crate::error::{Error, Result};
use crate::geometry::{Cut, InputBound, Point, PolytopeSpec};

/// Carry weight for inputs bounded by `L`: `2·√(L² + 1)`.
///
/// A unit-norm homogeneous cut evaluates to at most `√(L² + 1)` in absolute
/// value on any `‖x‖ <= L`.
pub fn choose_s(bound: InputBound) -> f64 {
    let l = bound.value();
    2.0 * (l * l + 1.0).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub enum ChainGate {
    /// Tests `w · x + b + S·prev >= 0`; `carry == false` drops the `prev` term.
    NegatedCut { cut: Cut, carry: bool },
    /// Tests `-prev + S·found >= 0`, where `found` is the previous combiner's
    /// bit (present only when `skip`). Reads no input coordinates.
    Combiner { skip: bool },
}

impl ChainGate {
    pub fn is_combiner(&self) -> bool {
        matches!(self, ChainGate::Combiner { .. })
    }
}

/// Where a gate's inputs come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GateInputs {
    pub reads_x: bool,
    /// Layer whose bit enters with nonzero weight from directly below.
    pub prev_layer: Option<usize>,
    /// Earlier layer feeding this gate through a skip connection.
    pub skip_from: Option<usize>,
}

/// One chain computing the disjunction of `cuts`, built from the
/// cuts as given. The first gate has no carry input.
pub fn chain_or_module(cuts: &[Cut]) -> Result<Vec<ChainGate>> {
    if cuts.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    Ok(cuts
        .iter()
        .enumerate()
        .map(|(i, c)| ChainGate::NegatedCut {
            cut: c.clone(),
            carry: i > 0,
        })
        .collect())
}

/// Bits of a run of chain gates on `x`, with carry weight `s`.
pub fn eval_or_module(gates: &[ChainGate], s: f64, p: &Point) -> Result<Vec<bool>> {
    let mut bits = Vec::with_capacity(gates.len());
    let mut prev = false;
    for g in gates {
        let ChainGate::NegatedCut { cut, carry } = g else {
            return Err(Error::MalformedNetwork("combiner inside an OR module".into()));
        };
        let mut v = cut.value(p)?;
        if *carry && prev {
            v += s;
        }
        prev = v >= 0.0;
        bits.push(prev);
    }
    Ok(bits)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainNetwork {
    dim: usize,
    gates: Vec<ChainGate>,
    module_boundaries: Vec<usize>,
    carry: f64,
    bound: InputBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTrace {
    /// One bit per layer, in layer order.
    pub bits: Vec<bool>,
    /// The input norm exceeded `L`; carry dominance is not guaranteed.
    pub exceeds_bound: bool,
}

impl ChainTrace {
    pub fn output(&self) -> bool {
        *self.bits.last().expect("chain networks are never empty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainStats {
    pub depth: usize,
    pub modules: usize,
    pub cuts: usize,
    pub carry: f64,
    pub bound: f64,
}

impl ChainNetwork {
    /// Reassembles a network from its layers, checking the wiring rules that
    /// [`lower_to_chain`] follows. The carry weight only has to be positive;
    /// use [`ChainNetwork::carry_dominates`] to check it against `L`.
    pub fn from_parts(dim: usize, gates: Vec<ChainGate>, carry: f64, bound: InputBound) -> Result<Self> {
        let bad = |msg: String| Err(Error::MalformedNetwork(msg));
        if !carry.is_finite() || carry <= 0.0 {
            return bad(format!("carry weight S must be positive and finite, got {carry}"));
        }
        if !gates.last().is_some_and(ChainGate::is_combiner) {
            return bad("network must end with a combiner".into());
        }
        let mut module_boundaries = Vec::new();
        let mut run = 0;
        for (i, g) in gates.iter().enumerate() {
            match g {
                ChainGate::NegatedCut { cut, carry } => {
                    if cut.dim() != dim {
                        return bad(format!("layer {i}: cut dimension {} != {dim}", cut.dim()));
                    }
                    if !cut.is_normalized() {
                        return bad(format!("layer {i}: cut weights are not unit norm"));
                    }
                    if *carry != (run > 0) {
                        return bad(format!(
                            "layer {i}: only the first gate of a module lacks a carry input"
                        ));
                    }
                    run += 1;
                }
                ChainGate::Combiner { skip } => {
                    if run == 0 {
                        return bad(format!("layer {i}: combiner without a preceding chain"));
                    }
                    if *skip != !module_boundaries.is_empty() {
                        return bad(format!("layer {i}: only the first combiner lacks a skip input"));
                    }
                    module_boundaries.push(i);
                    run = 0;
                }
            }
        }
        Ok(ChainNetwork {
            dim,
            gates,
            module_boundaries,
            carry,
            bound,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gates(&self) -> &[ChainGate] {
        &self.gates
    }

    /// Layer indices (0-based) of the combiners.
    pub fn module_boundaries(&self) -> &[usize] {
        &self.module_boundaries
    }

    /// The carry weight `S`.
    pub fn carry(&self) -> f64 {
        self.carry
    }

    pub fn bound(&self) -> InputBound {
        self.bound
    }

    pub fn depth(&self) -> usize {
        self.gates.len()
    }

    /// True iff `S > √(L² + 1)`, the level at which carries dominate any cut value.
    pub fn carry_dominates(&self) -> bool {
        let l = self.bound.value();
        self.carry > (l * l + 1.0).sqrt()
    }

    /// Same network with a different carry weight.
    pub fn with_carry(&self, carry: f64) -> Result<Self> {
        Self::from_parts(self.dim, self.gates.clone(), carry, self.bound)
    }

    pub fn inputs(&self, layer: usize) -> Option<GateInputs> {
        let gate = self.gates.get(layer)?;
        Some(match gate {
            ChainGate::NegatedCut { carry, .. } => GateInputs {
                reads_x: true,
                prev_layer: carry.then(|| layer - 1),
                skip_from: None,
            },
            ChainGate::Combiner { skip } => {
                let k = self.module_boundaries.partition_point(|&b| b < layer);
                GateInputs {
                    reads_x: false,
                    prev_layer: Some(layer - 1),
                    skip_from: skip.then(|| self.module_boundaries[k - 1]),
                }
            }
        })
    }

    pub fn eval(&self, p: &Point) -> Result<ChainTrace> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        let x = p.coords();
        let s = self.carry;
        let mut bits = Vec::with_capacity(self.gates.len());
        let mut prev = false;
        let mut found = false;
        for g in &self.gates {
            let v = match g {
                ChainGate::NegatedCut { cut, carry } => cut.value_unchecked(x) + if *carry && prev { s } else { 0.0 },
                ChainGate::Combiner { skip } => {
                    let inverted = if prev { -1.0 } else { 0.0 };
                    inverted + if *skip && found { s } else { 0.0 }
                }
            };
            prev = v >= 0.0;
            if g.is_combiner() {
                found = prev;
            }
            bits.push(prev);
        }
        Ok(ChainTrace {
            bits,
            exceeds_bound: !self.bound.admits(p),
        })
    }

    pub fn classify(&self, p: &Point) -> Result<bool> {
        Ok(self.eval(p)?.output())
    }

    pub fn stats(&self) -> ChainStats {
        ChainStats {
            depth: self.gates.len(),
            modules: self.module_boundaries.len(),
            cuts: self.gates.len() - self.module_boundaries.len(),
            carry: self.carry,
            bound: self.bound.value(),
        }
    }
}

pub fn chain_stats(net: &ChainNetwork) -> ChainStats {
    net.stats()
}

/// Lowers polytopes into a chain network sized for inputs with `‖x‖ <= L`.
///
/// Each polytope becomes a chain over its negated cuts followed by one
/// combiner, so the network has `Σ k_j + m` layers.
pub fn lower_to_chain(polytopes: &[PolytopeSpec], bound: InputBound) -> Result<ChainNetwork> {
    let first = polytopes.first().ok_or(Error::EmptyPolytopeList)?;
    let dim = first.dim();
    let mut gates = Vec::with_capacity(polytopes.iter().map(|ps| ps.len() + 1).sum());
    for (j, ps) in polytopes.iter().enumerate() {
        if ps.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: ps.dim(),
            });
        }
        let negated: Vec<Cut> = ps.cuts().iter().map(|c| c.normalized().negated()).collect();
        gates.extend(chain_or_module(&negated)?);
        gates.push(ChainGate::Combiner { skip: j > 0 });
    }
    ChainNetwork::from_parts(dim, gates, choose_s(bound), bound)
}
