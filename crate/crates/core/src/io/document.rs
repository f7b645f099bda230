use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::chain_net::{ChainGate, ChainNetwork};
use crate::dnf_net::{DnfNetwork, LogicGate};
use crate::geometry::{Cut, InputBound, PolytopeSpec};
use crate::synth::SynthesisResult;
use crate::verify::EquivalenceReport;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutDoc {
    pub w: Vec<f64>,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub cuts: Vec<CutDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateDoc {
    pub weights: Vec<f64>,
    pub bias: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DnfDoc {
    pub cut_layer: Vec<CutDoc>,
    pub and_layer: Vec<GateDoc>,
    pub or_gate: GateDoc,
    /// Half-open `[start, end)` cut index ranges, one per polytope.
    pub cluster_extents: Vec<[usize; 2]>,
}

/// A chain layer. Carry and skip inputs, when present, have weight `S`; a
/// combiner's weight on the preceding bit is always -1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChainGateDoc {
    NegatedCut { w: Vec<f64>, b: f64, carry: bool },
    Combiner { skip: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    #[serde(rename = "S")]
    pub s: f64,
    #[serde(rename = "L")]
    pub l: f64,
    pub module_boundaries: Vec<usize>,
    pub gates: Vec<ChainGateDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthesisDoc {
    pub margin: f64,
    pub train_accuracy_dnf: f64,
    pub train_accuracy_chain: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkSpecDocument {
    pub version: u64,
    pub dimension: usize,
    pub polytopes: Vec<PolytopeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dnf: Option<DnfDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub synthesis: Option<SynthesisDoc>,
}

fn cut_doc(c: &Cut) -> CutDoc {
    CutDoc {
        w: c.weights().to_vec(),
        b: c.bias(),
    }
}

fn gate_doc(g: &LogicGate) -> GateDoc {
    GateDoc {
        weights: g.weights().to_vec(),
        bias: g.bias(),
    }
}

fn schema(path: impl Into<String>, e: impl ToString) -> FormatError {
    FormatError::Schema {
        path: path.into(),
        message: e.to_string(),
    }
}

fn cut_from(path: String, d: &CutDoc) -> Result<Cut, FormatError> {
    Cut::new(d.w.clone(), d.b).map_err(|e| schema(path, e))
}

impl NetworkSpecDocument {
    pub fn new(polytopes: &[PolytopeSpec], dnf: Option<&DnfNetwork>, chain: Option<&ChainNetwork>) -> Self {
        NetworkSpecDocument {
            version: FORMAT_VERSION,
            dimension: polytopes.first().map_or(0, PolytopeSpec::dim),
            polytopes: polytopes
                .iter()
                .map(|ps| PolytopeDoc {
                    cuts: ps.cuts().iter().map(cut_doc).collect(),
                })
                .collect(),
            dnf: dnf.map(DnfDoc::from),
            chain: chain.map(ChainDoc::from),
            synthesis: None,
        }
    }

    pub fn from_synthesis(r: &SynthesisResult) -> Self {
        NetworkSpecDocument {
            synthesis: Some(SynthesisDoc {
                margin: r.margin,
                train_accuracy_dnf: r.train_accuracy_dnf,
                train_accuracy_chain: r.train_accuracy_chain,
            }),
            ..Self::new(&r.polytopes, Some(&r.dnf), Some(&r.chain))
        }
    }

    pub fn to_polytopes(&self) -> Result<Vec<PolytopeSpec>, FormatError> {
        if self.polytopes.is_empty() {
            return Err(schema("polytopes", "at least one polytope required"));
        }
        self.polytopes
            .iter()
            .enumerate()
            .map(|(j, pd)| {
                let cuts = pd
                    .cuts
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cut_from(format!("polytopes[{j}].cuts[{i}]"), c))
                    .collect::<Result<Vec<_>, _>>()?;
                let ps = PolytopeSpec::new(cuts).map_err(|e| schema(format!("polytopes[{j}]"), e))?;
                if ps.dim() != self.dimension {
                    return Err(schema(
                        format!("polytopes[{j}]"),
                        format!(
                            "dimension {} differs from document dimension {}",
                            ps.dim(),
                            self.dimension
                        ),
                    ));
                }
                Ok(ps)
            })
            .collect()
    }

    pub fn to_dnf(&self) -> Result<Option<DnfNetwork>, FormatError> {
        let Some(d) = &self.dnf else { return Ok(None) };
        let cut_layer = d
            .cut_layer
            .iter()
            .enumerate()
            .map(|(i, c)| cut_from(format!("dnf.cut_layer[{i}]"), c))
            .collect::<Result<Vec<_>, _>>()?;
        let gate = |path: String, g: &GateDoc| LogicGate::new(g.weights.clone(), g.bias).map_err(|e| schema(path, e));
        let and_layer = d
            .and_layer
            .iter()
            .enumerate()
            .map(|(i, g)| gate(format!("dnf.and_layer[{i}]"), g))
            .collect::<Result<Vec<_>, _>>()?;
        let or_gate = gate("dnf.or_gate".into(), &d.or_gate)?;
        let extents = d.cluster_extents.iter().map(|[a, b]| *a..*b).collect();
        DnfNetwork::from_parts(self.dimension, cut_layer, and_layer, or_gate, extents)
            .map(Some)
            .map_err(|e| schema("dnf", e))
    }

    pub fn to_chain(&self) -> Result<Option<ChainNetwork>, FormatError> {
        let Some(d) = &self.chain else { return Ok(None) };
        let bound = InputBound::new(d.l).map_err(|e| schema("chain.L", e))?;
        let gates = d
            .gates
            .iter()
            .enumerate()
            .map(|(i, g)| {
                Ok(match g {
                    ChainGateDoc::NegatedCut { w, b, carry } => ChainGate::NegatedCut {
                        cut: Cut::new(w.clone(), *b).map_err(|e| schema(format!("chain.gates[{i}]"), e))?,
                        carry: *carry,
                    },
                    ChainGateDoc::Combiner { skip } => ChainGate::Combiner { skip: *skip },
                })
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        let net = ChainNetwork::from_parts(self.dimension, gates, d.s, bound).map_err(|e| schema("chain", e))?;
        if net.module_boundaries() != d.module_boundaries.as_slice() {
            return Err(schema(
                "chain.module_boundaries",
                "does not match the combiner positions",
            ));
        }
        Ok(Some(net))
    }
}

impl From<&DnfNetwork> for DnfDoc {
    fn from(net: &DnfNetwork) -> Self {
        DnfDoc {
            cut_layer: net.cut_layer().iter().map(cut_doc).collect(),
            and_layer: net.and_layer().iter().map(gate_doc).collect(),
            or_gate: gate_doc(net.or_gate()),
            cluster_extents: net.cluster_extents().iter().map(|r| [r.start, r.end]).collect(),
        }
    }
}

impl From<&ChainNetwork> for ChainDoc {
    fn from(net: &ChainNetwork) -> Self {
        ChainDoc {
            s: net.carry(),
            l: net.bound().value(),
            module_boundaries: net.module_boundaries().to_vec(),
            gates: net
                .gates()
                .iter()
                .map(|g| match g {
                    ChainGate::NegatedCut { cut, carry } => ChainGateDoc::NegatedCut {
                        w: cut.weights().to_vec(),
                        b: cut.bias(),
                        carry: *carry,
                    },
                    ChainGate::Combiner { skip } => ChainGateDoc::Combiner { skip: *skip },
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline. Floats use the shortest decimal form
/// that parses back to the same value.
pub fn serialize_networks(doc: &NetworkSpecDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

/// Parses a network document, checking the version before the schema.
pub fn parse_networks(text: &str) -> Result<NetworkSpecDocument, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    match value.get("version") {
        None => return Err(schema("version", "missing field")),
        Some(v) if v.as_u64() == Some(FORMAT_VERSION) => {}
        Some(v) => {
            return Err(FormatError::UnsupportedVersion {
                found: match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                },
            })
        }
    }
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner())
    })
}

pub fn serialize_report(report: &EquivalenceReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_report(text: &str) -> Result<EquivalenceReport, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner())
    })
}
