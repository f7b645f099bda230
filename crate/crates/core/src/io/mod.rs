//! On-disk formats: CSV datasets, JSON network documents and reports, PPM
//! decision maps.

mod dataset;
mod document;
mod render;

pub use dataset::{dataset_to_csv, parse_dataset_csv};
pub use document::{
    parse_networks, parse_report, serialize_networks, serialize_report, ChainDoc, ChainGateDoc, CutDoc, DnfDoc,
    GateDoc, NetworkSpecDocument, PolytopeDoc, SynthesisDoc, FORMAT_VERSION,
};
pub use render::{render_decision_map, DecisionMap, Rgb, CLASS0, CLASS1, DISAGREE};

use crate::error::Error;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported format version {found} (this build reads version {FORMAT_VERSION})")]
    UnsupportedVersion { found: String },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Invalid(#[from] Error),
}
