//! Perceptron classifiers built from convex-polytope enclosures, and their
//! lowering into deep networks with a single gate per layer.
//!
//! The pipeline:
//!
//! 1. [`synth`] encloses each positive cluster in a polytope of oriented cuts.
//! 2. [`dnf_net::build_dnf`] wires those cuts into a three-layer network:
//!    cuts, one AND per polytope, one OR.
//! 3. [`chain_net::lower_to_chain`] rewrites that network as a chain of
//!    single-gate layers with skip connections from the input.
//! 4. [`verify::check_equivalence`] compares the two on sampled inputs.

pub mod chain_net;
pub mod cli;
pub mod dnf_net;
pub mod error;
pub mod geometry;
pub mod io;
pub mod synth;
pub mod verify;

pub use chain_net::{choose_s, lower_to_chain, ChainGate, ChainNetwork, ChainTrace};
pub use dnf_net::{build_dnf, make_and_gate, make_not_gate, make_or_gate, DnfNetwork, DnfTrace, LogicGate};
pub use error::{Error, Result};
pub use geometry::{BoundingBox, Cut, InputBound, Point, PolytopeSpec};
pub use synth::{synthesize, LabeledDataset, SynthesisResult};
pub use verify::{check_equivalence, EquivalenceReport};
