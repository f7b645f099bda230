//! Browser demo for `onegate`.
//!
//! Generates the three-island dataset, synthesizes both networks and exposes
//! three interactive operations to JavaScript: render a decision map, trace
//! the chain at a clicked point, and run a sampled equivalence check.
//!
//! Everything crossing the boundary is a number, a string or a byte vector,
//! so the same API is usable (and tested) natively.

use onegate::geometry::BoundingBox;
use onegate::io::DecisionMap;
use onegate::synth::BlobsConfig;
use onegate::verify::{default_epsilon, sample_points, SampleMode};
use onegate::{check_equivalence, lower_to_chain, synthesize, InputBound, LabeledDataset, Point, SynthesisResult};
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Demo {
    dataset: LabeledDataset,
    result: SynthesisResult,
    view: BoundingBox,
}

#[wasm_bindgen]
impl Demo {
    /// Builds a demo from a dataset seed. With `use_ids` false every positive
    /// point gets its own box; `margin` is a fraction of the data diagonal.
    #[wasm_bindgen(constructor)]
    pub fn new(seed: u64, use_ids: bool, margin: f64) -> Result<Demo, JsError> {
        Self::build(seed, use_ids, margin).map_err(js_err)
    }

    /// RGBA pixels for `net` = "dnf", "chain" or "diff". Row 0 is the top edge.
    pub fn render(&self, net: &str, width: usize, height: usize) -> Result<Vec<u8>, JsError> {
        self.map(net, width, height).map(|m| m.to_rgba()).map_err(js_err)
    }

    /// Chain activations at (x, y) as a string of 0/1 with `|` after each module.
    pub fn trace(&self, x: f64, y: f64) -> Result<String, JsError> {
        self.trace_text(x, y).map_err(js_err)
    }

    /// Runs the equivalence check on `samples` uniform points of the view and
    /// returns a JSON summary.
    pub fn verify(&self, samples: usize, seed: u64) -> Result<String, JsError> {
        self.verify_json(samples, seed).map_err(js_err)
    }

    /// Maps a pixel to plane coordinates, `[x, y]`.
    pub fn pixel_to_point(&self, width: usize, height: usize, col: usize, row: usize) -> Vec<f64> {
        DecisionMap::pixel_center(&self.view, width, height, col, row).to_vec()
    }

    /// Training points as flat `[x, y, label, ...]` triples.
    pub fn points(&self) -> Vec<f64> {
        self.dataset
            .points()
            .iter()
            .zip(self.dataset.labels())
            .flat_map(|(p, &l)| [p.coords()[0], p.coords()[1], if l { 1.0 } else { 0.0 }])
            .collect()
    }

    /// Network sizes as JSON.
    pub fn summary(&self) -> String {
        let r = &self.result;
        let [cuts, ands, _] = r.dnf.layer_sizes();
        serde_json::json!({
            "polytopes": r.polytopes.len(),
            "dnf": {"cuts": cuts, "and": ands, "or": 1},
            "chain": {"depth": r.chain.depth(), "S": r.chain.carry(), "L": r.bound.value()},
            "margin": r.margin,
        })
        .to_string()
    }
}

impl Demo {
    pub fn build(seed: u64, use_ids: bool, margin: f64) -> onegate::Result<Demo> {
        let mut dataset = BlobsConfig::three_islands().generate(seed)?;
        if !use_ids {
            dataset = dataset.without_cluster_ids();
        }
        let margin = margin * dataset.extents().diagonal();
        let mut result = synthesize(&dataset, margin)?;
        // the page samples the whole box, whose corners lie beyond the data
        let view = dataset.extents();
        result.bound = InputBound::new(view.max_norm())?;
        result.chain = lower_to_chain(&result.polytopes, result.bound)?;
        Ok(Demo { dataset, result, view })
    }

    pub fn map(&self, net: &str, width: usize, height: usize) -> onegate::Result<DecisionMap> {
        let (dnf, chain) = (&self.result.dnf, &self.result.chain);
        let region = self.view.clone();
        match net {
            "dnf" => DecisionMap::single(region, width, height, |p| dnf.classify(p)),
            "chain" => DecisionMap::single(region, width, height, |p| chain.classify(p)),
            "diff" => DecisionMap::diff(region, width, height, |p| dnf.classify(p), |p| chain.classify(p)),
            other => Err(onegate::Error::MalformedNetwork(format!("unknown network {other:?}"))),
        }
    }

    pub fn trace_text(&self, x: f64, y: f64) -> onegate::Result<String> {
        let chain = &self.result.chain;
        let t = chain.eval(&Point::new(vec![x, y])?)?;
        let mut s = String::with_capacity(t.bits.len() * 2);
        for (i, b) in t.bits.iter().enumerate() {
            s.push(if *b { '1' } else { '0' });
            if chain.gates()[i].is_combiner() && i + 1 < t.bits.len() {
                s.push('|');
            }
        }
        Ok(s)
    }

    pub fn verify_json(&self, samples: usize, seed: u64) -> onegate::Result<String> {
        let r = &self.result;
        let pts = sample_points(&self.view, samples, seed, SampleMode::Uniform)?;
        let eps = default_epsilon(&self.view);
        let report = check_equivalence(&r.dnf, &r.chain, &r.polytopes, &pts, eps)?;
        Ok(serde_json::json!({
            "points_tested": report.points_tested,
            "agreements": report.agreements,
            "disagreements": report.disagreements.len(),
            "beyond_epsilon": report.beyond_epsilon().count(),
            "epsilon": eps,
        })
        .to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo() -> Demo {
        Demo::build(1, true, 0.01).unwrap()
    }

    #[test]
    fn render_sizes_and_colors() {
        let d = demo();
        for net in ["dnf", "chain", "diff"] {
            let px = d.map(net, 30, 20).unwrap().to_rgba();
            assert_eq!(px.len(), 30 * 20 * 4);
            assert!(px.chunks(4).all(|c| c[3] == 255));
        }
        assert!(d.map("cnf", 30, 20).is_err());
        assert!(d.map("dnf", 0, 20).is_err());
    }

    #[test]
    fn trace_marks_modules() {
        let d = demo();
        let inside = d.trace_text(2.5, 2.5).unwrap();
        assert_eq!(inside.matches('|').count(), 2);
        assert!(inside.ends_with('1'));
        let outside = d.trace_text(9.9, 0.1).unwrap();
        assert!(outside.ends_with('0'));
        assert_eq!(outside.len(), inside.len());
    }

    #[test]
    fn verify_reports_no_disagreement_beyond_epsilon() {
        let v: serde_json::Value = serde_json::from_str(&demo().verify_json(5_000, 3).unwrap()).unwrap();
        assert_eq!(v["points_tested"], 5_000);
        assert_eq!(v["beyond_epsilon"], 0);
    }

    #[test]
    fn per_point_mode_builds_one_box_per_positive() {
        let d = Demo::build(1, false, 0.005).unwrap();
        let v: serde_json::Value = serde_json::from_str(&d.summary()).unwrap();
        assert_eq!(v["polytopes"], 90);
        assert_eq!(v["dnf"]["cuts"], 360);
        assert_eq!(d.points().len(), 3 * 390);
    }
}
