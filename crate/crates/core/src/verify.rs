//! Differential equivalence checking between a DNF network and its lowered
//! chain, plus exhaustive truth-table checks for logic gates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain_net::ChainNetwork;
use crate::dnf_net::{DnfNetwork, LogicGate};
use crate::error::{Error, Result};
use crate::geometry::{BoundingBox, Point, PolytopeSpec};
use crate::synth::LabeledDataset;

/// Identifier of the sampling generator, recorded in every report.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Boundary-exclusion radius relative to the sampling box diagonal.
pub const DEFAULT_EPSILON_FACTOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMode {
    Grid,
    Uniform,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic samples from `bounds`.
///
/// Grid mode emits the full lattice with `⌈count^(1/n)⌉` evenly spaced
/// values per axis (both box faces included), so it may return more than
/// `count` points; uniform mode returns exactly `count`.
pub fn sample_points(bounds: &BoundingBox, count: usize, seed: u64, mode: SampleMode) -> Result<Vec<Point>> {
    if count == 0 {
        return Err(Error::ZeroSamples);
    }
    let n = bounds.dim();
    if bounds
        .lo
        .iter()
        .zip(&bounds.hi)
        .any(|(l, h)| l.partial_cmp(h) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::DegenerateBox);
    }
    match mode {
        SampleMode::Uniform => {
            let mut rng = rng(seed);
            (0..count)
                .map(|_| {
                    let c = bounds
                        .lo
                        .iter()
                        .zip(&bounds.hi)
                        .map(|(&l, &h)| rng.random_range(l..=h))
                        .collect();
                    Point::new(c)
                })
                .collect()
        }
        SampleMode::Grid => {
            let mut per_axis = 1usize;
            while per_axis.checked_pow(n as u32).is_some_and(|t| t < count) {
                per_axis += 1;
            }
            let axis = |i: usize, k: usize| {
                if per_axis == 1 {
                    0.5 * (bounds.lo[i] + bounds.hi[i])
                } else {
                    let t = k as f64 / (per_axis - 1) as f64;
                    bounds.lo[i] + t * (bounds.hi[i] - bounds.lo[i])
                }
            };
            let total = per_axis.pow(n as u32);
            (0..total)
                .map(|mut idx| {
                    let mut c = vec![0.0; n];
                    for i in (0..n).rev() {
                        c[i] = axis(i, idx % per_axis);
                        idx /= per_axis;
                    }
                    Point::new(c)
                })
                .collect()
        }
    }
}

/// `count` uniform samples from the ball `‖x‖ <= radius` in `dim` dimensions,
/// by rejection from the enclosing cube.
pub fn sample_ball(radius: f64, dim: usize, count: usize, seed: u64) -> Result<Vec<Point>> {
    if count == 0 {
        return Err(Error::ZeroSamples);
    }
    if !radius.is_finite() || radius <= 0.0 || dim == 0 {
        return Err(Error::DegenerateBox);
    }
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c: Vec<f64> = (0..dim).map(|_| rng.random_range(-radius..=radius)).collect();
        let p = Point::new(c)?;
        if p.norm() <= radius {
            out.push(p);
        }
    }
    Ok(out)
}

/// Distance from `p` to the nearest cut hyperplane of any polytope.
pub fn boundary_distance(polytopes: &[PolytopeSpec], p: &Point) -> Result<f64> {
    let mut best = f64::INFINITY;
    for ps in polytopes {
        for c in ps.cuts() {
            best = best.min(c.distance(p)?);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Disagreement {
    pub point: Point,
    pub dnf_bit: bool,
    pub chain_bit: bool,
    pub boundary_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub points_tested: usize,
    pub agreements: usize,
    pub disagreements: Vec<Disagreement>,
    pub epsilon: f64,
    pub seed: Option<u64>,
    pub rng: Option<String>,
}

impl EquivalenceReport {
    /// Records the sampling seed the tested points came from.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self.rng = Some(RNG_ALGORITHM.to_string());
        self
    }

    /// Disagreements farther than `epsilon` from every hyperplane.
    pub fn beyond_epsilon(&self) -> impl Iterator<Item = &Disagreement> {
        self.disagreements
            .iter()
            .filter(move |d| d.boundary_distance > self.epsilon)
    }

    pub fn passed(&self) -> bool {
        self.beyond_epsilon().next().is_none()
    }
}

/// Evaluates both networks on every point and attributes each disagreement
/// to its distance from the nearest cut hyperplane.
///
/// Points are evaluated in parallel; the report keeps input order.
pub fn check_equivalence(
    dnf: &DnfNetwork,
    chain: &ChainNetwork,
    polytopes: &[PolytopeSpec],
    points: &[Point],
    epsilon: f64,
) -> Result<EquivalenceReport> {
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::InvalidMargin(epsilon));
    }
    if dnf.dim() != chain.dim() {
        return Err(Error::DimensionMismatch {
            expected: dnf.dim(),
            found: chain.dim(),
        });
    }
    let bound = chain.bound();
    let outcomes: Vec<Option<Disagreement>> = points
        .par_iter()
        .map(|p| {
            if !bound.admits(p) {
                return Err(Error::BoundViolated {
                    norm: p.norm(),
                    bound: bound.value(),
                });
            }
            let dnf_bit = dnf.classify(p)?;
            let chain_bit = chain.classify(p)?;
            if dnf_bit == chain_bit {
                return Ok(None);
            }
            Ok(Some(Disagreement {
                point: p.clone(),
                dnf_bit,
                chain_bit,
                boundary_distance: boundary_distance(polytopes, p)?,
            }))
        })
        .collect::<Result<_>>()?;
    let disagreements: Vec<Disagreement> = outcomes.into_iter().flatten().collect();
    Ok(EquivalenceReport {
        points_tested: points.len(),
        agreements: points.len() - disagreements.len(),
        disagreements,
        epsilon,
        seed: None,
        rng: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BooleanFn {
    Conjunction,
    Disjunction,
    Negation,
}

impl BooleanFn {
    pub fn apply(self, bits: &[bool]) -> bool {
        match self {
            BooleanFn::Conjunction => bits.iter().all(|&b| b),
            BooleanFn::Disjunction => bits.iter().any(|&b| b),
            BooleanFn::Negation => !bits[0],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateCheck {
    Pass,
    Fail {
        counterexample: Vec<bool>,
        expected: bool,
        actual: bool,
    },
}

/// Compares `gate` with `expected` on all `2^arity` bit patterns.
pub fn brute_force_gate_check(gate: &LogicGate, arity: usize, expected: BooleanFn) -> Result<GateCheck> {
    if arity > 20 {
        return Err(Error::ArityTooLarge(arity));
    }
    if arity < 1 || (expected == BooleanFn::Negation && arity != 1) {
        return Err(Error::InvalidArity);
    }
    if gate.arity() != arity {
        return Err(Error::BitCountMismatch {
            expected: gate.arity(),
            found: arity,
        });
    }
    let mut bits = vec![false; arity];
    for mask in 0u32..1 << arity {
        for (i, b) in bits.iter_mut().enumerate() {
            *b = mask >> (arity - 1 - i) & 1 == 1;
        }
        let actual = gate.fire(&bits)?;
        let want = expected.apply(&bits);
        if actual != want {
            return Ok(GateCheck::Fail {
                counterexample: bits,
                expected: want,
                actual,
            });
        }
    }
    Ok(GateCheck::Pass)
}

/// Fraction of dataset points on which `eval` reproduces the label.
pub fn accuracy<F>(eval: F, dataset: &LabeledDataset) -> Result<f64>
where
    F: Fn(&Point) -> Result<bool>,
{
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let mut hits = 0usize;
    for (p, &label) in dataset.points().iter().zip(dataset.labels()) {
        if eval(p)? == label {
            hits += 1;
        }
    }
    Ok(hits as f64 / dataset.len() as f64)
}

/// Default equivalence epsilon for a sampling region.
pub fn default_epsilon(region: &BoundingBox) -> f64 {
    DEFAULT_EPSILON_FACTOR * region.diagonal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_net::lower_to_chain;
    use crate::dnf_net::{build_dnf, make_and_gate, make_not_gate, make_or_gate};
    use crate::geometry::{convex_hull_cuts, Cut, InputBound};

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    fn unit_box() -> BoundingBox {
        BoundingBox::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap()
    }

    fn unit_square() -> PolytopeSpec {
        convex_hull_cuts(&[p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[1.0, 1.0]), p(&[0.0, 1.0])], 0.0).unwrap()
    }

    #[test]
    fn grid_lattice() {
        let pts = sample_points(&unit_box(), 4, 0, SampleMode::Grid).unwrap();
        let coords: Vec<&[f64]> = pts.iter().map(Point::coords).collect();
        assert_eq!(coords, vec![&[0.0, 0.0][..], &[0.0, 1.0], &[1.0, 0.0], &[1.0, 1.0]]);
        assert_eq!(sample_points(&unit_box(), 5, 0, SampleMode::Grid).unwrap().len(), 9);
        assert_eq!(
            sample_points(&unit_box(), 1, 0, SampleMode::Grid).unwrap()[0].coords(),
            &[0.5, 0.5]
        );
    }

    #[test]
    fn uniform_is_deterministic_and_contained() {
        let b = BoundingBox::new(vec![-2.0, 3.0], vec![1.0, 4.0]).unwrap();
        let a = sample_points(&b, 500, 42, SampleMode::Uniform).unwrap();
        assert_eq!(a, sample_points(&b, 500, 42, SampleMode::Uniform).unwrap());
        assert_ne!(a, sample_points(&b, 500, 43, SampleMode::Uniform).unwrap());
        assert!(a.iter().all(|q| {
            let c = q.coords();
            (-2.0..=1.0).contains(&c[0]) && (3.0..=4.0).contains(&c[1])
        }));
        assert_eq!(sample_points(&b, 0, 0, SampleMode::Uniform), Err(Error::ZeroSamples));
        let flat = BoundingBox {
            lo: vec![0.0, 0.0],
            hi: vec![1.0, 0.0],
        };
        assert_eq!(
            sample_points(&flat, 3, 0, SampleMode::Uniform),
            Err(Error::DegenerateBox)
        );
    }

    #[test]
    fn ball_samples_respect_radius() {
        let pts = sample_ball(3.0, 2, 1000, 7).unwrap();
        assert_eq!(pts.len(), 1000);
        assert!(pts.iter().all(|q| q.norm() <= 3.0));
        assert_eq!(pts, sample_ball(3.0, 2, 1000, 7).unwrap());
    }

    #[test]
    fn boundary_distance_examples() {
        let x_pos = PolytopeSpec::new(vec![Cut::new(vec![1.0, 0.0], 0.0).unwrap()]).unwrap();
        assert_eq!(
            boundary_distance(std::slice::from_ref(&x_pos), &p(&[0.5, 9.0])).unwrap(),
            0.5
        );
        assert_eq!(boundary_distance(&[x_pos], &p(&[0.0, 2.0])).unwrap(), 0.0);
        let quadrant = PolytopeSpec::new(vec![
            Cut::new(vec![1.0, 0.0], 0.0).unwrap(),
            Cut::new(vec![0.0, 1.0], 0.0).unwrap(),
        ])
        .unwrap();
        assert_eq!(boundary_distance(&[quadrant], &p(&[0.3, 0.2])).unwrap(), 0.2);
    }

    #[test]
    fn edge_point_disagrees_at_distance_zero() {
        let polys = [unit_square()];
        let dnf = build_dnf(&polys).unwrap();
        let chain = lower_to_chain(&polys, InputBound::new(2.0).unwrap()).unwrap();
        let r = check_equivalence(&dnf, &chain, &polys, &[p(&[0.0, 0.5]), p(&[0.5, 0.5])], 1e-9).unwrap();
        assert_eq!(r.points_tested, 2);
        assert_eq!(r.agreements, 1);
        let d = &r.disagreements[0];
        assert_eq!((d.dnf_bit, d.chain_bit, d.boundary_distance), (true, false, 0.0));
        assert!(r.passed());
    }

    #[test]
    fn bound_violation_is_an_error() {
        let polys = [unit_square()];
        let dnf = build_dnf(&polys).unwrap();
        let chain = lower_to_chain(&polys, InputBound::new(1.0).unwrap()).unwrap();
        assert!(matches!(
            check_equivalence(&dnf, &chain, &polys, &[p(&[3.0, 0.0])], 1e-9),
            Err(Error::BoundViolated { .. })
        ));
    }

    #[test]
    fn gate_checks() {
        assert_eq!(
            brute_force_gate_check(&make_and_gate(2).unwrap(), 2, BooleanFn::Conjunction).unwrap(),
            GateCheck::Pass
        );
        assert_eq!(
            brute_force_gate_check(&make_or_gate(3).unwrap(), 3, BooleanFn::Disjunction).unwrap(),
            GateCheck::Pass
        );
        assert_eq!(
            brute_force_gate_check(&make_not_gate(), 1, BooleanFn::Negation).unwrap(),
            GateCheck::Pass
        );
        let strict = LogicGate::new(vec![1.0, 1.0], -2.5).unwrap();
        assert_eq!(
            brute_force_gate_check(&strict, 2, BooleanFn::Conjunction).unwrap(),
            GateCheck::Fail {
                counterexample: vec![true, true],
                expected: true,
                actual: false
            }
        );
        assert_eq!(
            brute_force_gate_check(&make_and_gate(21).unwrap(), 21, BooleanFn::Conjunction),
            Err(Error::ArityTooLarge(21))
        );
    }

    #[test]
    fn accuracy_examples() {
        let ds = LabeledDataset::new(vec![p(&[0.0]), p(&[1.0]), p(&[2.0])], vec![true, true, true], None).unwrap();
        assert_eq!(accuracy(|_| Ok(true), &ds).unwrap(), 1.0);
        assert_eq!(accuracy(|_| Ok(false), &ds).unwrap(), 0.0);
        let mixed = LabeledDataset::new(vec![p(&[0.0]), p(&[1.0])], vec![true, false], None).unwrap();
        assert_eq!(accuracy(|q| Ok(q.coords()[0] < 0.5), &mixed).unwrap(), 1.0);
        assert_eq!(accuracy(|_| Ok(true), &mixed).unwrap(), 0.5);
    }
}
