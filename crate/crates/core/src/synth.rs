//! Labeled points to polytopes to both network forms.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain_net::{lower_to_chain, ChainNetwork};
use crate::dnf_net::{build_dnf, DnfNetwork};
use crate::error::{Error, Offender, Result};
use crate::geometry::{
    bounding_box_cuts, convex_hull_cuts, extents_box_cuts, input_bound, BoundingBox, InputBound, Point, PolytopeSpec,
};
use crate::verify::{accuracy, boundary_distance, DEFAULT_EPSILON_FACTOR};

/// Two-class point set. Cluster ids, when present, are set on exactly the
/// positive points.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    points: Vec<Point>,
    labels: Vec<bool>,
    cluster_ids: Option<Vec<Option<i64>>>,
}

impl LabeledDataset {
    pub fn new(points: Vec<Point>, labels: Vec<bool>, cluster_ids: Option<Vec<Option<i64>>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyDataset)?;
        if labels.len() != points.len() {
            return Err(Error::InvalidDataset(format!(
                "{} points but {} labels",
                points.len(),
                labels.len()
            )));
        }
        if let Some(q) = points.iter().find(|q| q.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: q.dim(),
            });
        }
        if let Some(ids) = &cluster_ids {
            if ids.len() != points.len() {
                return Err(Error::InvalidDataset(
                    "cluster id column length differs from points".into(),
                ));
            }
            if let Some(i) = ids.iter().zip(&labels).position(|(id, &l)| id.is_some() != l) {
                return Err(Error::InvalidDataset(format!(
                    "row {i}: cluster ids must be set on exactly the positive points"
                )));
            }
        }
        Ok(LabeledDataset {
            points,
            labels,
            cluster_ids,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    pub fn cluster_ids(&self) -> Option<&[Option<i64>]> {
        self.cluster_ids.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn without_cluster_ids(&self) -> Self {
        LabeledDataset {
            cluster_ids: None,
            ..self.clone()
        }
    }

    pub fn negatives(&self) -> Vec<Point> {
        self.points
            .iter()
            .zip(&self.labels)
            .filter(|(_, &l)| !l)
            .map(|(p, _)| p.clone())
            .collect()
    }

    pub fn extents(&self) -> BoundingBox {
        BoundingBox::of_points(&self.points).expect("dataset is nonempty and uniform in dimension")
    }

    /// 1% of the bounding-box diagonal.
    pub fn default_margin(&self) -> f64 {
        0.01 * self.extents().diagonal()
    }
}

/// Positive points grouped by cluster id (ascending), or one singleton
/// group per positive point when the dataset carries no ids.
pub fn group_positive(dataset: &LabeledDataset) -> Result<Vec<Vec<Point>>> {
    let positives = dataset.points.iter().zip(&dataset.labels).filter(|(_, &l)| l);
    let groups: Vec<Vec<Point>> = match &dataset.cluster_ids {
        Some(ids) => {
            let mut by_id: BTreeMap<i64, Vec<Point>> = BTreeMap::new();
            for (p, id) in dataset.points.iter().zip(ids) {
                if let Some(id) = id {
                    by_id.entry(*id).or_default().push(p.clone());
                }
            }
            by_id.into_values().collect()
        }
        None => positives.map(|(p, _)| vec![p.clone()]).collect(),
    };
    if groups.is_empty() {
        return Err(Error::NoPositiveClass);
    }
    Ok(groups)
}

fn enclose(group: &[Point], margin: f64) -> Result<PolytopeSpec> {
    match group {
        [single] => bounding_box_cuts(single, margin),
        _ if group[0].dim() == 2 => convex_hull_cuts(group, margin),
        _ => extents_box_cuts(group, margin),
    }
}

/// One margin-grown polytope per group, checked against every negative.
pub fn build_polytopes(groups: &[Vec<Point>], negatives: &[Point], margin: f64) -> Result<Vec<PolytopeSpec>> {
    if !margin.is_finite() || margin <= 0.0 {
        return Err(Error::NonPositiveMargin(margin));
    }
    let polytopes = groups
        .iter()
        .map(|g| {
            if g.is_empty() {
                return Err(Error::EmptyCluster);
            }
            enclose(g, margin)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut offenders = Vec::new();
    for (j, ps) in polytopes.iter().enumerate() {
        for q in negatives {
            if ps.contains(q)? {
                offenders.push(Offender {
                    polytope: j,
                    point: q.clone(),
                });
            }
        }
    }
    if !offenders.is_empty() {
        return Err(Error::SeparationFailure { offenders });
    }

    for (ps, g) in polytopes.iter().zip(groups) {
        for q in g {
            if !ps.strictly_contains(q)? {
                return Err(Error::MarginTooSmall {
                    point: q.clone(),
                    distance: boundary_distance(std::slice::from_ref(ps), q)?,
                    epsilon: 0.0,
                });
            }
        }
    }
    Ok(polytopes)
}

#[derive(Debug, Clone)]
pub struct SynthesisResult {
    pub polytopes: Vec<PolytopeSpec>,
    pub dnf: DnfNetwork,
    pub chain: ChainNetwork,
    pub train_accuracy_dnf: f64,
    pub train_accuracy_chain: f64,
    pub bound: InputBound,
    pub margin: f64,
}

/// Full pipeline: group, enclose, validate, build both networks and confirm
/// both separate the training data perfectly.
pub fn synthesize(dataset: &LabeledDataset, margin: f64) -> Result<SynthesisResult> {
    let groups = group_positive(dataset)?;
    let polytopes = build_polytopes(&groups, &dataset.negatives(), margin)?;

    let epsilon = DEFAULT_EPSILON_FACTOR * dataset.extents().diagonal();
    for q in dataset.points() {
        let distance = boundary_distance(&polytopes, q)?;
        if distance <= epsilon {
            return Err(Error::MarginTooSmall {
                point: q.clone(),
                distance,
                epsilon,
            });
        }
    }

    let bound = input_bound(dataset.points())?;
    let dnf = build_dnf(&polytopes)?;
    let chain = lower_to_chain(&polytopes, bound)?;
    let train_accuracy_dnf = accuracy(|q| dnf.classify(q), dataset)?;
    let train_accuracy_chain = accuracy(|q| chain.classify(q), dataset)?;
    for (network, acc) in [("DNF", train_accuracy_dnf), ("chain", train_accuracy_chain)] {
        if acc != 1.0 {
            return Err(Error::AccuracyShortfall { network, accuracy: acc });
        }
    }
    Ok(SynthesisResult {
        polytopes,
        dnf,
        chain,
        train_accuracy_dnf,
        train_accuracy_chain,
        bound,
        margin,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Blob {
    pub center: [f64; 2],
    pub radius: f64,
    pub count: usize,
}

/// Planar generator for "islands" of positives on a negative background.
#[derive(Debug, Clone, PartialEq)]
pub struct BlobsConfig {
    pub blobs: Vec<Blob>,
    pub negatives: usize,
    pub lo: [f64; 2],
    pub hi: [f64; 2],
    /// Minimum gap between any negative and any blob disc.
    pub clearance: f64,
}

impl BlobsConfig {
    /// Three blobs of 30 points each on a 300-point background in `[0, 10]²`.
    pub fn three_islands() -> Self {
        let blob = |x, y, r| Blob {
            center: [x, y],
            radius: r,
            count: 30,
        };
        BlobsConfig {
            blobs: vec![blob(2.5, 2.5, 1.3), blob(7.2, 3.0, 1.1), blob(4.2, 7.4, 1.4)],
            negatives: 300,
            lo: [0.0, 0.0],
            hi: [10.0, 10.0],
            clearance: 0.8,
        }
    }

    /// Positives first (blob by blob, ids 1, 2, ...), then negatives.
    pub fn generate(&self, seed: u64) -> Result<LabeledDataset> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points = Vec::new();
        let mut labels = Vec::new();
        let mut ids = Vec::new();
        for (j, b) in self.blobs.iter().enumerate() {
            for _ in 0..b.count {
                let r = b.radius * rng.random::<f64>().sqrt();
                let t = rng.random_range(0.0..std::f64::consts::TAU);
                points.push(Point::new(vec![b.center[0] + r * t.cos(), b.center[1] + r * t.sin()])?);
                labels.push(true);
                ids.push(Some(j as i64 + 1));
            }
        }
        let mut placed = 0;
        let mut attempts = 0usize;
        while placed < self.negatives {
            attempts += 1;
            if attempts > 1000 * (self.negatives + 1) {
                return Err(Error::InvalidDataset(
                    "background too crowded for the requested negatives".into(),
                ));
            }
            let x = rng.random_range(self.lo[0]..=self.hi[0]);
            let y = rng.random_range(self.lo[1]..=self.hi[1]);
            let clear = self.blobs.iter().all(|b| {
                let d = ((x - b.center[0]).powi(2) + (y - b.center[1]).powi(2)).sqrt();
                d > b.radius + self.clearance
            });
            if clear {
                points.push(Point::new(vec![x, y])?);
                labels.push(false);
                ids.push(None);
                placed += 1;
            }
        }
        LabeledDataset::new(points, labels, Some(ids))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn grouping_by_id() {
        let pts: Vec<Point> = (0..7).map(|i| p(&[i as f64, 0.0])).collect();
        let labels = vec![true, true, true, true, true, true, false];
        let ids = vec![Some(1), Some(1), Some(2), Some(2), Some(2), Some(3), None];
        let ds = LabeledDataset::new(pts, labels, Some(ids)).unwrap();
        let sizes: Vec<usize> = group_positive(&ds).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 3, 1]);
    }

    #[test]
    fn grouping_without_ids_is_per_point() {
        let pts: Vec<Point> = (0..6).map(|i| p(&[i as f64])).collect();
        let ds = LabeledDataset::new(pts, vec![true, true, false, true, true, true], None).unwrap();
        let groups = group_positive(&ds).unwrap();
        assert_eq!(groups.len(), 5);
        assert!(groups.iter().all(|g| g.len() == 1));
    }

    #[test]
    fn grouping_needs_positives() {
        let ds = LabeledDataset::new(vec![p(&[0.0]), p(&[1.0])], vec![false, false], None).unwrap();
        assert_eq!(group_positive(&ds), Err(Error::NoPositiveClass));
    }

    #[test]
    fn dataset_validation() {
        assert!(LabeledDataset::new(vec![p(&[0.0])], vec![], None).is_err());
        assert!(LabeledDataset::new(vec![p(&[0.0])], vec![true], Some(vec![None])).is_err());
        assert!(LabeledDataset::new(vec![p(&[0.0])], vec![false], Some(vec![Some(1)])).is_err());
        assert!(LabeledDataset::new(vec![p(&[0.0]), p(&[0.0, 1.0])], vec![true, false], None).is_err());
        assert_eq!(LabeledDataset::new(vec![], vec![], None), Err(Error::EmptyDataset));
    }

    #[test]
    fn two_blobs_separate() {
        let cfg = BlobsConfig {
            blobs: vec![
                Blob {
                    center: [2.0, 2.0],
                    radius: 1.0,
                    count: 20,
                },
                Blob {
                    center: [7.0, 7.0],
                    radius: 1.0,
                    count: 20,
                },
            ],
            negatives: 100,
            lo: [0.0, 0.0],
            hi: [9.0, 9.0],
            clearance: 0.5,
        };
        let ds = cfg.generate(3).unwrap();
        let groups = group_positive(&ds).unwrap();
        let negatives = ds.negatives();
        let polys = build_polytopes(&groups, &negatives, 0.1).unwrap();
        assert_eq!(polys.len(), 2);
        for ps in &polys {
            assert!(negatives.iter().all(|q| !ps.contains(q).unwrap()));
        }
    }

    #[test]
    fn planted_negative_is_reported() {
        let cluster = vec![p(&[0.0, 0.0]), p(&[2.0, 0.0]), p(&[0.0, 2.0]), p(&[2.0, 2.0])];
        let planted = p(&[1.0, 1.0]);
        let err = build_polytopes(&[cluster], &[p(&[5.0, 5.0]), planted.clone()], 0.1).unwrap_err();
        match err {
            Error::SeparationFailure { offenders } => {
                assert_eq!(
                    offenders,
                    vec![Offender {
                        polytope: 0,
                        point: planted
                    }]
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_labels_fail_in_singleton_mode() {
        let ds = LabeledDataset::new(vec![p(&[1.0, 1.0]), p(&[1.0, 1.0])], vec![true, false], None).unwrap();
        assert!(matches!(synthesize(&ds, 0.1), Err(Error::SeparationFailure { .. })));
    }

    #[test]
    fn single_positive_structure() {
        let ds = LabeledDataset::new(vec![p(&[0.0, 0.0]), p(&[10.0, 0.0])], vec![true, false], None).unwrap();
        let r = synthesize(&ds, 1.0).unwrap();
        assert_eq!(r.polytopes.len(), 1);
        assert_eq!(r.polytopes[0].len(), 4);
        assert_eq!(r.dnf.layer_sizes(), [4, 1, 1]);
        assert_eq!(r.chain.depth(), 5);
        assert_eq!((r.train_accuracy_dnf, r.train_accuracy_chain), (1.0, 1.0));
        assert_eq!(r.bound.value(), 10.0);
    }

    #[test]
    fn three_islands_both_groupings() {
        let ds = BlobsConfig::three_islands().generate(11).unwrap();
        assert_eq!(ds.len(), 390);
        let margin = ds.default_margin();
        let with_ids = synthesize(&ds, margin).unwrap();
        assert_eq!(with_ids.polytopes.len(), 3);
        let per_point = synthesize(&ds.without_cluster_ids(), margin).unwrap();
        assert_eq!(per_point.polytopes.len(), 90);
        for r in [&with_ids, &per_point] {
            assert_eq!((r.train_accuracy_dnf, r.train_accuracy_chain), (1.0, 1.0));
        }
    }

    #[test]
    fn nonpositive_margin_rejected() {
        assert_eq!(
            build_polytopes(&[vec![p(&[0.0, 0.0])]], &[], 0.0),
            Err(Error::NonPositiveMargin(0.0))
        );
    }
}
