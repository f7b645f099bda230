//! Points, affine cuts and convex polytopes built from them.
//!
//! A [`Cut`] is a perceptron over homogeneous coordinates: it fires when
//! `w · x + b >= 0`. A [`PolytopeSpec`] is the conjunction of several cuts,
//! oriented so that the cluster it encloses sits on the positive side of each.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `‖(w, b)‖ = 1` for a cut to count as normalized.
pub const NORM_TOLERANCE: f64 = 1e-12;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn euclidean(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// A point in n-dimensional input space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<f64>", try_from = "Vec<f64>")]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("point coordinates"));
        }
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    /// Euclidean norm of the spatial coordinates.
    pub fn norm(&self) -> f64 {
        euclidean(&self.0)
    }

    /// The coordinates with the constant bias input 1 appended.
    pub fn homogenize(&self) -> Vec<f64> {
        let mut h = Vec::with_capacity(self.0.len() + 1);
        h.extend_from_slice(&self.0);
        h.push(1.0);
        h
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// An oriented affine half-space test `w · x + b >= 0`.
///
/// `b` is the weight on the constant-1 channel of the homogeneous input.
/// The spatial part `w` is never all zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Cut {
    w: Vec<f64>,
    b: f64,
}

impl Cut {
    pub fn new(w: Vec<f64>, b: f64) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if w.iter().any(|x| !x.is_finite()) || !b.is_finite() {
            return Err(Error::NonFinite("cut weights"));
        }
        if w.iter().all(|&x| x == 0.0) {
            return Err(Error::DegenerateCut);
        }
        Ok(Cut { w, b })
    }

    pub fn dim(&self) -> usize {
        self.w.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn bias(&self) -> f64 {
        self.b
    }

    /// The affine form `w · p + b`.
    pub fn value(&self, p: &Point) -> Result<f64> {
        check_dim(self.dim(), p.dim())?;
        Ok(self.value_unchecked(p.coords()))
    }

    pub(crate) fn value_unchecked(&self, x: &[f64]) -> f64 {
        dot(&self.w, x) + self.b
    }

    /// Fires (returns `true`) iff `w · p + b >= 0`. The hyperplane itself counts as positive.
    pub fn side(&self, p: &Point) -> Result<bool> {
        Ok(self.value(p)? >= 0.0)
    }

    /// Norm of the full homogeneous weight vector `(w, b)`.
    pub fn homogeneous_norm(&self) -> f64 {
        (dot(&self.w, &self.w) + self.b * self.b).sqrt()
    }

    pub fn spatial_norm(&self) -> f64 {
        euclidean(&self.w)
    }

    pub fn is_normalized(&self) -> bool {
        (self.homogeneous_norm() - 1.0).abs() <= NORM_TOLERANCE
    }

    /// Scales `(w, b)` to unit norm. Cuts already within [`NORM_TOLERANCE`]
    /// of unit norm are returned unchanged.
    pub fn normalized(&self) -> Cut {
        if self.is_normalized() {
            return self.clone();
        }
        self.scaled(1.0 / self.homogeneous_norm())
    }

    pub fn scaled(&self, s: f64) -> Cut {
        Cut {
            w: self.w.iter().map(|x| x * s).collect(),
            b: self.b * s,
        }
    }

    /// The complementary cut `(-w, -b)`.
    pub fn negated(&self) -> Cut {
        self.scaled(-1.0)
    }

    /// Orients the cut so that every cluster point lies strictly on its positive side,
    /// flipping all weights when the cluster is strictly negative.
    pub fn orient(&self, cluster: &[Point]) -> Result<Cut> {
        if cluster.is_empty() {
            return Err(Error::EmptyCluster);
        }
        let (mut pos, mut neg) = (false, false);
        for p in cluster {
            let v = self.value(p)?;
            if v > 0.0 {
                pos = true;
            } else if v < 0.0 {
                neg = true;
            } else {
                return Err(Error::StraddlingCluster);
            }
        }
        match (pos, neg) {
            (true, false) => Ok(self.clone()),
            (false, true) => Ok(self.negated()),
            _ => Err(Error::StraddlingCluster),
        }
    }

    /// Geometric distance from `p` to the cut's hyperplane.
    pub fn distance(&self, p: &Point) -> Result<f64> {
        Ok(self.value(p)?.abs() / self.spatial_norm())
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w=(")?;
        for (i, x) in self.w.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "), b={}", self.b)
    }
}

/// Conjunction of normalized cuts enclosing one cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct PolytopeSpec {
    dim: usize,
    cuts: Vec<Cut>,
}

impl PolytopeSpec {
    /// Builds a polytope, normalizing each cut. Rejects empty lists,
    /// mixed dimensions and repeated cuts.
    pub fn new(cuts: Vec<Cut>) -> Result<Self> {
        let first = cuts.first().ok_or(Error::EmptyPolytope)?;
        let dim = first.dim();
        let mut normalized: Vec<Cut> = Vec::with_capacity(cuts.len());
        for (i, c) in cuts.iter().enumerate() {
            check_dim(dim, c.dim())?;
            let c = c.normalized();
            if normalized.contains(&c) {
                return Err(Error::DuplicateCut(i));
            }
            normalized.push(c);
        }
        Ok(PolytopeSpec { dim, cuts: normalized })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// Membership with an inclusive boundary: every cut must fire.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        check_dim(self.dim, p.dim())?;
        Ok(self.cuts.iter().all(|c| c.value_unchecked(p.coords()) >= 0.0))
    }

    /// True iff every cut value at `p` is strictly positive.
    pub fn strictly_contains(&self, p: &Point) -> Result<bool> {
        check_dim(self.dim, p.dim())?;
        Ok(self.cuts.iter().all(|c| c.value_unchecked(p.coords()) > 0.0))
    }
}

pub fn point_in_polytope(ps: &PolytopeSpec, p: &Point) -> Result<bool> {
    ps.contains(p)
}

/// Upper bound `L` on the Euclidean norm of inputs a network will see.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(into = "f64", try_from = "f64")]
pub struct InputBound(f64);

impl InputBound {
    pub fn new(l: f64) -> Result<Self> {
        if !l.is_finite() || l < 0.0 {
            return Err(Error::NonFinite("input bound"));
        }
        Ok(InputBound(l))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn admits(self, p: &Point) -> bool {
        p.norm() <= self.0
    }
}

impl TryFrom<f64> for InputBound {
    type Error = Error;

    fn try_from(l: f64) -> Result<Self> {
        InputBound::new(l)
    }
}

impl From<InputBound> for f64 {
    fn from(b: InputBound) -> f64 {
        b.0
    }
}

/// Largest spatial norm over `points`.
pub fn input_bound(points: &[Point]) -> Result<InputBound> {
    if points.is_empty() {
        return Err(Error::EmptyDataset);
    }
    InputBound::new(points.iter().map(Point::norm).fold(0.0, f64::max))
}

/// Axis-aligned box `[lo_i, hi_i]` in input space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        check_dim(lo.len(), hi.len())?;
        if lo.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if lo.iter().chain(&hi).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("box bounds"));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l >= h) {
            return Err(Error::DegenerateBox);
        }
        Ok(BoundingBox { lo, hi })
    }

    /// Tight extents of a point set. May be flat along some axis.
    pub fn of_points(points: &[Point]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyDataset)?;
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for p in points {
            check_dim(lo.len(), p.dim())?;
            for (i, &c) in p.coords().iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        Ok(BoundingBox { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn diagonal(&self) -> f64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l) * (h - l))
            .sum::<f64>()
            .sqrt()
    }

    /// Largest norm of any point in the box (attained at a corner).
    pub fn max_norm(&self) -> f64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| l.abs().max(h.abs()).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// Cut with inward unit `direction` whose hyperplane sits `margin` beyond the
/// extreme point of `points` along that direction.
///
/// The bias is recomputed from the final weights so that the extreme point
/// evaluates to at least `margin / ‖(w, b)‖` under the same arithmetic
/// [`Cut::value`] uses; with zero margin it evaluates to exactly 0.
fn supporting_cut(direction: &[f64], points: &[Point], margin: f64) -> Cut {
    let len = euclidean(direction);
    let dir: Vec<f64> = direction.iter().map(|d| d / len).collect();
    let support = |w: &[f64]| points.iter().map(|p| dot(w, p.coords())).fold(f64::INFINITY, f64::min);
    let b0 = margin - support(&dir);
    let r = (1.0 + b0 * b0).sqrt();
    let w: Vec<f64> = dir.iter().map(|d| d / r).collect();
    let b = margin / r - support(&w);
    Cut { w, b }
}

fn box_polytope(points: &[Point], margin: f64) -> Result<PolytopeSpec> {
    let n = points[0].dim();
    let mut cuts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        cuts.push(supporting_cut(&e, points, margin));
        e[i] = -1.0;
        cuts.push(supporting_cut(&e, points, margin));
    }
    PolytopeSpec::new(cuts)
}

/// The 2n axis-aligned cuts of the box `[c_i - margin, c_i + margin]`,
/// ordered lower then upper face per axis.
pub fn bounding_box_cuts(center: &Point, margin: f64) -> Result<PolytopeSpec> {
    if !margin.is_finite() || margin <= 0.0 {
        return Err(Error::NonPositiveMargin(margin));
    }
    box_polytope(std::slice::from_ref(center), margin)
}

/// Extents box of `points` grown by `margin` on every side, as 2n cuts.
pub fn extents_box_cuts(points: &[Point], margin: f64) -> Result<PolytopeSpec> {
    if !margin.is_finite() || margin < 0.0 {
        return Err(Error::InvalidMargin(margin));
    }
    let first = points.first().ok_or(Error::EmptyCluster)?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    box_polytope(points, margin)
}

fn cross(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counter-clockwise hull vertices by Andrew's monotone chain, collinear
/// points dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<&Point> = points.iter().collect();
    pts.sort_by(|a, b| {
        a.coords()[0]
            .total_cmp(&b.coords()[0])
            .then(a.coords()[1].total_cmp(&b.coords()[1]))
    });
    pts.dedup_by(|a, b| a.coords() == b.coords());
    if pts.len() < 3 {
        return pts.into_iter().cloned().collect();
    }

    let mut hull: Vec<&Point> = Vec::with_capacity(2 * pts.len());
    // lower
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2].coords(), hull[hull.len() - 1].coords(), p.coords()) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    // upper
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2].coords(), hull[hull.len() - 1].coords(), p.coords()) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull.into_iter().cloned().collect()
}

/// One inward-oriented, normalized cut per convex-hull edge of a 2-D cluster,
/// pushed outward by `margin`. Clusters without three non-collinear points
/// get the margin-grown extents box instead.
pub fn convex_hull_cuts(cluster: &[Point], margin: f64) -> Result<PolytopeSpec> {
    let first = cluster.first().ok_or(Error::EmptyCluster)?;
    if first.dim() != 2 {
        return Err(Error::NotPlanar(first.dim()));
    }
    for p in cluster {
        check_dim(2, p.dim())?;
    }
    if !margin.is_finite() || margin < 0.0 {
        return Err(Error::InvalidMargin(margin));
    }
    let hull = convex_hull(cluster);
    if hull.len() < 3 {
        return extents_box_cuts(cluster, margin);
    }
    let cuts = (0..hull.len())
        .map(|i| {
            let a = hull[i].coords();
            let b = hull[(i + 1) % hull.len()].coords();
            // left normal of a counter-clockwise edge points inward
            let normal = [a[1] - b[1], b[0] - a[0]];
            supporting_cut(&normal, cluster, margin)
        })
        .collect();
    PolytopeSpec::new(cuts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    fn cut(w: &[f64], b: f64) -> Cut {
        Cut::new(w.to_vec(), b).unwrap()
    }

    fn unit_square() -> Vec<Point> {
        vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[1.0, 1.0]), p(&[0.0, 1.0])]
    }

    #[test]
    fn homogenize_appends_one() {
        assert_eq!(p(&[2.0, 3.0]).homogenize(), vec![2.0, 3.0, 1.0]);
        assert_eq!(p(&[0.0, 0.0]).homogenize(), vec![0.0, 0.0, 1.0]);
        assert_eq!(p(&[1.5, -2.0, 4.0]).homogenize(), vec![1.5, -2.0, 4.0, 1.0]);
    }

    #[test]
    fn point_validation() {
        assert_eq!(Point::new(vec![]), Err(Error::EmptyPoint));
        assert!(Point::new(vec![f64::NAN]).is_err());
        assert!(Point::new(vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn cut_side_is_inclusive() {
        let c = cut(&[1.0, 0.0], 0.0);
        assert!(c.side(&p(&[2.0, 3.0])).unwrap());
        assert!(c.side(&p(&[0.0, 5.0])).unwrap());
        assert!(!c.side(&p(&[-0.1, 7.0])).unwrap());
        assert_eq!(
            c.side(&p(&[1.0])),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn normalize_examples() {
        let c = cut(&[3.0, 4.0], 0.0).normalized();
        assert!((c.weights()[0] - 0.6).abs() < 1e-15);
        assert!((c.weights()[1] - 0.8).abs() < 1e-15);
        assert_eq!(c.bias(), 0.0);

        let c = cut(&[1.0, 0.0], 1.0).normalized();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((c.weights()[0] - h).abs() < 1e-15);
        assert_eq!(c.weights()[1], 0.0);
        assert!((c.bias() - h).abs() < 1e-15);
        assert!(c.is_normalized());

        assert_eq!(Cut::new(vec![0.0, 0.0], 1.0), Err(Error::DegenerateCut));
    }

    #[test]
    fn orient_examples() {
        let c = cut(&[1.0, 0.0], 0.0);
        let flipped = c.orient(&[p(&[-1.0, 0.0]), p(&[-2.0, 1.0])]).unwrap();
        assert_eq!(flipped.weights(), &[-1.0, -0.0]);
        assert_eq!(flipped.bias(), 0.0);
        assert_eq!(c.orient(&[p(&[1.0, 1.0])]).unwrap(), c);
        assert_eq!(
            c.orient(&[p(&[1.0, 0.0]), p(&[-1.0, 0.0])]),
            Err(Error::StraddlingCluster)
        );
        assert_eq!(c.orient(&[p(&[0.0, 3.0])]), Err(Error::StraddlingCluster));
        assert_eq!(c.orient(&[]), Err(Error::EmptyCluster));
    }

    #[test]
    fn hull_of_unit_square() {
        let ps = convex_hull_cuts(&unit_square(), 0.0).unwrap();
        assert_eq!(ps.len(), 4);
        assert!(ps.cuts().iter().all(Cut::is_normalized));
        for q in unit_square() {
            assert!(ps.contains(&q).unwrap(), "{q}");
        }
        assert!(ps.contains(&p(&[0.5, 0.5])).unwrap());
        assert!(!ps.contains(&p(&[2.0, 2.0])).unwrap());
        assert!(!ps.contains(&p(&[-0.1, 0.5])).unwrap());
    }

    #[test]
    fn hull_of_triangle() {
        let tri = [p(&[0.0, 0.0]), p(&[2.0, 0.0]), p(&[0.0, 2.0])];
        let ps = convex_hull_cuts(&tri, 0.0).unwrap();
        assert_eq!(ps.len(), 3);
        assert!(ps.contains(&p(&[2.0 / 3.0, 2.0 / 3.0])).unwrap());
        assert!(!ps.contains(&p(&[2.0, 2.0])).unwrap());
    }

    #[test]
    fn collinear_cluster_falls_back_to_box() {
        let line = [p(&[0.0, 0.0]), p(&[1.0, 0.0])];
        let ps = convex_hull_cuts(&line, 0.1).unwrap();
        assert_eq!(ps.len(), 4);
        for q in &line {
            assert!(ps.strictly_contains(q).unwrap());
        }
        assert!(ps.contains(&p(&[1.05, 0.05])).unwrap());
        assert!(!ps.contains(&p(&[1.2, 0.0])).unwrap());
        assert!(!ps.contains(&p(&[0.5, 0.2])).unwrap());
    }

    #[test]
    fn hull_drops_interior_and_edge_points() {
        let mut pts = unit_square();
        pts.push(p(&[0.5, 0.0]));
        pts.push(p(&[0.5, 0.5]));
        assert_eq!(convex_hull(&pts).len(), 4);
        let ps = convex_hull_cuts(&pts, 0.0).unwrap();
        assert_eq!(ps.len(), 4);
        assert!(pts.iter().all(|q| ps.contains(q).unwrap()));
    }

    #[test]
    fn hull_rejects_bad_input() {
        assert_eq!(convex_hull_cuts(&[], 0.0), Err(Error::EmptyCluster));
        assert_eq!(convex_hull_cuts(&[p(&[1.0, 2.0, 3.0])], 0.0), Err(Error::NotPlanar(3)));
        assert!(convex_hull_cuts(&unit_square(), -1.0).is_err());
    }

    #[test]
    fn bounding_box_examples() {
        let ps = bounding_box_cuts(&p(&[1.0, 2.0]), 0.5).unwrap();
        assert_eq!(ps.len(), 4);
        assert!(ps.contains(&p(&[1.0, 2.0])).unwrap());
        assert!(!ps.contains(&p(&[1.0, 3.0])).unwrap());
        // faces x=0.5, x=1.5, y=1.5, y=2.5
        for (q, inside) in [
            ([0.51, 2.0], true),
            ([0.49, 2.0], false),
            ([1.49, 2.0], true),
            ([1.51, 2.0], false),
            ([1.0, 1.51], true),
            ([1.0, 1.49], false),
            ([1.0, 2.49], true),
            ([1.0, 2.51], false),
        ] {
            assert_eq!(ps.contains(&p(&q)).unwrap(), inside, "{q:?}");
        }
        assert_eq!(bounding_box_cuts(&p(&[0.0]), 0.0), Err(Error::NonPositiveMargin(0.0)));
        assert_eq!(bounding_box_cuts(&p(&[0.0, 0.0, 0.0]), 1.0).unwrap().len(), 6);
    }

    #[test]
    fn membership_examples() {
        let ps = convex_hull_cuts(&unit_square(), 0.0).unwrap();
        assert!(point_in_polytope(&ps, &p(&[0.5, 0.5])).unwrap());
        assert!(!point_in_polytope(&ps, &p(&[2.0, 0.5])).unwrap());
        assert!(point_in_polytope(&ps, &p(&[0.0, 0.5])).unwrap());
        assert!(point_in_polytope(&ps, &p(&[0.5])).is_err());
    }

    #[test]
    fn polytope_rejects_duplicates_and_mixed_dims() {
        let c = cut(&[1.0, 0.0], 0.0);
        assert_eq!(
            PolytopeSpec::new(vec![c.clone(), c.scaled(3.0)]),
            Err(Error::DuplicateCut(1))
        );
        assert!(PolytopeSpec::new(vec![c, cut(&[1.0], 0.0)]).is_err());
        assert_eq!(PolytopeSpec::new(vec![]), Err(Error::EmptyPolytope));
    }

    #[test]
    fn input_bound_examples() {
        assert_eq!(input_bound(&[p(&[3.0, 4.0]), p(&[0.0, 1.0])]).unwrap().value(), 5.0);
        assert_eq!(input_bound(&[p(&[0.0, 0.0])]).unwrap().value(), 0.0);
        assert_eq!(input_bound(&[]), Err(Error::EmptyDataset));
    }

    #[test]
    fn distance_ignores_scale() {
        let c = cut(&[2.0, 0.0], -1.0);
        let q = p(&[3.0, 9.0]);
        assert_eq!(c.distance(&q).unwrap(), 2.5);
        assert_eq!(c.scaled(7.0).distance(&q).unwrap(), 2.5);
    }
}
