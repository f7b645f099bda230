#![allow(dead_code)]

use onegate::geometry::convex_hull_cuts;
use onegate::{BoundingBox, InputBound, Point, PolytopeSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random planar geometry: 1-5 convex polygons with 3-8 edges each,
/// all inside `region()`.
pub struct Geometry {
    pub polytopes: Vec<PolytopeSpec>,
}

pub fn region() -> BoundingBox {
    BoundingBox::new(vec![-8.0, -8.0], vec![8.0, 8.0]).unwrap()
}

pub fn region_bound() -> InputBound {
    InputBound::new(region().max_norm()).unwrap()
}

/// Convex polygon with exactly `k` vertices on a circle.
pub fn random_polygon(rng: &mut impl Rng, k: usize) -> PolytopeSpec {
    let cx = rng.random_range(-5.0..5.0);
    let cy = rng.random_range(-5.0..5.0);
    let r = rng.random_range(0.5..3.0);
    let offset = rng.random_range(0.0..std::f64::consts::TAU);
    let step = std::f64::consts::TAU / k as f64;
    let pts: Vec<Point> = (0..k)
        .map(|i| {
            let t = offset + step * (i as f64 + rng.random_range(-0.3..0.3));
            Point::new(vec![cx + r * t.cos(), cy + r * t.sin()]).unwrap()
        })
        .collect();
    let ps = convex_hull_cuts(&pts, 0.0).unwrap();
    assert_eq!(ps.len(), k);
    ps
}

pub fn random_geometry(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.random_range(1..=5);
    let polytopes = (0..m)
        .map(|_| {
            let k = rng.random_range(3..=8);
            random_polygon(&mut rng, k)
        })
        .collect();
    Geometry { polytopes }
}

pub fn p(c: &[f64]) -> Point {
    Point::new(c.to_vec()).unwrap()
}

pub fn unit_square() -> PolytopeSpec {
    convex_hull_cuts(&[p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[1.0, 1.0]), p(&[0.0, 1.0])], 0.0).unwrap()
}

/// Polytopes with 4, 3 and 2 cuts.
pub fn mixed_polytopes() -> Vec<PolytopeSpec> {
    let tri = convex_hull_cuts(&[p(&[3.0, 0.0]), p(&[5.0, 0.0]), p(&[3.0, 2.0])], 0.0).unwrap();
    let wedge = PolytopeSpec::new(vec![
        onegate::Cut::new(vec![1.0, 0.0], -6.0).unwrap(),
        onegate::Cut::new(vec![0.0, 1.0], -6.0).unwrap(),
    ])
    .unwrap();
    vec![unit_square(), tri, wedge]
}
