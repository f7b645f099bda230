use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{BoundingBox, Point};

pub type Rgb = [u8; 3];

pub const CLASS1: Rgb = [128, 128, 128];
pub const CLASS0: Rgb = [255, 255, 255];
pub const DISAGREE: Rgb = [255, 0, 0];

/// Per-pixel class bits of one network, or of two networks for a diff view.
///
/// Pixel `(col, row)` samples the center of its cell; row 0 is the top
/// (maximum-y) edge of the region.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMap {
    width: usize,
    height: usize,
    region: BoundingBox,
    first: Vec<bool>,
    second: Option<Vec<bool>>,
}

fn check_args(region: &BoundingBox, width: usize, height: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidImageSize(width, height));
    }
    if region.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: region.dim(),
        });
    }
    Ok(())
}

impl DecisionMap {
    pub fn pixel_center(region: &BoundingBox, width: usize, height: usize, col: usize, row: usize) -> [f64; 2] {
        let dx = (region.hi[0] - region.lo[0]) / width as f64;
        let dy = (region.hi[1] - region.lo[1]) / height as f64;
        [
            region.lo[0] + (col as f64 + 0.5) * dx,
            region.hi[1] - (row as f64 + 0.5) * dy,
        ]
    }

    fn sample<F>(region: &BoundingBox, width: usize, height: usize, eval: &F) -> Result<Vec<bool>>
    where
        F: Fn(&Point) -> Result<bool> + Sync,
    {
        (0..width * height)
            .into_par_iter()
            .map(|i| {
                let c = Self::pixel_center(region, width, height, i % width, i / width);
                eval(&Point::new(c.to_vec())?)
            })
            .collect()
    }

    pub fn single<F>(region: BoundingBox, width: usize, height: usize, eval: F) -> Result<Self>
    where
        F: Fn(&Point) -> Result<bool> + Sync,
    {
        check_args(&region, width, height)?;
        let first = Self::sample(&region, width, height, &eval)?;
        Ok(DecisionMap {
            width,
            height,
            region,
            first,
            second: None,
        })
    }

    pub fn diff<F, G>(region: BoundingBox, width: usize, height: usize, a: F, b: G) -> Result<Self>
    where
        F: Fn(&Point) -> Result<bool> + Sync,
        G: Fn(&Point) -> Result<bool> + Sync,
    {
        check_args(&region, width, height)?;
        let first = Self::sample(&region, width, height, &a)?;
        let second = Self::sample(&region, width, height, &b)?;
        Ok(DecisionMap {
            width,
            height,
            region,
            first,
            second: Some(second),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn region(&self) -> &BoundingBox {
        &self.region
    }

    pub fn bit(&self, col: usize, row: usize) -> bool {
        self.first[row * self.width + col]
    }

    pub fn disagreements(&self) -> usize {
        match &self.second {
            Some(s) => self.first.iter().zip(s).filter(|(a, b)| a != b).count(),
            None => 0,
        }
    }

    fn color(&self, i: usize) -> Rgb {
        let a = self.first[i];
        match &self.second {
            Some(s) if s[i] != a => DISAGREE,
            _ if a => CLASS1,
            _ => CLASS0,
        }
    }

    /// Binary PPM: `P6\n<w> <h>\n255\n` then RGB rows top to bottom.
    pub fn to_ppm(&self) -> Vec<u8> {
        let header = format!("P6\n{} {}\n255\n", self.width, self.height);
        let mut out = Vec::with_capacity(header.len() + 3 * self.first.len());
        out.extend_from_slice(header.as_bytes());
        for i in 0..self.first.len() {
            out.extend_from_slice(&self.color(i));
        }
        out
    }

    /// Opaque RGBA pixels, the layout canvas `ImageData` expects.
    pub fn to_rgba(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 * self.first.len());
        for i in 0..self.first.len() {
            out.extend_from_slice(&self.color(i));
            out.push(255);
        }
        out
    }
}

/// Renders one evaluator, or the diff of two, as PPM bytes.
pub fn render_decision_map<F, G>(
    region: BoundingBox,
    width: usize,
    height: usize,
    eval: F,
    against: Option<G>,
) -> Result<Vec<u8>>
where
    F: Fn(&Point) -> Result<bool> + Sync,
    G: Fn(&Point) -> Result<bool> + Sync,
{
    let map = match against {
        Some(g) => DecisionMap::diff(region, width, height, eval, g)?,
        None => DecisionMap::single(region, width, height, eval)?,
    };
    Ok(map.to_ppm())
}
