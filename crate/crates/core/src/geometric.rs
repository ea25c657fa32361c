//! Uniform random deployments in a square and their disk graphs.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// `n` sensor positions in `[0, side]^2`, reproducible from `(n, side, seed)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Deployment {
    side: f64,
    seed: u64,
    points: Vec<(f64, f64)>,
}

impl Deployment {
    /// Wraps explicit points, e.g. ones read back from a file.
    pub fn from_points(side: f64, seed: u64, points: Vec<(f64, f64)>) -> Result<Self> {
        check_side(side)?;
        for (index, &(x, y)) in points.iter().enumerate() {
            if !(0.0..=side).contains(&x) || !(0.0..=side).contains(&y) {
                return Err(Error::PointOutsideSquare { index, side });
            }
        }
        Ok(Deployment { side, seed, points })
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

fn check_side(side: f64) -> Result<()> {
    if side.is_finite() && side > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidSide(side))
    }
}

/// Maps a 64-bit word to `[0, 1)` using its top 53 bits.
fn unit_interval(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Samples `n` i.i.d. uniform points in `[0, side]^2`.
///
/// The generator is ChaCha8 seeded through `seed_from_u64(seed)`. Point `i`
/// consumes words `2i` (x) and `2i + 1` (y) of the stream, each scaled to
/// `[0, 1)` from its top 53 bits and multiplied by `side`.
pub fn sample_deployment(n: usize, side: f64, seed: u64) -> Result<Deployment> {
    check_side(side)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            let x = unit_interval(rng.next_u64()) * side;
            let y = unit_interval(rng.next_u64()) * side;
            (x, y)
        })
        .collect();
    Ok(Deployment { side, seed, points })
}

/// Edge `ij` iff `|p_i - p_j| <= radius`, compared on squared distances.
pub fn geometric_graph(dep: &Deployment, radius: f64) -> Result<Graph> {
    if radius.is_nan() || radius < 0.0 {
        return Err(Error::InvalidRadius(radius));
    }
    let r2 = radius * radius;
    let pts = dep.points();
    let mut edges = Vec::new();
    for (i, &(xi, yi)) in pts.iter().enumerate() {
        for (j, &(xj, yj)) in pts.iter().enumerate().skip(i + 1) {
            let dx = xi - xj;
            let dy = yi - yj;
            if dx * dx + dy * dy <= r2 {
                edges.push(Edge::new(i, j).expect("i < j"));
            }
        }
    }
    Graph::from_edges(pts.len(), edges)
}
