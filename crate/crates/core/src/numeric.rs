//! Rigidity matrices of concrete frameworks and their exact rank.
//!
//! This is the linear-algebra route to the rigidity matroid: at a generic
//! configuration the rows of `R(G, p)` are independent exactly when the
//! corresponding edges are. It is kept as an independent check on the
//! combinatorial oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::full_rank;

/// Generic coordinates are drawn from `[0, 2^31)`.
pub const GENERIC_COORD_BITS: u32 = 31;

/// One exact planar point per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<(BigRational, BigRational)>,
}

impl Configuration {
    pub fn new(points: Vec<(BigRational, BigRational)>) -> Self {
        Configuration { points }
    }

    pub fn from_integers(points: &[(i64, i64)]) -> Self {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        Configuration {
            points: points.iter().map(|&(x, y)| (q(x), q(y))).collect(),
        }
    }

    /// `n` points with independent uniform integer coordinates in
    /// `[0, 2^31)`, drawn as `(x, y)` per vertex in vertex order.
    pub fn random_integer(n: usize, rng: &mut impl RngCore) -> Self {
        let mut draw = || {
            let raw = rng.next_u32() >> (32 - GENERIC_COORD_BITS);
            BigRational::from_integer(BigInt::from(raw))
        };
        Configuration {
            points: (0..n).map(|_| (draw(), draw())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(BigRational, BigRational)] {
        &self.points
    }

    /// Shifts every point by `(dx, dy)`.
    pub fn translated(&self, dx: &BigRational, dy: &BigRational) -> Self {
        Configuration {
            points: self.points.iter().map(|(x, y)| (x + dx, y + dy)).collect(),
        }
    }
}

/// Dense `|E| x 2|V|` matrix; vertex `i` owns columns `2i` (x) and `2i + 1` (y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityMatrix {
    cols: usize,
    rows: Vec<Vec<BigRational>>,
}

impl RigidityMatrix {
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RigidityMatrix { cols, rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        matrix_rank(self)
    }
}

/// Row for edge `ij` holds `p(i) - p(j)` under `i` and `p(j) - p(i)` under `j`.
pub fn rigidity_matrix(g: &Graph, p: &Configuration) -> Result<RigidityMatrix> {
    let n = g.vertex_count();
    if p.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: p.len(),
        });
    }
    let cols = 2 * n;
    let rows = g
        .edges()
        .iter()
        .map(|e| {
            let (i, j) = e.endpoints();
            let (xi, yi) = &p.points[i];
            let (xj, yj) = &p.points[j];
            let mut row = vec![BigRational::zero(); cols];
            row[2 * i] = xi - xj;
            row[2 * i + 1] = yi - yj;
            row[2 * j] = xj - xi;
            row[2 * j + 1] = yj - yi;
            row
        })
        .collect();
    Ok(RigidityMatrix { cols, rows })
}

/// Exact rank over the rationals.
///
/// Each row is cleared of denominators, then reduced with fraction-free
/// (Bareiss) elimination so every intermediate entry stays an integer minor.
pub fn matrix_rank(m: &RigidityMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = m.rows.iter().map(|r| clear_denominators(r)).collect();
    integer_rank(rows, m.cols)
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in below.iter_mut() {
            if row[col].is_zero() {
                for x in row[col + 1..].iter_mut() {
                    *x = &*x * pivot / &prev_pivot;
                }
                continue;
            }
            let factor = row[col].clone();
            for j in col + 1..cols {
                row[j] = (pivot * &row[j] - &factor * &pivot_row[j]) / &prev_pivot;
            }
            row[col] = BigInt::zero();
        }
        prev_pivot = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank of `R(G, p)` at two independent random integer configurations drawn
/// from a ChaCha8 stream seeded with `seed`; the larger rank is returned.
///
/// A random configuration can only fall short of the generic rank, never
/// exceed it.
pub fn generic_rank(g: &Graph, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..2)
        .map(|_| {
            let p = Configuration::random_integer(g.vertex_count(), &mut rng);
            let m = rigidity_matrix(g, &p).expect("configuration sized to the graph");
            matrix_rank(&m)
        })
        .max()
        .unwrap_or(0)
}

/// `rank R(G, p) == 2n - 3`.
pub fn is_infinitesimally_rigid(g: &Graph, p: &Configuration) -> Result<bool> {
    let m = rigidity_matrix(g, p)?;
    Ok(matrix_rank(&m) == full_rank(g.vertex_count()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn right_triangle() -> Configuration {
        Configuration::from_integers(&[(0, 0), (1, 0), (0, 1)])
    }

    fn collinear() -> Configuration {
        Configuration::from_integers(&[(0, 0), (1, 0), (2, 0)])
    }

    #[test]
    fn triangle_matrix_layout() {
        let m = rigidity_matrix(&Graph::complete(3), &right_triangle()).unwrap();
        assert_eq!((m.row_count(), m.col_count()), (3, 6));
        let expect: Vec<BigRational> = [-1, 0, 1, 0, 0, 0].into_iter().map(q).collect();
        assert_eq!(m.row(0), expect.as_slice());
    }

    #[test]
    fn coincident_points_give_zero_row() {
        let g = Graph::complete(2);
        let p = Configuration::from_integers(&[(0, 0), (0, 0)]);
        let m = rigidity_matrix(&g, &p).unwrap();
        assert!(m.row(0).iter().all(Zero::is_zero));
        assert_eq!(matrix_rank(&m), 0);
    }

    #[test]
    fn empty_edge_set() {
        let g = Graph::empty(4);
        let p = Configuration::from_integers(&[(0, 0); 4]);
        let m = rigidity_matrix(&g, &p).unwrap();
        assert_eq!((m.row_count(), m.col_count()), (0, 8));
        assert_eq!(matrix_rank(&m), 0);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            rigidity_matrix(
                &Graph::complete(3),
                &Configuration::from_integers(&[(0, 0)])
            ),
            Err(Error::SizeMismatch {
                expected: 3,
                got: 1
            })
        );
    }

    #[test]
    fn triangle_ranks() {
        let k3 = Graph::complete(3);
        assert_eq!(
            matrix_rank(&rigidity_matrix(&k3, &right_triangle()).unwrap()),
            3
        );
        assert_eq!(matrix_rank(&rigidity_matrix(&k3, &collinear()).unwrap()), 2);
        assert!(is_infinitesimally_rigid(&k3, &right_triangle()).unwrap());
        assert!(!is_infinitesimally_rigid(&k3, &collinear()).unwrap());
        let p = Configuration::from_integers(&[(0, 0), (3, 4)]);
        assert!(is_infinitesimally_rigid(&Graph::complete(2), &p).unwrap());
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let p = Configuration::new(vec![(q(0), q(0)), (half.clone(), q(0)), (q(0), third)]);
        assert_eq!(
            matrix_rank(&rigidity_matrix(&Graph::complete(3), &p).unwrap()),
            3
        );
    }

    #[test]
    fn rank_with_skipped_columns() {
        // Column 0 is zero, and the remaining block has rank 2.
        let rows = vec![
            vec![q(0), q(2), q(4), q(1)],
            vec![q(0), q(1), q(2), q(7)],
            vec![q(0), q(3), q(6), q(8)],
        ];
        assert_eq!(matrix_rank(&RigidityMatrix::from_rows(4, rows)), 2);
    }

    #[test]
    fn generic_ranks() {
        for seed in 0..3 {
            assert_eq!(generic_rank(&Graph::complete(4), seed), 5);
            let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
            assert_eq!(generic_rank(&path, seed), 2);
            assert_eq!(generic_rank(&Graph::empty(5), seed), 0);
        }
    }
}
