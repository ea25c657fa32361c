//! Sensing-radius sweeps over random geometric graphs.
//!
//! For each ratio `rho` on a grid the disk graph at radius `rho * side` is
//! built and its `K_r` and `K_u` recorded. Averaged sweeps repeat this over
//! deployments seeded `base_seed, base_seed + 1, ...` and keep exact means.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometric::{geometric_graph, sample_deployment, Deployment};
use crate::indices::index_pair;
use crate::ratio::RatioValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Rigidity,
    Redundancy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCurve {
    pub n: usize,
    pub side: f64,
    pub base_seed: u64,
    pub trials: usize,
    pub ratios: Vec<f64>,
    /// Exact per-ratio means over the trials.
    pub k_r_mean: Vec<BigRational>,
    pub k_u_mean: Vec<BigRational>,
    /// Population standard deviations, computed in floating point.
    pub k_r_std: Vec<f64>,
    pub k_u_std: Vec<f64>,
}

impl SweepCurve {
    pub fn len(&self) -> usize {
        self.ratios.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ratios.is_empty()
    }

    pub fn means(&self, which: Which) -> &[BigRational] {
        match which {
            Which::Rigidity => &self.k_r_mean,
            Which::Redundancy => &self.k_u_mean,
        }
    }
}

/// `0, step, 2 step, ...` up to 1: `floor(1 / step) + 1` points.
pub fn unit_grid(step: f64) -> Result<Vec<f64>> {
    if !(step.is_finite() && step > 0.0 && step <= 1.0) {
        return Err(Error::BadGrid(format!(
            "step must lie in (0, 1], got {step}"
        )));
    }
    // The epsilon absorbs representation error, e.g. 1 / 0.1 = 9.999...
    let count = (1.0 / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| (i as f64 * step).min(1.0)).collect())
}

fn check_grid(ratios: &[f64]) -> Result<()> {
    if ratios.is_empty() {
        return Err(Error::BadGrid("empty grid".into()));
    }
    if let Some(r) = ratios.iter().find(|r| !(0.0..=1.0).contains(*r)) {
        return Err(Error::BadGrid(format!("ratio {r} outside [0, 1]")));
    }
    if ratios.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadGrid("ratios must be strictly increasing".into()));
    }
    Ok(())
}

/// Per-ratio `(K_r, K_u)` for one deployment.
pub fn trial_indices(dep: &Deployment, ratios: &[f64]) -> Result<Vec<(RatioValue, RatioValue)>> {
    check_grid(ratios)?;
    ratios
        .iter()
        .map(|&rho| geometric_graph(dep, rho * dep.side()).map(|g| index_pair(&g)))
        .collect()
}

/// Single-deployment curve.
pub fn sweep_single(dep: &Deployment, ratios: &[f64]) -> Result<SweepCurve> {
    let values = trial_indices(dep, ratios)?;
    Ok(summarize(
        dep.len(),
        dep.side(),
        dep.seed(),
        ratios,
        &[values],
    ))
}

/// Means over `trials` deployments; trial `t` uses seed `base_seed + t`.
pub fn sweep_average(
    n: usize,
    side: f64,
    trials: usize,
    ratios: &[f64],
    base_seed: u64,
) -> Result<SweepCurve> {
    if trials == 0 {
        return Err(Error::BadGrid("at least one trial is required".into()));
    }
    check_grid(ratios)?;
    let runs = (0..trials)
        .map(|t| {
            let dep = sample_deployment(n, side, trial_seed(base_seed, t))?;
            trial_indices(&dep, ratios)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(n, side, base_seed, ratios, &runs))
}

pub fn trial_seed(base_seed: u64, trial: usize) -> u64 {
    base_seed.wrapping_add(trial as u64)
}

fn summarize(
    n: usize,
    side: f64,
    base_seed: u64,
    ratios: &[f64],
    runs: &[Vec<(RatioValue, RatioValue)>],
) -> SweepCurve {
    let trials = runs.len();
    let mut curve = SweepCurve {
        n,
        side,
        base_seed,
        trials,
        ratios: ratios.to_vec(),
        k_r_mean: Vec::with_capacity(ratios.len()),
        k_u_mean: Vec::with_capacity(ratios.len()),
        k_r_std: Vec::with_capacity(ratios.len()),
        k_u_std: Vec::with_capacity(ratios.len()),
    };
    for i in 0..ratios.len() {
        let (mean, std) = mean_and_std(runs.iter().map(|r| r[i].0));
        curve.k_r_mean.push(mean);
        curve.k_r_std.push(std);
        let (mean, std) = mean_and_std(runs.iter().map(|r| r[i].1));
        curve.k_u_mean.push(mean);
        curve.k_u_std.push(std);
    }
    curve
}

fn mean_and_std(values: impl Iterator<Item = RatioValue> + Clone) -> (BigRational, f64) {
    let count = values.clone().count();
    let sum = values
        .clone()
        .fold(BigRational::zero(), |acc, v| acc + v.to_big());
    let mean = sum / BigInt::from(count);
    let m = to_f64(&mean);
    let var = values.map(|v| (v.to_f64() - m).powi(2)).sum::<f64>() / count as f64;
    (mean, var.sqrt())
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Smallest grid ratio whose exact mean index equals 1.
pub fn threshold_ratio(curve: &SweepCurve, which: Which) -> Option<f64> {
    let one = BigRational::one();
    curve
        .means(which)
        .iter()
        .position(|v| *v == one)
        .map(|i| curve.ratios[i])
}

/// `(redundancy threshold - rigidity threshold) / rigidity threshold`.
pub fn relative_increase(curve: &SweepCurve) -> Option<f64> {
    relative_change(
        threshold_ratio(curve, Which::Rigidity)?,
        threshold_ratio(curve, Which::Redundancy)?,
    )
}

pub fn relative_change(rigidity: f64, redundancy: f64) -> Option<f64> {
    (rigidity > 0.0).then(|| (redundancy - rigidity) / rigidity)
}
