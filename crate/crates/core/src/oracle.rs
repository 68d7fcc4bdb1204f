//! Monte-Carlo rejection sampler for weighted volumes and first moments.
//!
//! Samples are drawn uniformly from the exact bounding box of the polytope
//! with `Xoshiro256PlusPlus` seeded through SplitMix64
//! (`SeedableRng::seed_from_u64`). The work is split into [`SHARDS`] shards;
//! shard `s` uses seed `seed + s` and the shard sums are combined in shard
//! order, so results do not depend on thread scheduling.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{Scalar, Vector};
use crate::poly::Polynomial;
use crate::polytope::Polytope;

pub const SHARDS: u64 = 8;
pub const MIN_SAMPLES: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// Distance to `exact` in units of the standard error.
    pub fn z_score(&self, exact: f64) -> f64 {
        let diff = (self.value - exact).abs();
        if self.std_error == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / self.std_error
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct McMoments {
    pub volume: McEstimate,
    pub first_moments: Vec<McEstimate>,
    pub accepted: u64,
}

impl McMoments {
    pub fn barycenter(&self) -> Vec<f64> {
        self.first_moments.iter().map(|m| m.value / self.volume.value).collect()
    }

    pub fn acceptance_rate(&self) -> f64 {
        self.accepted as f64 / self.volume.samples as f64
    }
}

#[derive(Clone, Debug, Default)]
struct ShardSums {
    accepted: u64,
    // index 0 is the weight itself, 1.. the weight times each coordinate
    sum: Vec<f64>,
    sum_sq: Vec<f64>,
}

struct Sampler {
    lo: Vec<f64>,
    width: Vec<f64>,
    normals: Vec<Vec<f64>>,
    offsets: Vec<f64>,
    weight: Polynomial<f64>,
}

impl Sampler {
    fn run_shard(&self, seed: u64, n: u64) -> ShardSums {
        let r = self.lo.len();
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        let mut sums = ShardSums { accepted: 0, sum: vec![0.0; r + 1], sum_sq: vec![0.0; r + 1] };
        let mut y = vec![0.0; r];
        for _ in 0..n {
            for ((yi, lo), width) in y.iter_mut().zip(&self.lo).zip(&self.width) {
                *yi = lo + width * rng.gen::<f64>();
            }
            let inside = self
                .normals
                .iter()
                .zip(&self.offsets)
                .all(|(a, c)| a.iter().zip(&y).map(|(ai, yi)| ai * yi).sum::<f64>() <= *c);
            if !inside {
                continue;
            }
            sums.accepted += 1;
            let w = self.weight.eval(&y);
            sums.sum[0] += w;
            sums.sum_sq[0] += w * w;
            for (i, yi) in y.iter().enumerate() {
                let f = w * yi;
                sums.sum[i + 1] += f;
                sums.sum_sq[i + 1] += f * f;
            }
        }
        sums
    }
}

/// Estimate `∫_P w` and `∫_P w·y_i` by rejection sampling.
pub fn mc_moments<T: Scalar>(p: &Polytope<T>, weight: &Polynomial<T>, samples: u64, seed: u64) -> Result<McMoments> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidInput(format!("at least {MIN_SAMPLES} samples required, got {samples}")));
    }
    let r = p.dim();
    if weight.nvars() != r {
        return Err(Error::InvalidInput("weight and polytope dimensions differ".into()));
    }
    let verts = p.vertices();
    let mut lo = Vec::with_capacity(r);
    let mut hi = Vec::with_capacity(r);
    for i in 0..r {
        let mut min = verts[0][i].clone();
        let mut max = verts[0][i].clone();
        for v in verts {
            if v[i] < min {
                min = v[i].clone();
            }
            if v[i] > max {
                max = v[i].clone();
            }
        }
        lo.push(min);
        hi.push(max);
    }
    let box_volume = lo.iter().zip(&hi).fold(T::one(), |acc, (a, b)| acc * (b.clone() - a.clone()));
    let box_volume = to_f64(&box_volume);
    if box_volume.is_nan() || box_volume <= 0.0 {
        return Err(Error::Oracle("bounding box has zero volume".into()));
    }
    let sampler = Sampler {
        width: lo.iter().zip(&hi).map(|(a, b)| to_f64(&(b.clone() - a.clone()))).collect(),
        lo: lo.iter().map(to_f64).collect(),
        normals: p.halfspaces().iter().map(|h| h.normal.iter().map(to_f64).collect()).collect(),
        offsets: p.halfspaces().iter().map(|h| to_f64(&h.offset)).collect(),
        weight: weight.map_coefficients(|c| to_f64(c)),
    };

    let shards: Vec<ShardSums> = (0..SHARDS)
        .into_par_iter()
        .map(|s| {
            let n = samples / SHARDS + u64::from(s < samples % SHARDS);
            sampler.run_shard(seed.wrapping_add(s), n)
        })
        .collect();

    let mut total = ShardSums { accepted: 0, sum: vec![0.0; r + 1], sum_sq: vec![0.0; r + 1] };
    for sh in &shards {
        total.accepted += sh.accepted;
        for k in 0..=r {
            total.sum[k] += sh.sum[k];
            total.sum_sq[k] += sh.sum_sq[k];
        }
    }
    if total.accepted == 0 {
        return Err(Error::Oracle(format!("no sample out of {samples} landed inside the polytope")));
    }

    let n = samples as f64;
    let estimate = |k: usize| {
        let mean = total.sum[k] / n;
        let var = (total.sum_sq[k] / n - mean * mean).max(0.0) * n / (n - 1.0);
        McEstimate { value: box_volume * mean, std_error: box_volume * (var / n).sqrt(), samples, seed }
    };
    Ok(McMoments { volume: estimate(0), first_moments: (1..=r).map(estimate).collect(), accepted: total.accepted })
}

fn to_f64<T: Scalar>(x: &T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Convenience wrapper returning the estimated point as a vector.
pub fn mc_barycenter<T: Scalar>(
    p: &Polytope<T>,
    weight: &Polynomial<T>,
    samples: u64,
    seed: u64,
) -> Result<Vector<f64>> {
    Ok(Vector(mc_moments(p, weight, samples, seed)?.barycenter()))
}
