//! Timing the iterative factorization on large random inputs.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::perm::{Letter, Permutation};
use crate::rix::rix_factorize_iterative;

/// A uniformly random permutation of `{1, …, n}`, reproducible from `seed`.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Letter> = (1..=n as Letter).collect();
    v.shuffle(&mut rng);
    Permutation::from_vec_unchecked(v)
}

/// Wall time of one factorization of `p`. Locating each letter is part of the
/// algorithm and is timed; generating `p` is not.
pub fn time_factorization(p: &Permutation) -> (Duration, usize) {
    let start = Instant::now();
    let f = rix_factorize_iterative(p);
    let elapsed = start.elapsed();
    (elapsed, std::hint::black_box(f).rix())
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchPoint {
    pub n: usize,
    pub trials: usize,
    /// Seconds for each trial.
    pub secs: Vec<f64>,
    /// Mean seconds per factorization.
    pub mean_secs: f64,
    /// `rix` of each trial's input, which depends only on the seed.
    pub rix: Vec<usize>,
}

/// Mean time over `trials` inputs. Trial `i` uses seed `seed + i`.
///
/// One untimed run comes first, so the allocator has already mapped memory
/// of this size and first-touch page faults do not land on trial 0.
pub fn bench_size(n: usize, trials: usize, seed: u64) -> BenchPoint {
    let trials = trials.max(1);
    let _ = time_factorization(&random_permutation(n, seed));
    let mut secs = Vec::with_capacity(trials);
    let mut rix = Vec::with_capacity(trials);
    for i in 0..trials {
        let p = random_permutation(n, seed.wrapping_add(i as u64));
        let (t, r) = time_factorization(&p);
        secs.push(t.as_secs_f64());
        rix.push(r);
    }
    BenchPoint {
        n,
        trials,
        mean_secs: secs.iter().sum::<f64>() / trials as f64,
        secs,
        rix,
    }
}

/// `T(2n)/T(n)` for consecutive points.
pub fn doubling_ratios(points: &[BenchPoint]) -> Vec<f64> {
    points
        .windows(2)
        .map(|w| w[1].mean_secs / w[0].mean_secs)
        .collect()
}
