//! Grover amplitude amplification over a phase oracle.
//!
//! With `sin θ = √(M/N)` each iteration (phase oracle, then inversion
//! about the mean) rotates the state by `2θ` toward the marked subspace,
//! so after `k` iterations the success probability is `sin²((2k+1)θ)`.

use std::collections::BTreeMap;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};
use crate::oracle::PhaseOracle;
use crate::scalar::{compensated_sum, Scalar};
use crate::statevec::{StateVector, DEFAULT_QUBIT_CAP};

/// Name of the sampling generator, recorded in every report.
pub const RNG_NAME: &str = "chacha8";

/// Equal superposition `1/√(2^n)` on every basis state.
pub fn uniform_state<T: Scalar>(n: usize) -> Result<StateVector<T>> {
    uniform_state_with_cap(n, DEFAULT_QUBIT_CAP)
}

pub fn uniform_state_with_cap<T: Scalar>(n: usize, cap: usize) -> Result<StateVector<T>> {
    if n == 0 {
        return Err(Error::domain("uniform state needs at least one qubit"));
    }
    if n > cap {
        return Err(Error::ResourceLimit {
            what: "uniform state",
            requested: n,
            cap,
        });
    }
    let amp = T::from_count(1 << n).sqrt().recip();
    StateVector::from_amplitudes(n, vec![Complex::new(amp, T::zero()); 1 << n])
}

/// Inversion about the mean: `a → 2m − a`.
pub fn diffusion<T: Scalar>(psi: &StateVector<T>) -> StateVector<T> {
    let mut out = psi.clone();
    diffuse_in_place(&mut out);
    out
}

fn diffuse_in_place<T: Scalar>(psi: &mut StateVector<T>) {
    let len = T::from_count(psi.len());
    let amps = psi.amplitudes_mut();
    let sum = Complex::new(
        compensated_sum(amps.iter().map(|a| a.re)),
        compensated_sum(amps.iter().map(|a| a.im)),
    );
    let twice_mean = sum * ((T::one() + T::one()) / len);
    for a in amps.iter_mut() {
        *a = twice_mean - *a;
    }
}

fn rotation_angle(space: usize, marked: usize) -> Result<f64> {
    if marked == 0 {
        return Err(Error::NoSolution);
    }
    if !space.is_power_of_two() {
        return Err(Error::domain(format!(
            "search space {space} is not a power of two"
        )));
    }
    if marked > space {
        return Err(Error::domain(format!(
            "{marked} marked states exceed search space {space}"
        )));
    }
    Ok((marked as f64 / space as f64).sqrt().asin())
}

/// `round(π/(4θ) − 1/2)`, clamped at zero.
pub fn optimal_iterations(space: usize, marked: usize) -> Result<usize> {
    let theta = rotation_angle(space, marked)?;
    let k = (std::f64::consts::FRAC_PI_4 / theta - 0.5).round();
    Ok(k.max(0.0) as usize)
}

/// `sin²((2k+1)θ)`.
pub fn predicted_success(space: usize, marked: usize, iterations: usize) -> Result<f64> {
    let theta = rotation_angle(space, marked)?;
    Ok(((2 * iterations + 1) as f64 * theta).sin().powi(2))
}

/// How many Grover iterations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Iterations {
    /// [`optimal_iterations`] for the function's marked count.
    #[default]
    Auto,
    Fixed(usize),
}

impl std::str::FromStr for Iterations {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Iterations::Auto);
        }
        s.parse()
            .map(Iterations::Fixed)
            .map_err(|_| Error::domain(format!("iterations must be AUTO or a count, got {s:?}")))
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub iterations: Iterations,
    /// Drawn from OS entropy (and recorded) when absent.
    pub seed: Option<u64>,
    pub shots: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroverReport<T: Scalar> {
    pub n: usize,
    #[serde(rename = "M")]
    pub marked: usize,
    pub iterations: usize,
    pub predicted_success: f64,
    pub simulated_success: f64,
    pub seed: u64,
    pub rng: &'static str,
    /// Basis index → count.
    pub samples: BTreeMap<usize, usize>,
    #[serde(skip)]
    pub final_state: StateVector<T>,
}

/// Runs Grover search for `f` from the uniform state.
pub fn run<T: Scalar>(f: &BoolFn, opts: &RunOptions) -> Result<GroverReport<T>> {
    let marked = f.count_ones();
    if marked == 0 {
        return Err(Error::NoSolution);
    }
    let space = 1usize << f.n();
    let iterations = match opts.iterations {
        Iterations::Auto => optimal_iterations(space, marked)?,
        Iterations::Fixed(k) => k,
    };

    let oracle = PhaseOracle::new(f.clone());
    let mut psi = uniform_state::<T>(f.n())?;
    for _ in 0..iterations {
        oracle.apply_in_place(&mut psi)?;
        diffuse_in_place(&mut psi);
    }

    let probs = psi.probabilities()?;
    let simulated_success = compensated_sum(f.table().iter_ones().map(|x| probs[x].to_f64_lossy()));

    let seed = opts.seed.unwrap_or_else(|| rand::rng().random());
    let samples = sample_counts(&probs, opts.shots, seed);

    Ok(GroverReport {
        n: f.n(),
        marked,
        iterations,
        predicted_success: predicted_success(space, marked, iterations)?,
        simulated_success,
        seed,
        rng: RNG_NAME,
        samples,
        final_state: psi,
    })
}

/// Inverse-CDF sampling of `shots` outcomes from `probs`, seeded.
pub fn sample_counts<T: Scalar>(probs: &[T], shots: usize, seed: u64) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    if shots == 0 || probs.is_empty() {
        return counts;
    }
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0f64;
    for p in probs {
        acc += p.to_f64_lossy();
        cdf.push(acc);
    }
    let total = acc;
    // never land on a trailing zero-probability index
    let last = probs
        .iter()
        .rposition(|p| *p > T::zero())
        .unwrap_or(probs.len() - 1);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..shots {
        let u = rng.random::<f64>() * total;
        let k = cdf.partition_point(|&c| c <= u).min(last);
        *counts.entry(k).or_insert(0) += 1;
    }
    counts
}
