//! Seeded random inputs for property checks and the acceptance suite.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::configurations::Configuration;
use crate::exact::{rat, ratio, Rational, RationalMatrix};
use crate::grassmann::Subspace;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-range, range]`.
pub fn int(rng: &mut SampleRng, range: i64) -> i64 {
    rng.gen_range(-range..=range)
}

/// `p / q` with `|p| <= range`, `1 <= q <= range`.
pub fn rational(rng: &mut SampleRng, range: i64) -> Rational {
    ratio(int(rng, range), rng.gen_range(1..=range))
}

pub fn nonzero_rational(rng: &mut SampleRng, range: i64) -> Rational {
    loop {
        let r = rational(rng, range);
        if r != rat(0) {
            return r;
        }
    }
}

pub fn matrix(rng: &mut SampleRng, rows: usize, cols: usize, range: i64) -> RationalMatrix {
    let data = (0..rows * cols).map(|_| rat(int(rng, range))).collect();
    RationalMatrix::new(rows, cols, data).expect("shape matches")
}

pub fn invertible_matrix(rng: &mut SampleRng, n: usize) -> RationalMatrix {
    loop {
        let m = matrix(rng, n, n, 5);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn subspace(rng: &mut SampleRng, k: usize, n: usize) -> Subspace {
    loop {
        if let Ok(s) = Subspace::new(matrix(rng, k, n, 4)) {
            return s;
        }
    }
}

/// A subspace whose matrix has many zero or repeated entries, so that its
/// matroid is usually not uniform.
pub fn sparse_subspace(rng: &mut SampleRng, k: usize, n: usize) -> Subspace {
    loop {
        let data = (0..k * n)
            .map(|_| if rng.gen_bool(0.5) { rat(0) } else { rat(int(rng, 1)) })
            .collect();
        if let Ok(s) = Subspace::new(RationalMatrix::new(k, n, data).expect("shape matches")) {
            return s;
        }
    }
}

pub fn generic_subspace(rng: &mut SampleRng, k: usize, n: usize) -> Subspace {
    loop {
        let s = subspace(rng, k, n);
        if s.is_generic() {
            return s;
        }
    }
}

pub fn generic_configuration(rng: &mut SampleRng, k: usize, n: usize) -> Configuration {
    loop {
        if let Ok(c) = Configuration::new(matrix(rng, k, n, 6)) {
            if c.is_general_position() {
                return c;
            }
        }
    }
}

pub fn rescale_columns(rng: &mut SampleRng, c: &Configuration) -> Configuration {
    let factors: Vec<Rational> = (0..c.n()).map(|_| nonzero_rational(rng, 5)).collect();
    c.scale_points(&factors).expect("nonzero factors")
}

/// `n` distinct points `(1 : t : t^2)` of the conic `xz = y^2`.
pub fn points_on_conic(rng: &mut SampleRng, n: usize) -> Configuration {
    let mut ts = BTreeSet::new();
    while ts.len() < n {
        ts.insert(rational(rng, 9));
    }
    let mut ts: Vec<Rational> = ts.into_iter().collect();
    // shuffle so the order carries no structure
    for i in (1..ts.len()).rev() {
        let j = rng.gen_range(0..=i);
        ts.swap(i, j);
    }
    let pts: Vec<Vec<Rational>> = ts.iter().map(|t| vec![rat(1), t.clone(), t * t]).collect();
    Configuration::from_points(&pts).expect("nonzero points")
}
