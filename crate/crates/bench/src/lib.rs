//! Fixed inputs for the criterion benches.

use plucker_core::sampling::{random_main_plane, seeded};
use plucker_core::{plucker_of, PluckerVector};

/// `count` main-stratum Plücker vectors from a fixed seed.
pub fn main_vectors(n: usize, count: usize) -> Vec<PluckerVector> {
    let mut rng = seeded(n as u64);
    (0..count).map(|_| plucker_of(&random_main_plane(n, &mut rng))).collect()
}
