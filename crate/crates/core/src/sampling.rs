//! Seeded random generators for planes, torus elements and degenerating families.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degeneration::LaurentPlane;
use crate::grassmann::{Plane, TorusElement};
use crate::laurent::LaurentScalar;
use crate::scalar::{GaussianRational, Rational};
use crate::strata::{witness_plane_with, ParallelStructure};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(a + b·i) / d` style scalar with numerators in `[-bound, bound]` and denominators in `1..=4`.
pub fn random_scalar<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    let re = Rational::new(BigInt::from(rng.random_range(-bound..=bound)), BigInt::from(rng.random_range(1..=4i64)));
    let im = Rational::new(BigInt::from(rng.random_range(-bound..=bound)), BigInt::from(rng.random_range(1..=4i64)));
    GaussianRational::new(re, im)
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    loop {
        let x = random_scalar(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Any rank-2 plane; zero rows and parallel rows may occur.
pub fn random_plane<R: Rng>(n: usize, rng: &mut R) -> Plane {
    loop {
        let rows = (0..n)
            .map(|_| {
                if rng.random_bool(0.1) {
                    [GaussianRational::zero(), GaussianRational::zero()]
                } else {
                    [random_scalar(rng, 6), random_scalar(rng, 6)]
                }
            })
            .collect();
        if let Ok(plane) = Plane::new(rows) {
            return plane;
        }
    }
}

/// A plane with every Plücker coordinate nonzero.
pub fn random_main_plane<R: Rng>(n: usize, rng: &mut R) -> Plane {
    witness_plane_with(&ParallelStructure::main(n), rng)
}

pub fn random_torus<R: Rng>(n: usize, rng: &mut R) -> TorusElement {
    TorusElement::new((0..n).map(|_| random_nonzero_scalar(rng, 5)).collect()).expect("nonzero factors")
}

/// `base + t·R` for a random matrix `R`.
pub fn perturbed_family<R: Rng>(base: &Plane, rng: &mut R) -> LaurentPlane {
    let rows = base
        .rows()
        .iter()
        .map(|row| {
            row.clone().map(|x| {
                let shift = LaurentScalar::monomial(random_scalar(rng, 4), 1);
                &LaurentScalar::constant(x) + &shift
            })
        })
        .collect();
    LaurentPlane::new(rows).expect("the constant term has rank 2")
}
