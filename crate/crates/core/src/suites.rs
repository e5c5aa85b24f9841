//! Seeded verification suites shared by the command line and the test targets.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::crossratio::{cross_ratio_from_z, evaluate_cross_ratio, identity_suite, z_coordinates, CrossRatioValue, Identity, Tuple4};
use crate::error::{Error, Result};
use crate::gm_config::{config_of_plane, normalize_config, plane_of_config};
use crate::grassmann::{check_plucker_relations, plucker_of, reconstruct_torus, torus_act, Plane, TorusElement};
use crate::momentmap::{admissible_polytope, in_relative_interior, moment_map, theorem6_form};
use crate::param_space::same_orbit;
use crate::sampling::{random_main_plane, random_nonzero_scalar, random_plane, random_torus, seeded};
use crate::scalar::{GaussianRational, Rational};
use crate::strata::{enumerate_parallel_structures, signature_of, witness_plane, ParallelStructure};

/// Pass count of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub check: String,
    pub passed: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<CheckCount>,
}

impl SuiteReport {
    fn new(suite: &str, n: usize) -> Self {
        Self { suite: suite.into(), n, checks: Vec::new() }
    }

    fn record(&mut self, check: &str, ok: bool) {
        match self.checks.iter_mut().find(|c| c.check == check) {
            Some(c) => {
                c.total += 1;
                c.passed += usize::from(ok);
            }
            None => self.checks.push(CheckCount { check: check.into(), passed: usize::from(ok), total: 1 }),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed == c.total)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for c in other.checks {
            match self.checks.iter_mut().find(|x| x.check == c.check) {
                Some(x) => {
                    x.passed += c.passed;
                    x.total += c.total;
                }
                None => self.checks.push(c),
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} n={}", self.suite, self.n)?;
        for c in &self.checks {
            let tag = if c.passed == c.total { "ok" } else { "FAILED" };
            writeln!(f, "  {:<24} {}/{} {tag}", c.check, c.passed, c.total)?;
        }
        Ok(())
    }
}

/// Three-term relations on random planes, zero and parallel rows included.
pub fn plucker_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut report = SuiteReport::new("plucker", n);
    for _ in 0..samples {
        let pv = plucker_of(&random_plane(n, &mut rng));
        report.record("three-term relations", check_plucker_relations(&pv));
    }
    report
}

/// Cross-ratio identities and the z-coordinate formulas on main-stratum planes.
pub fn identities_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut report = SuiteReport::new("identities", n);
    for _ in 0..samples {
        let pv = plucker_of(&random_main_plane(n, &mut rng));
        match identity_suite(&pv) {
            Ok(r) => {
                for identity in Identity::ALL {
                    let ok = r.outcome(identity).is_some_and(|o| o.failures.is_empty());
                    report.record(&identity.to_string(), ok);
                }
            }
            Err(_) => report.record("main stratum", false),
        }
        report.record("z formulas", z_formulas_hold(&pv));
    }
    report
}

fn z_formulas_hold(pv: &crate::grassmann::PluckerVector) -> bool {
    let Ok(z) = z_coordinates(pv) else { return false };
    Tuple4::all_sorted(pv.n()).iter().all(|t| {
        cross_ratio_from_z(t, &z).is_ok_and(|p| evaluate_cross_ratio(pv, t) == CrossRatioValue::Defined(p))
    })
}

/// Two-class parallel structures without zero rows.
pub fn two_class_structures(n: usize) -> Result<Vec<ParallelStructure>> {
    Ok(enumerate_parallel_structures(n)?
        .into_iter()
        .filter(|ps| ps.zero_rows().is_empty() && ps.classes().len() == 2)
        .collect())
}

/// Every two-class polytope is the product of simplices on its wall.
pub fn theorem6_suite(n: usize, witnesses: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("theorem6", n);
    for ps in two_class_structures(n)? {
        let poly = admissible_polytope(&ps.signature())?;
        let form = theorem6_form(&ps).ok_or(Error::Inadmissible)?;
        let inside = &form.index_set;
        let expected: BTreeSet<_> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| inside.contains(&i) != inside.contains(&j))
            .collect();
        report.record("vertex set", poly.vertices == expected);
        report.record("dimension n-2", poly.dim == n - 2);
        report.record("wall on vertices", poly.vertices.iter().all(|&v| form.evaluate_vertex(v) == 1));
        for seed in 0..witnesses as u64 {
            let mu = moment_map(&plucker_of(&witness_plane(&ps, seed)));
            report.record("wall on witnesses", form.evaluate(&mu) == Rational::from_integer(1.into()));
        }
    }
    Ok(report)
}

/// Replaces row `k` by `row_k + c·row_j`, which moves the `k`-th point of the configuration.
fn shear<R: Rng>(plane: &Plane, rng: &mut R) -> Plane {
    let n = plane.n();
    let k = rng.random_range(1..=n);
    let j = if k == n { 1 } else { k + 1 };
    let c = random_nonzero_scalar(rng, 4);
    let mut rows = plane.rows().to_vec();
    let [a, b] = plane.row(j);
    rows[k - 1] = [&rows[k - 1][0] + &(&c * a), &rows[k - 1][1] + &(&c * b)];
    Plane::new(rows).unwrap_or_else(|_| plane.clone())
}

/// Torus-moved planes share an orbit; sheared planes do not.
pub fn orbit_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut report = SuiteReport::new("orbit", n);
    for _ in 0..samples {
        let pv = plucker_of(&random_plane(n, &mut rng));
        let t = random_torus(n, &mut rng);
        let moved = torus_act(&t, &pv).expect("matching size");
        report.record("same orbit", same_orbit(&pv, &moved));
        let round_trip = matches!(reconstruct_torus(&pv, &moved), Ok(Some(s)) if torus_act(&s, &pv).is_ok_and(|q| q.projectively_eq(&moved)));
        report.record("torus round trip", round_trip);
    }
    for _ in 0..samples {
        let plane = random_main_plane(n, &mut rng);
        let other = shear(&plane, &mut rng);
        let (pv, qv) = (plucker_of(&plane), plucker_of(&other));
        report.record("perturbed differs", !same_orbit(&pv, &qv));
        report.record("perturbed has no torus", !matches!(reconstruct_torus(&pv, &qv), Ok(Some(_))));
    }
    report
}

fn unit_torus<R: Rng>(n: usize, rng: &mut R) -> TorusElement {
    let units = [GaussianRational::one(), -GaussianRational::one(), GaussianRational::i(), -GaussianRational::i()];
    TorusElement::new((0..n).map(|_| units[rng.random_range(0..4)].clone()).collect()).expect("units")
}

/// Hypersimplex constraints, compact-torus invariance and relative interiors.
pub fn momentmap_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut report = SuiteReport::new("momentmap", n);
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    for _ in 0..samples {
        let pv = plucker_of(&random_plane(n, &mut rng));
        let mu = moment_map(&pv);
        report.record("sum is 2", mu.coords().iter().sum::<Rational>() == Rational::from_integer(2.into()));
        report.record("box", mu.coords().iter().all(|x| *x >= zero && *x <= one));
        let t = unit_torus(n, &mut rng);
        report.record("compact torus", torus_act(&t, &pv).is_ok_and(|q| moment_map(&q) == mu));
        let inside = admissible_polytope(&signature_of(&pv)).is_ok_and(|poly| in_relative_interior(&poly, &mu));
        report.record("relative interior", inside);
    }
    report
}

/// Config and plane round trips, and normalised points against z-coordinates.
pub fn gm_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut report = SuiteReport::new("gm", n);
    for _ in 0..samples {
        let plane = random_main_plane(n, &mut rng);
        let pv = plucker_of(&plane);
        let config = config_of_plane(&plane).expect("no zero rows");
        let back = plane_of_config(&config).expect("distinct points");
        report.record("config round trip", config_of_plane(&back).as_ref() == Ok(&config));
        report.record("plane round trip", matches!(reconstruct_torus(&pv, &plucker_of(&back)), Ok(Some(_))));
        let matches_z = match (normalize_config(&config), z_coordinates(&pv)) {
            (Ok((normal, _)), Ok(z)) => {
                (4..=n).all(|i| normal.point(i).as_affine() == Some(&z[i - 4]))
                    && normal.point(1).is_infinity()
                    && normal.point(2).as_affine().is_some_and(GaussianRational::is_zero)
                    && normal.point(3).as_affine() == Some(&GaussianRational::one())
            }
            _ => false,
        };
        report.record("normalized equals z", matches_z);
    }
    report
}
