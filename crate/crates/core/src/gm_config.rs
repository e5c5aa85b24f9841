//! Planes as ordered configurations of points on the projective line.

use serde::{Deserialize, Serialize};

use crate::crossratio::CrossRatioValue;
use crate::error::{Error, Result};
use crate::grassmann::Plane;
use crate::scalar::{GaussianRational, ProjectivePoint};

/// A 2×2 matrix acting on homogeneous columns `(first, second)`.
pub type Matrix2 = [[GaussianRational; 2]; 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigJson", into = "ConfigJson")]
pub struct PointConfiguration {
    points: Vec<ProjectivePoint>,
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    n: usize,
    points: Vec<[GaussianRational; 2]>,
}

impl TryFrom<ConfigJson> for PointConfiguration {
    type Error = Error;
    fn try_from(j: ConfigJson) -> Result<Self> {
        if j.points.len() != j.n {
            return Err(Error::DimensionMismatch { expected: j.n, found: j.points.len() });
        }
        let points = j.points.into_iter().map(|[a, b]| ProjectivePoint::new(a, b)).collect::<Result<_>>()?;
        Ok(Self { points })
    }
}

impl From<PointConfiguration> for ConfigJson {
    fn from(c: PointConfiguration) -> Self {
        let points = c.points.iter().map(|p| [p.first().clone(), p.second().clone()]).collect();
        Self { n: c.n(), points }
    }
}

impl PointConfiguration {
    pub fn new(points: Vec<ProjectivePoint>) -> Self {
        Self { points }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// 1-based.
    pub fn point(&self, i: usize) -> &ProjectivePoint {
        &self.points[i - 1]
    }

    /// Pairwise distinct points.
    pub fn is_generic(&self) -> bool {
        self.points.iter().enumerate().all(|(a, p)| !self.points[a + 1..].contains(p))
    }
}

fn det(p: &ProjectivePoint, q: &ProjectivePoint) -> GaussianRational {
    &(p.first() * q.second()) - &(q.first() * p.second())
}

/// Row `i` read as the point `[a_i : b_i]`.
pub fn config_of_plane(plane: &Plane) -> Result<PointConfiguration> {
    let points = plane
        .rows()
        .iter()
        .enumerate()
        .map(|(i, [a, b])| ProjectivePoint::new(a.clone(), b.clone()).map_err(|_| Error::ZeroRow(i + 1)))
        .collect::<Result<_>>()?;
    Ok(PointConfiguration { points })
}

/// The plane whose rows are the canonical representatives of the points.
pub fn plane_of_config(config: &PointConfiguration) -> Result<Plane> {
    Plane::new(config.points.iter().map(|p| [p.first().clone(), p.second().clone()]).collect())
}

pub fn apply_transform(m: &Matrix2, p: &ProjectivePoint) -> ProjectivePoint {
    let a = &(&m[0][0] * p.first()) + &(&m[0][1] * p.second());
    let b = &(&m[1][0] * p.first()) + &(&m[1][1] * p.second());
    ProjectivePoint::new(a, b).expect("invertible transforms keep points nonzero")
}

/// The projective transformation sending the first three points to `∞, 0, 1`,
/// together with the transformed configuration.
pub fn normalize_config(config: &PointConfiguration) -> Result<(PointConfiguration, Matrix2)> {
    if config.n() < 3 {
        return Err(Error::TooFewRows(config.n()));
    }
    let [p1, p2, p3] = [config.point(1), config.point(2), config.point(3)];
    let d12 = det(p1, p2);
    if d12.is_zero() || det(p1, p3).is_zero() || det(p2, p3).is_zero() {
        return Err(Error::Degenerate("first three points are not distinct".into()));
    }
    // λ p1 + μ p2 = p3 by Cramer's rule
    let lambda = det(p3, p2).checked_div(&d12)?;
    let mu = det(p1, p3).checked_div(&d12)?;
    let n = [
        [&lambda * p1.first(), &mu * p2.first()],
        [&lambda * p1.second(), &mu * p2.second()],
    ];
    let dn = &(&n[0][0] * &n[1][1]) - &(&n[0][1] * &n[1][0]);
    let inv = dn.inverse()?;
    let m = [
        [&n[1][1] * &inv, -&(&n[0][1] * &inv)],
        [-&(&n[1][0] * &inv), &n[0][0] * &inv],
    ];
    let points = config.points.iter().map(|p| apply_transform(&m, p)).collect();
    Ok((PointConfiguration { points }, m))
}

/// `[det(p1,p3)·det(p2,p4) : det(p1,p4)·det(p2,p3)]`.
pub fn cross_ratio_of_points(
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    p3: &ProjectivePoint,
    p4: &ProjectivePoint,
) -> CrossRatioValue {
    let num = &det(p1, p3) * &det(p2, p4);
    let den = &det(p1, p4) * &det(p2, p3);
    match ProjectivePoint::new(num, den) {
        Ok(p) => CrossRatioValue::Defined(p),
        Err(_) => CrossRatioValue::Undefined,
    }
}
