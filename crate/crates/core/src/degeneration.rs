//! One-parameter families of planes over Laurent polynomials and their `t → 0` limits
//! in the cross-ratio compactification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::crossratio::{CrossRatioValue, CrossTuple, Tuple4};
use crate::error::{Error, Result};
use crate::grassmann::{all_pairs, sorted_pair, Pair, Plane};
use crate::laurent::{laurent_limit_ratio, LaurentScalar};
use crate::param_space::member_of_virtual;
use crate::scalar::{GaussianRational, ProjectivePoint};
use crate::strata::Signature;

/// An `n × 2` matrix of Laurent polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LaurentPlaneJson", into = "LaurentPlaneJson")]
pub struct LaurentPlane {
    rows: Vec<[LaurentScalar; 2]>,
}

#[derive(Serialize, Deserialize)]
struct LaurentPlaneJson {
    n: usize,
    rows: Vec<[LaurentScalar; 2]>,
}

impl TryFrom<LaurentPlaneJson> for LaurentPlane {
    type Error = Error;
    fn try_from(j: LaurentPlaneJson) -> Result<Self> {
        if j.rows.len() != j.n {
            return Err(Error::DimensionMismatch { expected: j.n, found: j.rows.len() });
        }
        Self::new(j.rows)
    }
}

impl From<LaurentPlane> for LaurentPlaneJson {
    fn from(lp: LaurentPlane) -> Self {
        Self { n: lp.n(), rows: lp.rows }
    }
}

impl LaurentPlane {
    /// Requires some 2×2 minor to be a nonzero series.
    pub fn new(rows: Vec<[LaurentScalar; 2]>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::TooFewRows(rows.len()));
        }
        let lp = Self { rows };
        if all_pairs(lp.n()).into_iter().all(|(i, j)| lp.minor(i, j).is_zero()) {
            return Err(Error::RankDeficient(lp.n()));
        }
        Ok(lp)
    }

    /// The constant family.
    pub fn constant(plane: &Plane) -> Self {
        let rows = plane.rows().iter().map(|r| r.clone().map(LaurentScalar::constant)).collect();
        Self { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[[LaurentScalar; 2]] {
        &self.rows
    }

    /// `a_i b_j - a_j b_i`, 1-based.
    pub fn minor(&self, i: usize, j: usize) -> LaurentScalar {
        let [a, b] = &self.rows[i - 1];
        let [c, d] = &self.rows[j - 1];
        &(a * d) - &(c * b)
    }

    /// Substitutes `t → c·t`.
    pub fn rescale(&self, c: &GaussianRational) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|[a, b]| Ok([a.rescale(c)?, b.rescale(c)?]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

pub fn plucker_laurent(lp: &LaurentPlane) -> BTreeMap<Pair, LaurentScalar> {
    all_pairs(lp.n()).into_iter().map(|(i, j)| ((i, j), lp.minor(i, j))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitReport {
    pub limit_signature: Signature,
    pub limit_tuple: CrossTuple,
    pub member_of_virtual: bool,
}

fn antisymmetric(p: &BTreeMap<Pair, LaurentScalar>, i: usize, j: usize) -> LaurentScalar {
    let v = &p[&sorted_pair(i, j)];
    if i < j {
        v.clone()
    } else {
        -v
    }
}

/// Limit signature from the global minimum valuation, limit tuple coordinatewise.
pub fn limit_point(lp: &LaurentPlane) -> Result<LimitReport> {
    let (limit_signature, limit_tuple) = limit_parts(lp)?;
    let member_of_virtual = member_of_virtual(&limit_tuple, &limit_signature).unwrap_or(false);
    Ok(LimitReport { limit_signature, limit_tuple, member_of_virtual })
}

pub(crate) fn limit_parts(lp: &LaurentPlane) -> Result<(Signature, CrossTuple)> {
    let p = plucker_laurent(lp);
    let v0 = p.values().filter_map(LaurentScalar::valuation).min().ok_or(Error::ZeroPluckerVector)?;
    let vanishing = p.iter().filter(|(_, s)| s.valuation().is_none_or(|v| v > v0)).map(|(&k, _)| k);
    let limit_signature = Signature::new(lp.n(), vanishing)?;
    let mut values = BTreeMap::new();
    for t in Tuple4::all_sorted(lp.n()) {
        let [i, j, k, l] = t.indices();
        let num = &antisymmetric(&p, i, k) * &antisymmetric(&p, j, l);
        let den = &antisymmetric(&p, i, l) * &antisymmetric(&p, j, k);
        let value = if num.is_zero() && den.is_zero() {
            CrossRatioValue::Undefined
        } else if den.is_zero() {
            CrossRatioValue::Defined(ProjectivePoint::infinity())
        } else {
            CrossRatioValue::Defined(laurent_limit_ratio(&num, &den)?)
        };
        values.insert(t, value);
    }
    Ok((limit_signature, CrossTuple::new(lp.n(), values)?))
}

/// Whether the limit of the family lands in the virtual space of its limit stratum.
/// Checks one algebraic family; not a proof of continuity.
pub fn continuity_check(lp: &LaurentPlane) -> bool {
    limit_point(lp).is_ok_and(|r| r.member_of_virtual)
}
