//! The moment map to the hypersimplex and the admissible polytopes of strata.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{Pair, PluckerVector};
use crate::linalg::{maximize, rank, LpOutcome, RatMatrix};
use crate::scalar::Rational;
use crate::strata::{is_admissible, ParallelStructure, Signature};

/// A point of `Δ(n,2) = {0 ≤ x_i ≤ 1, Σ x_i = 2}` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersimplexPoint {
    coords: Vec<Rational>,
}

impl HypersimplexPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let sum: Rational = coords.iter().sum();
        let in_box = coords.iter().all(|x| !x.is_negative() && *x <= Rational::one());
        if !in_box || sum != Rational::from_integer(2.into()) {
            return Err(Error::Degenerate("point is not in the hypersimplex".into()));
        }
        Ok(Self { coords })
    }

    /// The vertex `e_i + e_j`.
    pub fn vertex(n: usize, (i, j): Pair) -> Self {
        let coords = (1..=n).map(|k| if k == i || k == j { Rational::one() } else { Rational::zero() }).collect();
        Self { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }
}

/// `μ(L) = (1/Σ|P_ij|²) Σ |P_ij|² e_ij`
pub fn moment_map(pv: &PluckerVector) -> HypersimplexPoint {
    let n = pv.n();
    let mut acc = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    for ((i, j), p) in pv.entries() {
        let w = p.norm_sq();
        acc[i - 1] += &w;
        acc[j - 1] += &w;
        total += w;
    }
    let coords = acc.into_iter().map(|x| x / &total).collect();
    HypersimplexPoint::new(coords).expect("moment map lands in the hypersimplex")
}

/// Convex hull of the vertices `e_ij` over a set of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissiblePolytope {
    pub n: usize,
    #[serde(with = "pair_list")]
    pub vertices: BTreeSet<Pair>,
    pub dim: usize,
}

mod pair_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BTreeSet<Pair>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|&(a, b)| [a, b]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeSet<Pair>, D::Error> {
        let v: Vec<[usize; 2]> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|[a, b]| (a.min(b), a.max(b))).collect())
    }
}

impl AdmissiblePolytope {
    pub fn from_vertices(n: usize, vertices: BTreeSet<Pair>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Degenerate("polytope without vertices".into()));
        }
        let dim = affine_dimension(n, &vertices);
        Ok(Self { n, vertices, dim })
    }

    pub fn vertex_points(&self) -> Vec<HypersimplexPoint> {
        self.vertices.iter().map(|&p| HypersimplexPoint::vertex(self.n, p)).collect()
    }
}

fn vertex_vector(n: usize, (i, j): Pair) -> Vec<Rational> {
    (1..=n).map(|k| if k == i || k == j { Rational::one() } else { Rational::zero() }).collect()
}

fn affine_dimension(n: usize, vertices: &BTreeSet<Pair>) -> usize {
    let mut it = vertices.iter();
    let Some(&base) = it.next() else {
        return 0;
    };
    let v0 = vertex_vector(n, base);
    let diffs: RatMatrix = it
        .map(|&p| vertex_vector(n, p).into_iter().zip(&v0).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

/// `P_σ = conv{e_ij : P_ij ≢ 0 on the stratum}`.
pub fn admissible_polytope(sig: &Signature) -> Result<AdmissiblePolytope> {
    if !is_admissible(sig) {
        return Err(Error::Inadmissible);
    }
    AdmissiblePolytope::from_vertices(sig.n(), sig.nonvanishing().into_iter().collect())
}

/// Index set `I` of a wall `Σ_{i∈I} x_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneForm {
    pub index_set: BTreeSet<usize>,
}

impl HyperplaneForm {
    pub fn evaluate(&self, point: &HypersimplexPoint) -> Rational {
        self.index_set.iter().map(|&i| point.coords()[i - 1].clone()).sum()
    }

    pub fn evaluate_vertex(&self, (i, j): Pair) -> usize {
        usize::from(self.index_set.contains(&i)) + usize::from(self.index_set.contains(&j))
    }
}

/// For two parallel classes and no zero rows, the class containing the
/// smallest index; the polytope lies on `Σ_{i∈I} x_i = 1`.
pub fn theorem6_form(ps: &ParallelStructure) -> Option<HyperplaneForm> {
    if !ps.zero_rows().is_empty() || ps.classes().len() != 2 {
        return None;
    }
    Some(HyperplaneForm { index_set: ps.classes()[0].iter().copied().collect() })
}

/// Exact test for `point ∈ relint conv(vertices)`: maximise `s` subject to
/// `point = Σ λ_v v`, `Σ λ_v = 1`, `λ_v ≥ s`; the point is relatively interior
/// iff the optimum is positive.
pub fn in_relative_interior(poly: &AdmissiblePolytope, point: &HypersimplexPoint) -> bool {
    if point.n() != poly.n {
        return false;
    }
    let verts: Vec<Vec<Rational>> = poly.vertices.iter().map(|&p| vertex_vector(poly.n, p)).collect();
    let k = verts.len();
    // variables: μ_1..μ_k, s  with λ_v = μ_v + s
    let mut a: RatMatrix = Vec::with_capacity(poly.n + 1);
    let mut b = Vec::with_capacity(poly.n + 1);
    for coord in 0..poly.n {
        let mut row: Vec<Rational> = verts.iter().map(|v| v[coord].clone()).collect();
        let col_sum: Rational = verts.iter().map(|v| v[coord].clone()).sum();
        row.push(col_sum);
        a.push(row);
        b.push(point.coords()[coord].clone());
    }
    let mut row = vec![Rational::one(); k];
    row.push(Rational::from_integer((k as i64).into()));
    a.push(row);
    b.push(Rational::one());
    let mut c = vec![Rational::zero(); k];
    c.push(Rational::one());
    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        _ => false,
    }
}

/// True when `inner` spans a proper face of `conv(outer)`: some affine functional
/// equals 0 on `inner` and is at most −1 on the remaining vertices.
pub fn is_proper_face(n: usize, outer: &BTreeSet<Pair>, inner: &BTreeSet<Pair>) -> bool {
    if inner.is_empty() || !inner.is_subset(outer) || inner.len() == outer.len() {
        return false;
    }
    // variables: c⁺ (n), c⁻ (n), d⁺, d⁻, slack per outside vertex
    let outside: Vec<Pair> = outer.difference(inner).copied().collect();
    let nv = 2 * n + 2 + outside.len();
    let mut a: RatMatrix = Vec::new();
    let mut b = Vec::new();
    let functional_row = |p: Pair, slack: Option<usize>| {
        let v = vertex_vector(n, p);
        let mut row = vec![Rational::zero(); nv];
        for k in 0..n {
            row[k] = v[k].clone();
            row[n + k] = -v[k].clone();
        }
        row[2 * n] = -Rational::one();
        row[2 * n + 1] = Rational::one();
        if let Some(s) = slack {
            row[2 * n + 2 + s] = Rational::one();
        }
        row
    };
    for &p in inner {
        a.push(functional_row(p, None));
        b.push(Rational::zero());
    }
    for (s, &p) in outside.iter().enumerate() {
        a.push(functional_row(p, Some(s)));
        b.push(-Rational::one());
    }
    let c = vec![Rational::zero(); nv];
    matches!(maximize(&a, &b, &c), LpOutcome::Optimal { .. })
}
