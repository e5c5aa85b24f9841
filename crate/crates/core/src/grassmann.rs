//! Planes in n-space, their Plücker coordinates and the action of the diagonal torus.
//!
//! Indices are 1-based throughout. Coordinates are antisymmetric: `P(j, i) = -P(i, j)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Unordered pair `{i, j}` with `i < j`, 1-based.
pub type Pair = (usize, usize);

/// All pairs `i < j` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<Pair> {
    (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).collect()
}

/// Position of `{i, j}` (with `i < j`) in [`all_pairs`] order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs starting with a < i: Σ_{a<i} (n - a)
    let before = (i - 1) * n - (i - 1) * i / 2;
    before + (j - i - 1)
}

pub fn sorted_pair(i: usize, j: usize) -> Pair {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A 2-plane given by an n×2 matrix of rank 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlaneJson", into = "PlaneJson")]
pub struct Plane {
    rows: Vec<[GaussianRational; 2]>,
}

#[derive(Serialize, Deserialize)]
struct PlaneJson {
    n: usize,
    rows: Vec<[GaussianRational; 2]>,
}

impl TryFrom<PlaneJson> for Plane {
    type Error = Error;
    fn try_from(value: PlaneJson) -> Result<Self> {
        if value.rows.len() != value.n {
            return Err(Error::DimensionMismatch { expected: value.n, found: value.rows.len() });
        }
        Plane::new(value.rows)
    }
}

impl From<Plane> for PlaneJson {
    fn from(p: Plane) -> Self {
        PlaneJson { n: p.n(), rows: p.rows }
    }
}

impl Plane {
    pub fn new(rows: Vec<[GaussianRational; 2]>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::TooFewRows(rows.len()));
        }
        let plane = Self { rows };
        let rank = plane.rank();
        if rank < 2 {
            return Err(Error::RankDeficient(rank));
        }
        Ok(plane)
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[(i64, i64)]) -> Result<Self> {
        Self::new(rows.iter().map(|&(a, b)| [GaussianRational::from_int(a), GaussianRational::from_int(b)]).collect())
    }

    fn rank(&self) -> usize {
        let any_nonzero_row = self.rows.iter().any(|r| !r[0].is_zero() || !r[1].is_zero());
        if !any_nonzero_row {
            return 0;
        }
        let n = self.rows.len();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !self.minor(i, j).is_zero() {
                    return 2;
                }
            }
        }
        1
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[[GaussianRational; 2]] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[GaussianRational; 2] {
        &self.rows[i - 1]
    }

    /// `a_i b_j - a_j b_i`
    pub fn minor(&self, i: usize, j: usize) -> GaussianRational {
        let [a_i, b_i] = &self.rows[i - 1];
        let [a_j, b_j] = &self.rows[j - 1];
        &(a_i * b_j) - &(a_j * b_i)
    }

    /// Right multiplication by a 2×2 matrix `[[g00, g01], [g10, g11]]`.
    pub fn change_basis(&self, g: &[[GaussianRational; 2]; 2]) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|[a, b]| [&(a * &g[0][0]) + &(b * &g[1][0]), &(a * &g[0][1]) + &(b * &g[1][1])])
            .collect();
        Self::new(rows)
    }

    /// Rows reordered so that new row `k` is old row `perm[k-1]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: perm.len() });
        }
        Self::new(perm.iter().map(|&p| self.rows[p - 1].clone()).collect())
    }
}

/// Plücker coordinates `P_ij` for `i < j`, stored in [`all_pairs`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    n: usize,
    coords: Vec<GaussianRational>,
}

impl PluckerVector {
    /// Builds a vector from coordinates listed in [`all_pairs`] order.
    pub fn new(n: usize, coords: Vec<GaussianRational>) -> Result<Self> {
        let expected = binomial(n, 2);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: coords.len() });
        }
        if coords.iter().all(GaussianRational::is_zero) {
            return Err(Error::ZeroPluckerVector);
        }
        Ok(Self { n, coords })
    }

    /// Builds a vector from `(pair, value)` entries; missing pairs are zero.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Pair, GaussianRational)>,
    {
        let mut coords = vec![GaussianRational::zero(); binomial(n, 2)];
        for ((i, j), v) in entries {
            if i == j || i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidPair(i, j));
            }
            let (a, b) = sorted_pair(i, j);
            coords[pair_index(n, a, b)] = if i < j { v } else { -v };
        }
        Self::new(n, coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    /// `P_ij` with the antisymmetric convention; `P_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> GaussianRational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => GaussianRational::zero(),
            std::cmp::Ordering::Less => self.coords[pair_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coords[pair_index(self.n, j, i)],
        }
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        let (a, b) = sorted_pair(i, j);
        a == b || self.coords[pair_index(self.n, a, b)].is_zero()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Pair, &GaussianRational)> {
        all_pairs(self.n).into_iter().zip(self.coords.iter())
    }

    pub fn scale(&self, c: &GaussianRational) -> Result<Self> {
        Self::new(self.n, self.coords.iter().map(|x| x * c).collect())
    }

    /// Equal up to a common nonzero factor.
    pub fn projectively_eq(&self, other: &PluckerVector) -> bool {
        if self.n != other.n {
            return false;
        }
        let Some(k) = self.coords.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if other.coords[k].is_zero() {
            return false;
        }
        let ratio = other.coords[k].checked_div(&self.coords[k]).expect("nonzero");
        self.coords.iter().zip(&other.coords).all(|(a, b)| &(a * &ratio) == b)
    }
}

/// Plücker coordinates of a plane: `P_ij = a_i b_j - a_j b_i`.
pub fn plucker_of(plane: &Plane) -> PluckerVector {
    let n = plane.n();
    let coords = all_pairs(n).into_iter().map(|(i, j)| plane.minor(i, j)).collect();
    PluckerVector::new(n, coords).expect("rank-2 planes have a nonzero minor")
}

/// Value of the three-term relation `P_ij P_kl - P_ik P_jl + P_il P_jk` for `i<j<k<l`.
pub fn plucker_relation(pv: &PluckerVector, i: usize, j: usize, k: usize, l: usize) -> GaussianRational {
    let g = |a, b| pv.get(a, b);
    &(&(&g(i, j) * &g(k, l)) - &(&g(i, k) * &g(j, l))) + &(&g(i, l) * &g(j, k))
}

/// True iff every three-term Plücker relation vanishes exactly.
pub fn check_plucker_relations(pv: &PluckerVector) -> bool {
    quadruples(pv.n()).all(|[i, j, k, l]| plucker_relation(pv, i, j, k, l).is_zero())
}

/// All `i < j < k < l` in lexicographic order.
pub fn quadruples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (1..=n).flat_map(move |i| {
        ((i + 1)..=n).flat_map(move |j| {
            ((j + 1)..=n).flat_map(move |k| ((k + 1)..=n).map(move |l| [i, j, k, l]))
        })
    })
}

/// An element `(t_1, …, t_n)` of the algebraic torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    factors: Vec<GaussianRational>,
}

impl TorusElement {
    pub fn new(factors: Vec<GaussianRational>) -> Result<Self> {
        if factors.iter().any(GaussianRational::is_zero) {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { factors })
    }

    pub fn from_ints(factors: &[i64]) -> Result<Self> {
        Self::new(factors.iter().map(|&v| GaussianRational::from_int(v)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self { factors: vec![GaussianRational::one(); n] }
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[GaussianRational] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &GaussianRational {
        &self.factors[i - 1]
    }

    /// Componentwise product.
    pub fn compose(&self, other: &TorusElement) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: other.n() });
        }
        Self::new(self.factors.iter().zip(&other.factors).map(|(a, b)| a * b).collect())
    }

    /// Equal up to a common nonzero factor (the diagonal acts trivially).
    pub fn equal_mod_diagonal(&self, other: &TorusElement) -> bool {
        if self.n() != other.n() || self.n() == 0 {
            return false;
        }
        let ratio = other.factors[0].checked_div(&self.factors[0]).expect("nonzero");
        self.factors.iter().zip(&other.factors).all(|(a, b)| &(a * &ratio) == b)
    }

    /// Scales the rows of a plane.
    pub fn act_on_plane(&self, plane: &Plane) -> Result<Plane> {
        if self.n() != plane.n() {
            return Err(Error::DimensionMismatch { expected: plane.n(), found: self.n() });
        }
        Plane::new(plane.rows().iter().zip(&self.factors).map(|([a, b], t)| [a * t, b * t]).collect())
    }
}

/// `P_ij ↦ t_i t_j P_ij`.
pub fn torus_act(t: &TorusElement, pv: &PluckerVector) -> Result<PluckerVector> {
    if t.n() != pv.n() {
        return Err(Error::DimensionMismatch { expected: pv.n(), found: t.n() });
    }
    let coords = pv.entries().map(|((i, j), p)| &(t.factor(i) * t.factor(j)) * p).collect();
    PluckerVector::new(pv.n(), coords)
}

/// Finds `t` with `torus_act(t, pv1)` projectively equal to `pv2`, normalised so
/// that the first index touching a nonvanishing coordinate has factor 1.
///
/// Returns `Ok(None)` when the coordinate ratios are multiplicatively inconsistent
/// and `Err(PatternMismatch)` when the two vectors vanish on different pairs.
pub fn reconstruct_torus(pv1: &PluckerVector, pv2: &PluckerVector) -> Result<Option<TorusElement>> {
    if pv1.n() != pv2.n() {
        return Err(Error::DimensionMismatch { expected: pv1.n(), found: pv2.n() });
    }
    let n = pv1.n();
    let pairs = all_pairs(n);
    if pairs.iter().any(|&(i, j)| pv1.is_zero_at(i, j) != pv2.is_zero_at(i, j)) {
        return Err(Error::PatternMismatch);
    }
    // τ_ij = P_ij(pv2) / P_ij(pv1) on the support.
    let tau = |i: usize, j: usize| -> Option<GaussianRational> {
        if pv1.is_zero_at(i, j) {
            None
        } else {
            Some(pv2.get(i, j).checked_div(&pv1.get(i, j)).expect("nonzero"))
        }
    };
    let adjacent = |i: usize| (1..=n).filter(move |&j| j != i && !pv1.is_zero_at(i, j));
    let root = (1..=n).find(|&i| adjacent(i).next().is_some()).expect("nonzero vector");

    // Scale λ with t_i t_j = λ τ_ij. An odd cycle root–j–k fixes λ; otherwise λ = 1.
    let mut lambda = GaussianRational::one();
    'search: for j in adjacent(root) {
        for k in adjacent(root) {
            if k != j && !pv1.is_zero_at(j, k) {
                let num = tau(j, k).unwrap();
                let den = &tau(root, j).unwrap() * &tau(root, k).unwrap();
                lambda = num.checked_div(&den).expect("nonzero");
                break 'search;
            }
        }
    }
    let mut t = vec![GaussianRational::one(); n];
    let anchor = adjacent(root).next().unwrap();
    for i in 1..=n {
        if i == root {
            continue;
        }
        if let Some(r) = tau(root, i) {
            t[i - 1] = &lambda * &r;
        }
    }
    // Indices in the root's parallel class meet the anchor instead.
    for i in 1..=n {
        if i != root && pv1.is_zero_at(root, i) {
            if let Some(r) = tau(i, anchor) {
                t[i - 1] = (&lambda * &r).checked_div(&t[anchor - 1]).expect("nonzero");
            }
        }
    }
    let consistent = pairs.iter().all(|&(i, j)| match tau(i, j) {
        None => true,
        Some(r) => &t[i - 1] * &t[j - 1] == &lambda * &r,
    });
    Ok(consistent.then(|| TorusElement::new(t).expect("nonzero factors")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::w5;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn pair_indexing_matches_enumeration() {
        for n in 2..9 {
            for (k, (i, j)) in all_pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
        }
    }

    #[test]
    fn coordinate_plane() {
        let p = Plane::from_ints(&[(1, 0), (0, 1), (0, 0), (0, 0), (0, 0)]).unwrap();
        let pv = plucker_of(&p);
        for ((i, j), v) in pv.entries() {
            assert_eq!(v, &g(if (i, j) == (1, 2) { 1 } else { 0 }));
        }
    }

    #[test]
    fn w5_coordinates() {
        let pv = plucker_of(&w5());
        let expected = [1, 1, 2, 3, -1, -1, -1, 1, 2, 1];
        let got: Vec<_> = pv.coords().to_vec();
        assert_eq!(got, expected.iter().map(|&v| g(v)).collect::<Vec<_>>());
        assert_eq!(pv.get(2, 1), g(-1));
        assert!(check_plucker_relations(&pv));
    }

    #[test]
    fn rank_one_rejected() {
        assert_eq!(Plane::from_ints(&[(1, 0), (2, 0), (3, 0), (4, 0)]), Err(Error::RankDeficient(1)));
        assert_eq!(Plane::from_ints(&[(0, 0), (0, 0)]), Err(Error::RankDeficient(0)));
    }

    #[test]
    fn relation_checks() {
        let single = PluckerVector::from_entries(4, [((1, 2), g(1))]).unwrap();
        assert!(check_plucker_relations(&single));
        let broken = PluckerVector::from_entries(4, [((1, 2), g(1)), ((3, 4), g(1))]).unwrap();
        assert!(!check_plucker_relations(&broken));
        assert_eq!(plucker_relation(&broken, 1, 2, 3, 4), g(1));
    }

    #[test]
    fn torus_examples() {
        let pv = plucker_of(&w5());
        assert_eq!(torus_act(&TorusElement::identity(5), &pv).unwrap(), pv);
        let doubled = torus_act(&TorusElement::from_ints(&[2, 2, 2, 2, 2]).unwrap(), &pv).unwrap();
        assert_eq!(doubled, pv.scale(&g(4)).unwrap());
        assert!(doubled.projectively_eq(&pv));
        let last = torus_act(&TorusElement::from_ints(&[1, 1, 1, 1, 2]).unwrap(), &pv).unwrap();
        for ((i, j), v) in last.entries() {
            let factor = if j == 5 { 2 } else { 1 };
            assert_eq!(v, &(&pv.get(i, j) * &g(factor)), "({i},{j})");
        }
        assert!(torus_act(&TorusElement::identity(4), &pv).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let pv = plucker_of(&w5());
        let t = TorusElement::from_ints(&[1, 1, 1, 1, 2]).unwrap();
        let moved = torus_act(&t, &pv).unwrap();
        let got = reconstruct_torus(&pv, &moved).unwrap().unwrap();
        assert!(got.equal_mod_diagonal(&t));
        assert_eq!(reconstruct_torus(&pv, &pv).unwrap().unwrap(), TorusElement::identity(5));

        let mut coords = pv.coords().to_vec();
        coords[pair_index(5, 4, 5)] = g(7);
        let tampered = PluckerVector::new(5, coords).unwrap();
        assert_eq!(reconstruct_torus(&pv, &tampered).unwrap(), None);

        let other = PluckerVector::from_entries(5, [((1, 2), g(1))]).unwrap();
        assert_eq!(reconstruct_torus(&pv, &other), Err(Error::PatternMismatch));
    }

    #[test]
    fn reconstruct_two_class_pattern() {
        // classes {1,2} and {3,4,5}: bipartite support
        let p = Plane::from_ints(&[(1, 0), (2, 0), (0, 1), (0, 2), (0, 3)]).unwrap();
        let pv = plucker_of(&p);
        let t = TorusElement::from_ints(&[3, -1, 2, 5, 7]).unwrap();
        let moved = torus_act(&t, &pv).unwrap().scale(&g(11)).unwrap();
        let got = reconstruct_torus(&pv, &moved).unwrap().unwrap();
        assert!(torus_act(&got, &pv).unwrap().projectively_eq(&moved));
    }
}
