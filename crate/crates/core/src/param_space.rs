//! Torus orbits through cross-ratios and the virtual parameter spaces of strata.
//!
//! On a stratum every cross-ratio is either generic, forced to `0`, `1` or `∞`, or
//! the indeterminate `0/0`. The generic and indeterminate ones are free coordinates of
//! the virtual space, subject to multiplicative constraints found by integer linear
//! algebra on exponent vectors of Plücker monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::crossratio::{
    classify_unchecked, embed_phi, evaluate_cross_ratio, Classification, CrossRatioValue, CrossTuple, Forced, Tuple4,
};
use crate::degeneration::limit_parts;
use crate::error::{Error, Result};
use crate::grassmann::{all_pairs, pair_index, plucker_of, quadruples, reconstruct_torus, PluckerVector};
use crate::linalg::{hermite_rows, integer_kernel, reduce_modulo, TaggedRow};
use crate::momentmap::is_proper_face;
use crate::sampling::{perturbed_family, seeded};
use crate::scalar::{GaussianRational, ProjectivePoint};
use crate::strata::{is_admissible, parallel_structure_of, signature_of, witness_plane, witness_plane_with, Signature};

/// Defined cross-ratio values of a plane together with its stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub signature: Signature,
    pub values: BTreeMap<Tuple4, ProjectivePoint>,
}

pub fn orbit_class(pv: &PluckerVector) -> OrbitClass {
    let values = embed_phi(pv)
        .values()
        .iter()
        .filter_map(|(t, v)| v.point().map(|p| (*t, p.clone())))
        .collect();
    OrbitClass { signature: signature_of(pv), values }
}

/// Same stratum and equal defined cross-ratios.
pub fn same_orbit(pv1: &PluckerVector, pv2: &PluckerVector) -> bool {
    pv1.n() == pv2.n() && orbit_class(pv1) == orbit_class(pv2)
}

/// [`same_orbit`] decided instead by solving for a torus element.
pub fn same_orbit_by_torus(pv1: &PluckerVector, pv2: &PluckerVector) -> bool {
    pv1.n() == pv2.n() && matches!(reconstruct_torus(pv1, pv2), Ok(Some(_)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Forced(Forced),
    /// `ghost` marks a coordinate that is `0/0` on the stratum itself.
    Free { ghost: bool },
}

/// `Π w_t^{exponents[t]} = value` with `value = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub exponents: BTreeMap<Tuple4, i64>,
    pub value: i64,
}

impl Constraint {
    /// Homogenised check on projective values.
    pub fn holds(&self, x: &CrossTuple) -> bool {
        let mut lhs = GaussianRational::from_int(self.value);
        let mut rhs = GaussianRational::one();
        for (t, &e) in &self.exponents {
            let Some(p) = x.get(t).and_then(CrossRatioValue::point) else {
                return false;
            };
            let (up, down) = if e > 0 { (p.first(), p.second()) } else { (p.second(), p.first()) };
            for _ in 0..e.unsigned_abs() {
                lhs *= down;
                rhs *= up;
            }
        }
        lhs == rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualSpaceDescription {
    pub n: usize,
    pub status: BTreeMap<Tuple4, Status>,
    pub constraints: Vec<Constraint>,
}

impl VirtualSpaceDescription {
    pub fn forced(&self) -> impl Iterator<Item = (&Tuple4, Forced)> {
        self.status.iter().filter_map(|(t, s)| match s {
            Status::Forced(v) => Some((t, *v)),
            Status::Free { .. } => None,
        })
    }

    pub fn free(&self) -> impl Iterator<Item = &Tuple4> {
        self.status.iter().filter(|(_, s)| matches!(s, Status::Free { .. })).map(|(t, _)| t)
    }

    pub fn strong(&self) -> impl Iterator<Item = &Tuple4> {
        self.status.iter().filter(|(_, s)| matches!(s, Status::Free { ghost: false })).map(|(t, _)| t)
    }

    pub fn ghosts(&self) -> impl Iterator<Item = &Tuple4> {
        self.status.iter().filter(|(_, s)| matches!(s, Status::Free { ghost: true })).map(|(t, _)| t)
    }
}

fn tuple_key(t: &Tuple4) -> String {
    t.indices().iter().map(usize::to_string).collect()
}

fn parse_tuple_key(s: &str) -> Result<Tuple4> {
    let digits: Vec<usize> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(
        || Error::Parse(format!("invalid tuple key '{s}'")),
    )?;
    let idx: [usize; 4] = digits.try_into().map_err(|_| Error::Parse(format!("invalid tuple key '{s}'")))?;
    Tuple4::from_array(idx)
}

#[derive(Serialize, Deserialize)]
struct ForcedJson {
    tuple: [usize; 4],
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ConstraintJson {
    exponents: BTreeMap<String, i64>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct DescriptionJson {
    n: usize,
    forced: Vec<ForcedJson>,
    free: Vec<[usize; 4]>,
    ghost: Vec<[usize; 4]>,
    constraints: Vec<ConstraintJson>,
}

impl Serialize for VirtualSpaceDescription {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DescriptionJson {
            n: self.n,
            forced: self.forced().map(|(t, v)| ForcedJson { tuple: t.indices(), value: v.to_string() }).collect(),
            free: self.free().map(Tuple4::indices).collect(),
            ghost: self.ghosts().map(Tuple4::indices).collect(),
            constraints: self
                .constraints
                .iter()
                .map(|c| ConstraintJson {
                    exponents: c.exponents.iter().map(|(t, e)| (tuple_key(t), *e)).collect(),
                    value: c.value.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VirtualSpaceDescription {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = DescriptionJson::deserialize(deserializer)?;
        let mut status = BTreeMap::new();
        for f in j.forced {
            let p: ProjectivePoint = f.value.parse().map_err(D::Error::custom)?;
            let v = Forced::of_point(&p).ok_or_else(|| D::Error::custom("forced value must be 0, 1 or inf"))?;
            status.insert(Tuple4::from_array(f.tuple).map_err(D::Error::custom)?, Status::Forced(v));
        }
        for t in j.free {
            let t = Tuple4::from_array(t).map_err(D::Error::custom)?;
            status.insert(t, Status::Free { ghost: false });
        }
        for t in j.ghost {
            let t = Tuple4::from_array(t).map_err(D::Error::custom)?;
            status.insert(t, Status::Free { ghost: true });
        }
        let constraints = j
            .constraints
            .into_iter()
            .map(|c| {
                let exponents = c
                    .exponents
                    .iter()
                    .map(|(k, e)| Ok((parse_tuple_key(k)?, *e)))
                    .collect::<Result<_>>()
                    .map_err(D::Error::custom)?;
                let value = c.value.parse().map_err(D::Error::custom)?;
                Ok(Constraint { exponents, value })
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(Self { n: j.n, status, constraints })
    }
}

/// Exponents of `w_ijkl = P_ik P_jl / (P_il P_jk)` over the pairs; `t` sorted.
fn exponent_vector(n: usize, t: &Tuple4) -> Vec<BigInt> {
    let [i, j, k, l] = t.indices();
    let mut v = vec![BigInt::zero(); all_pairs(n).len()];
    v[pair_index(n, i, k)] += 1;
    v[pair_index(n, j, l)] += 1;
    v[pair_index(n, i, l)] -= 1;
    v[pair_index(n, j, k)] -= 1;
    v
}

/// `P_x P_y = ± P_u P_v` from every three-term relation with exactly one vanishing product.
fn binomial_relations(sig: &Signature) -> Vec<Vec<BigInt>> {
    let n = sig.n();
    let mut out = Vec::new();
    for [a, b, c, d] in quadruples(n) {
        let products = [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]];
        let dead: Vec<bool> = products.iter().map(|p| p.iter().any(|&(x, y)| sig.vanishes(x, y))).collect();
        if dead.iter().filter(|&&x| x).count() != 1 {
            continue;
        }
        let live: Vec<_> = products.iter().zip(&dead).filter(|(_, &d)| !d).map(|(p, _)| p).collect();
        let mut v = vec![BigInt::zero(); all_pairs(n).len()];
        for &(x, y) in live[0] {
            v[pair_index(n, x, y)] += 1;
        }
        for &(x, y) in live[1] {
            v[pair_index(n, x, y)] -= 1;
        }
        out.push(v);
    }
    out
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("exponents stay small")
}

/// `Π w^v` on a plane of the stratum, for `v` supported on strongly admissible tuples.
fn monomial_sign(pv: &PluckerVector, tuples: &[Tuple4], v: &[BigInt]) -> bool {
    let mut acc = GaussianRational::one();
    for (t, e) in tuples.iter().zip(v) {
        if e.is_zero() {
            continue;
        }
        let w = evaluate_cross_ratio(pv, t).point().and_then(|p| p.as_affine().cloned()).expect("strong tuples are finite");
        acc *= &w.pow(to_i64(e)).expect("strong tuples are nonzero");
    }
    if acc.is_one() {
        false
    } else if acc == -GaussianRational::one() {
        true
    } else {
        unreachable!("binomial relations force Π w^v = ±1, got {acc}")
    }
}

/// Forced values from the classification of each cross-ratio, plus constraints
/// among the free coordinates modulo those holding identically on the main stratum.
pub fn virtual_space_of(sig: &Signature) -> Result<VirtualSpaceDescription> {
    let ps = parallel_structure_of(sig).ok_or(Error::Inadmissible)?;
    let n = sig.n();
    let tuples = Tuple4::all_sorted(n);
    let classes: Vec<Classification> = tuples.iter().map(|t| classify_unchecked(sig, t)).collect();
    let status: BTreeMap<Tuple4, Status> = tuples
        .iter()
        .zip(&classes)
        .map(|(t, c)| {
            let s = match c {
                Classification::Strong => Status::Free { ghost: false },
                Classification::Weak(v) => Status::Forced(*v),
                Classification::NonAdmissible => Status::Free { ghost: true },
            };
            (*t, s)
        })
        .collect();
    let free: Vec<Tuple4> = status.iter().filter(|(_, s)| matches!(s, Status::Free { .. })).map(|(t, _)| *t).collect();
    let free_pos = |t: &Tuple4| free.iter().position(|f| f == t).expect("free tuple");
    let exps: BTreeMap<Tuple4, Vec<BigInt>> = tuples.iter().map(|t| (*t, exponent_vector(n, t))).collect();

    let mut relations: Vec<TaggedRow> = Vec::new();

    // multiplicative relations among strong tuples coming from the binomials
    let strong: Vec<Tuple4> =
        tuples.iter().zip(&classes).filter(|(_, c)| **c == Classification::Strong).map(|(t, _)| *t).collect();
    if !strong.is_empty() {
        let witness = plucker_of(&witness_plane(&ps, 0));
        let mut columns: Vec<Vec<BigInt>> = strong.iter().map(|t| exps[t].clone()).collect();
        columns.extend(binomial_relations(sig));
        for k in integer_kernel(&columns) {
            let v = &k[..strong.len()];
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let negative = monomial_sign(&witness, &strong, v);
            let mut row = vec![BigInt::zero(); free.len()];
            for (t, e) in strong.iter().zip(v) {
                row[free_pos(t)] = e.clone();
            }
            relations.push(TaggedRow::new(row, negative));
        }
    }

    // identities of the main stratum whose other factors are forced to 1
    let one_or_free: Vec<Tuple4> = tuples
        .iter()
        .filter(|t| matches!(status[t], Status::Free { .. } | Status::Forced(Forced::One)))
        .copied()
        .collect();
    let columns: Vec<Vec<BigInt>> = one_or_free.iter().map(|t| exps[t].clone()).collect();
    for k in integer_kernel(&columns) {
        let mut row = vec![BigInt::zero(); free.len()];
        for (t, e) in one_or_free.iter().zip(&k) {
            if matches!(status[t], Status::Free { .. }) {
                row[free_pos(t)] = e.clone();
            }
        }
        relations.push(TaggedRow::new(row, false));
    }

    // quotient by the identities among free coordinates alone
    let columns: Vec<Vec<BigInt>> = free.iter().map(|t| exps[t].clone()).collect();
    let universal =
        hermite_rows(integer_kernel(&columns).into_iter().map(|k| TaggedRow::new(k, false)).collect());
    let reduce = |rows: Vec<TaggedRow>| -> Vec<TaggedRow> {
        rows.into_iter()
            .map(|mut r| {
                reduce_modulo(&mut r, &universal);
                r
            })
            .filter(|r| !r.is_zero())
            .collect()
    };
    let mut basis = reduce(hermite_rows(reduce(relations)));
    loop {
        let next = reduce(hermite_rows(basis.clone()));
        if next == basis {
            break;
        }
        basis = next;
    }

    let constraints = basis
        .into_iter()
        .map(|r| {
            let exponents = free
                .iter()
                .zip(&r.entries)
                .filter(|(_, e)| !e.is_zero())
                .map(|(t, e)| (*t, to_i64(e)))
                .collect();
            Constraint { exponents, value: if r.negative { -1 } else { 1 } }
        })
        .collect();
    Ok(VirtualSpaceDescription { n, status, constraints })
}

fn proj_pair(x: &CrossTuple, t: [usize; 4]) -> Option<(GaussianRational, GaussianRational)> {
    let t = Tuple4::from_array(t).ok()?;
    let p = x.get(&t)?.point()?;
    Some((p.first().clone(), p.second().clone()))
}

/// The homogenised relations among the five cross-ratios of every 5-subset.
pub fn closure_equations_hold(x: &CrossTuple) -> bool {
    let n = x.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    for e in d + 1..=n {
                        let coords = [[a, b, c, d], [a, b, c, e], [a, b, d, e], [a, c, d, e], [b, c, d, e]];
                        let Some(v) = coords.iter().map(|&t| proj_pair(x, t)).collect::<Option<Vec<_>>>() else {
                            return false;
                        };
                        if !five_point_equations(&v) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn five_point_equations(v: &[(GaussianRational, GaussianRational)]) -> bool {
    let [(c1, d1), (c2, d2), (c3, d3), (c4, d4), (c5, d5)] = [&v[0], &v[1], &v[2], &v[3], &v[4]];
    let m = |a: &GaussianRational, b: &GaussianRational, c: &GaussianRational| &(a * b) * c;
    let e1 = m(c1, d2, c3) == m(d1, c2, d3);
    let e2 = m(c4, &(d1 - c1), d2) == m(d4, &(d2 - c2), d1);
    let e3 = m(c5, &(d1 - c1), c2) == m(d5, &(d2 - c2), c1);
    let e4 = m(c5, d4, c3) == m(d5, c4, d3);
    e1 && e2 && e3 && e4
}

fn member_with(x: &CrossTuple, desc: &VirtualSpaceDescription) -> bool {
    for (t, s) in &desc.status {
        let Some(p) = x.get(t).and_then(CrossRatioValue::point) else {
            return false;
        };
        let ok = match s {
            Status::Forced(v) => *p == v.point(),
            Status::Free { ghost: false } => p.is_generic(),
            Status::Free { ghost: true } => true,
        };
        if !ok {
            return false;
        }
    }
    desc.constraints.iter().all(|c| c.holds(x)) && closure_equations_hold(x)
}

/// Membership of a point of `(CP¹)^N` in the virtual space of `sig`.
pub fn member_of_virtual(x: &CrossTuple, sig: &Signature) -> Result<bool> {
    if x.n() != sig.n() {
        return Err(Error::DimensionMismatch { expected: sig.n(), found: x.n() });
    }
    if x.values().values().any(|v| *v == CrossRatioValue::Undefined) {
        return Err(Error::IncompleteTuple);
    }
    Ok(member_with(x, &virtual_space_of(sig)?))
}

/// Values at the strongly admissible tuples, in tuple order.
pub fn project_strong(x: &CrossTuple, sig: &Signature) -> Result<Vec<ProjectivePoint>> {
    if !member_of_virtual(x, sig)? {
        return Err(Error::NotAMember);
    }
    let desc = virtual_space_of(sig)?;
    Ok(desc.strong().map(|t| x.get(t).and_then(CrossRatioValue::point).cloned().expect("member")).collect())
}

/// A point of the virtual space of `sig`: the limit of a witness plane perturbed along `t`.
pub fn sample_member<R: Rng>(sig: &Signature, rng: &mut R) -> Result<CrossTuple> {
    let ps = parallel_structure_of(sig).ok_or(Error::Inadmissible)?;
    loop {
        let family = perturbed_family(&witness_plane_with(&ps, rng), rng);
        let (limit_sig, tuple) = limit_parts(&family)?;
        let complete = tuple.values().values().all(|v| *v != CrossRatioValue::Undefined);
        if complete && limit_sig == *sig {
            return Ok(tuple);
        }
    }
}

/// Samples members of the virtual space of `outer` and tests them against `inner`.
/// Applies only when the polytope of `inner` is a proper face of that of `outer`.
pub fn check_containment(outer: &Signature, inner: &Signature, samples: usize, seed: u64) -> Result<bool> {
    if outer.n() != inner.n() {
        return Err(Error::DimensionMismatch { expected: outer.n(), found: inner.n() });
    }
    if !is_admissible(outer) || !is_admissible(inner) {
        return Err(Error::Inadmissible);
    }
    let outer_vertices = outer.nonvanishing().into_iter().collect();
    let inner_vertices = inner.nonvanishing().into_iter().collect();
    if !is_proper_face(outer.n(), &outer_vertices, &inner_vertices) {
        return Err(Error::NotApplicable(format!("P[{inner}] is not a proper face of P[{outer}]")));
    }
    let outer_desc = virtual_space_of(outer)?;
    let inner_desc = virtual_space_of(inner)?;
    let mut rng = seeded(seed);
    for _ in 0..samples {
        let x = sample_member(outer, &mut rng)?;
        if !member_with(&x, &outer_desc) || !member_with(&x, &inner_desc) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::w5;
    use crate::grassmann::{torus_act, Plane, TorusElement};

    fn sig(pairs: &[(usize, usize)]) -> Signature {
        Signature::new(5, pairs.iter().copied()).unwrap()
    }

    fn t(s: &str) -> Tuple4 {
        parse_tuple_key(s).unwrap()
    }

    fn constraint(pairs: &[(&str, i64)], value: i64) -> Constraint {
        Constraint { exponents: pairs.iter().map(|(k, e)| (t(k), *e)).collect(), value }
    }

    fn tuple(values: &[&str]) -> CrossTuple {
        let n = 5;
        let map = Tuple4::all_sorted(n).into_iter().zip(values).map(|(t, v)| (t, v.parse().unwrap())).collect();
        CrossTuple::new(n, map).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let pv = plucker_of(&w5());
        let moved = torus_act(&TorusElement::from_ints(&[2, -3, 5, 7, 1]).unwrap(), &pv).unwrap();
        assert!(same_orbit(&pv, &moved) && same_orbit_by_torus(&pv, &moved));
        let other = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (2, 1), (3, 1)]).unwrap();
        assert!(!same_orbit(&pv, &plucker_of(&other)));
        let fixed = PluckerVector::from_entries(5, [((1, 2), GaussianRational::one())]).unwrap();
        assert!(!same_orbit(&pv, &fixed));
    }

    #[test]
    fn main_stratum_is_unconstrained() {
        let desc = virtual_space_of(&Signature::empty(5)).unwrap();
        assert_eq!(desc.free().count(), 5);
        assert!(desc.constraints.is_empty());
        let desc6 = virtual_space_of(&Signature::empty(6)).unwrap();
        assert!(desc6.constraints.is_empty());
    }

    #[test]
    fn reciprocal_pair_on_13() {
        let desc = virtual_space_of(&sig(&[(1, 3)])).unwrap();
        let forced: Vec<_> = desc.forced().map(|(t, v)| (tuple_key(t), v)).collect();
        assert_eq!(
            forced,
            [("1234".into(), Forced::Zero), ("1235".into(), Forced::Zero), ("1345".into(), Forced::One)]
        );
        assert_eq!(desc.free().map(tuple_key).collect::<Vec<_>>(), ["1245", "2345"]);
        assert_eq!(desc.constraints, [constraint(&[("1245", 1), ("2345", 1)], 1)]);
    }

    #[test]
    fn ghost_equality_on_triangle() {
        let desc = virtual_space_of(&sig(&[(3, 4), (3, 5), (4, 5)])).unwrap();
        assert_eq!(desc.forced().filter(|(_, v)| *v == Forced::One).count(), 3);
        assert_eq!(desc.ghosts().map(tuple_key).collect::<Vec<_>>(), ["1345", "2345"]);
        assert_eq!(desc.constraints, [constraint(&[("1345", 1), ("2345", -1)], 1)]);
    }

    #[test]
    fn equality_on_12() {
        let desc = virtual_space_of(&sig(&[(1, 2)])).unwrap();
        assert_eq!(desc.constraints, [constraint(&[("1345", 1), ("2345", -1)], 1)]);
        let witness = Plane::from_ints(&[(1, 0), (2, 0), (1, 1), (1, 2), (1, 3)]).unwrap();
        let phi = embed_phi(&plucker_of(&witness));
        assert_eq!(phi.get(&t("1345")), phi.get(&t("2345")));
        assert!(member_of_virtual(&phi, &sig(&[(1, 2)])).unwrap());
    }

    #[test]
    fn fixed_point_is_everything() {
        let fixed = Signature::new(5, all_pairs(5).into_iter().filter(|&p| p != (1, 2))).unwrap();
        let desc = virtual_space_of(&fixed).unwrap();
        assert_eq!(desc.ghosts().count(), 5);
        assert!(desc.constraints.is_empty());
    }

    #[test]
    fn membership_examples() {
        let triangle = sig(&[(3, 4), (3, 5), (4, 5)]);
        assert!(member_of_virtual(&tuple(&["1", "1", "1", "1/2", "1/2"]), &triangle).unwrap());
        assert!(!member_of_virtual(&tuple(&["1", "1", "1", "1/2", "1/3"]), &triangle).unwrap());
        assert!(!member_of_virtual(&tuple(&["0", "0", "1", "1", "1"]), &sig(&[(1, 3)])).unwrap());
        assert!(member_of_virtual(&tuple(&["0", "0", "3", "1", "1/3"]), &sig(&[(1, 3)])).unwrap());
        assert!(member_of_virtual(&tuple(&["1/2", "1/2", "1", "1", "1"]), &sig(&[(4, 5)])).unwrap());
        let undefined = embed_phi(&PluckerVector::from_entries(5, [((1, 2), GaussianRational::one())]).unwrap());
        assert_eq!(member_of_virtual(&undefined, &sig(&[(4, 5)])), Err(Error::IncompleteTuple));
    }

    #[test]
    fn projections() {
        let phi = embed_phi(&plucker_of(&w5()));
        assert_eq!(project_strong(&phi, &Signature::empty(5)).unwrap().len(), 5);
        let x = tuple(&["0", "0", "3", "1", "1/3"]);
        let p = |s: &str| s.parse::<ProjectivePoint>().unwrap();
        assert_eq!(project_strong(&x, &sig(&[(1, 3)])).unwrap(), [p("3"), p("1/3")]);
        let fixed = Signature::new(5, all_pairs(5).into_iter().filter(|&p| p != (1, 2))).unwrap();
        assert!(project_strong(&x, &fixed).unwrap().is_empty());
        assert_eq!(project_strong(&phi, &sig(&[(1, 3)])), Err(Error::NotAMember));
    }

    #[test]
    fn containment_examples() {
        let zero_row_1 = Signature::new(5, (2..=5).map(|j| (1, j))).unwrap();
        assert_eq!(check_containment(&Signature::empty(5), &zero_row_1, 5, 1), Ok(true));
        let y1 = Signature::new(5, all_pairs(5).into_iter().filter(|&(i, _)| i != 1)).unwrap();
        assert_eq!(check_containment(&Signature::empty(5), &y1, 5, 2), Ok(true));
        assert!(matches!(check_containment(&Signature::empty(5), &sig(&[(1, 2)]), 5, 3), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn description_json() {
        let desc = virtual_space_of(&sig(&[(3, 4), (3, 5), (4, 5)])).unwrap();
        let text = serde_json::to_string(&desc).unwrap();
        assert!(text.contains(r#""constraints":[{"exponents":{"1345":1,"2345":-1},"value":"1"}]"#), "{text}");
        assert!(text.contains(r#"{"tuple":[1,2,3,4],"value":"1"}"#));
        assert_eq!(serde_json::from_str::<VirtualSpaceDescription>(&text).unwrap(), desc);
    }
}
