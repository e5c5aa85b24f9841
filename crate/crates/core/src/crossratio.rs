//! Cross-ratios `w_ijkl = P_ik P_jl / (P_il P_jk)` on Plücker vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grassmann::{binomial, pair_index, quadruples, PluckerVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{GaussianRational, ProjectivePoint, Rational};
use crate::strata::{is_admissible, Signature};

/// An ordered quadruple of distinct indices. Evaluation honours the given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple4([usize; 4]);

impl Tuple4 {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Result<Self> {
        let idx = [i, j, k, l];
        if idx.contains(&0) {
            return Err(Error::IndexOutOfRange { index: 0, n: 0 });
        }
        for a in 0..4 {
            if idx[a + 1..].contains(&idx[a]) {
                return Err(Error::RepeatedIndex);
            }
        }
        Ok(Self(idx))
    }

    pub fn from_array(idx: [usize; 4]) -> Result<Self> {
        Self::new(idx[0], idx[1], idx[2], idx[3])
    }

    pub fn indices(&self) -> [usize; 4] {
        self.0
    }

    pub fn sorted(&self) -> Self {
        let mut idx = self.0;
        idx.sort_unstable();
        Self(idx)
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn max_index(&self) -> usize {
        *self.0.iter().max().expect("four entries")
    }

    /// All sorted quadruples of `[1, n]` in lexicographic order.
    pub fn all_sorted(n: usize) -> Vec<Self> {
        quadruples(n).map(Self).collect()
    }
}

impl fmt::Display for Tuple4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.0;
        write!(f, "({i},{j},{k},{l})")
    }
}

/// A cross-ratio value: a point of the projective line, or `0/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CrossRatioValue {
    Defined(ProjectivePoint),
    Undefined,
}

impl CrossRatioValue {
    pub fn point(&self) -> Option<&ProjectivePoint> {
        match self {
            Self::Defined(p) => Some(p),
            Self::Undefined => None,
        }
    }

    pub fn is_generic(&self) -> bool {
        self.point().is_some_and(ProjectivePoint::is_generic)
    }
}

impl fmt::Display for CrossRatioValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Defined(p) => write!(f, "{p}"),
            Self::Undefined => f.write_str("undef"),
        }
    }
}

impl FromStr for CrossRatioValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "undef" => Ok(Self::Undefined),
            other => Ok(Self::Defined(other.parse()?)),
        }
    }
}

/// Forced value of a weakly admissible cross-ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Forced {
    Zero,
    One,
    Infinity,
}

impl Forced {
    pub fn point(self) -> ProjectivePoint {
        match self {
            Self::Zero => ProjectivePoint::zero(),
            Self::One => ProjectivePoint::one(),
            Self::Infinity => ProjectivePoint::infinity(),
        }
    }

    pub fn of_point(p: &ProjectivePoint) -> Option<Self> {
        if p.is_infinity() {
            Some(Self::Infinity)
        } else if p.is_zero() {
            Some(Self::Zero)
        } else if p.is_one() {
            Some(Self::One)
        } else {
            None
        }
    }
}

impl fmt::Display for Forced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::Infinity => "inf",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Strong,
    Weak(Forced),
    NonAdmissible,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Strong => f.write_str("strong"),
            Self::Weak(v) => write!(f, "weak({v})"),
            Self::NonAdmissible => f.write_str("non-admissible"),
        }
    }
}

/// The values of all `C(n,4)` sorted cross-ratios.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossTuple {
    n: usize,
    values: BTreeMap<Tuple4, CrossRatioValue>,
}

impl CrossTuple {
    pub fn new(n: usize, values: BTreeMap<Tuple4, CrossRatioValue>) -> Result<Self> {
        let complete = values.len() == binomial(n, 4)
            && values.keys().all(|t| t.is_sorted() && t.max_index() <= n);
        if !complete {
            return Err(Error::IncompleteTuple);
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<Tuple4, CrossRatioValue> {
        &self.values
    }

    /// Value at a sorted quadruple.
    pub fn get(&self, t: &Tuple4) -> Option<&CrossRatioValue> {
        self.values.get(t)
    }

    /// Values in lexicographic tuple order.
    pub fn ordered_values(&self) -> Vec<&CrossRatioValue> {
        self.values.values().collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CrossEntryJson {
    tuple: [usize; 4],
    value: String,
}

impl Serialize for CrossTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.values.iter().map(|(t, v)| CrossEntryJson { tuple: t.indices(), value: v.to_string() }),
        )
    }
}

impl<'de> Deserialize<'de> for CrossTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let entries: Vec<CrossEntryJson> = Vec::deserialize(deserializer)?;
        let n = entries.iter().flat_map(|e| e.tuple).max().unwrap_or(0);
        let mut values = BTreeMap::new();
        for e in entries {
            let t = Tuple4::from_array(e.tuple).map_err(D::Error::custom)?;
            values.insert(t.sorted(), e.value.parse().map_err(D::Error::custom)?);
        }
        CrossTuple::new(n, values).map_err(D::Error::custom)
    }
}

/// `[P_ik P_jl : P_il P_jk]`, or `Undefined` when both products vanish.
///
/// # Panics
/// If an index exceeds `pv.n()`.
pub fn evaluate_cross_ratio(pv: &PluckerVector, t: &Tuple4) -> CrossRatioValue {
    let [i, j, k, l] = t.indices();
    let num = &pv.get(i, k) * &pv.get(j, l);
    let den = &pv.get(i, l) * &pv.get(j, k);
    match ProjectivePoint::new(num, den) {
        Ok(p) => CrossRatioValue::Defined(p),
        Err(_) => CrossRatioValue::Undefined,
    }
}

pub(crate) fn classify_unchecked(sig: &Signature, t: &Tuple4) -> Classification {
    let [i, j, k, l] = t.indices();
    let v = |a, b| sig.vanishes(a, b);
    let num = v(i, k) || v(j, l);
    let den = v(i, l) || v(j, k);
    match (num, den) {
        (true, true) => Classification::NonAdmissible,
        (true, false) => Classification::Weak(Forced::Zero),
        (false, true) => Classification::Weak(Forced::Infinity),
        _ if v(i, j) || v(k, l) => Classification::Weak(Forced::One),
        _ => Classification::Strong,
    }
}

/// Class of `w_t` on the stratum `sig`, read off from which Plücker coordinates vanish.
pub fn classify_cross_ratio(sig: &Signature, t: &Tuple4) -> Result<Classification> {
    if !is_admissible(sig) {
        return Err(Error::Inadmissible);
    }
    if t.max_index() > sig.n() {
        return Err(Error::IndexOutOfRange { index: t.max_index(), n: sig.n() });
    }
    Ok(classify_unchecked(sig, t))
}

/// `z_l = w_{1,2,3,l}` for `l = 4..n`.
pub fn z_coordinates(pv: &PluckerVector) -> Result<Vec<GaussianRational>> {
    if pv.coords().iter().any(GaussianRational::is_zero) {
        return Err(Error::NotMainStratum);
    }
    (4..=pv.n())
        .map(|l| {
            let t = Tuple4::new(1, 2, 3, l)?;
            match evaluate_cross_ratio(pv, &t) {
                CrossRatioValue::Defined(p) => p.as_affine().cloned().ok_or(Error::NotMainStratum),
                CrossRatioValue::Undefined => Err(Error::NotMainStratum),
            }
        })
        .collect()
}

fn validate_z(z: &[GaussianRational]) -> Result<()> {
    for (a, za) in z.iter().enumerate() {
        if za.is_zero() || za.is_one() {
            return Err(Error::MalformedZ(format!("z_{} = {za}", a + 4)));
        }
        if z[a + 1..].contains(za) {
            return Err(Error::MalformedZ(format!("z_{} repeats", a + 4)));
        }
    }
    Ok(())
}

/// Closed-form value of `w_t` on the main stratum in terms of `z = (z_4, …, z_n)`.
pub fn cross_ratio_from_z(t: &Tuple4, z: &[GaussianRational]) -> Result<ProjectivePoint> {
    validate_z(z)?;
    let n = z.len() + 3;
    if !t.is_sorted() {
        return Err(Error::InvalidStructure(format!("tuple {t} is not sorted")));
    }
    if t.max_index() > n {
        return Err(Error::IndexOutOfRange { index: t.max_index(), n });
    }
    let zz = |i: usize| z[i - 4].clone();
    let one = GaussianRational::one();
    let om = |i: usize| &one - &z[i - 4];
    let diff = |a: usize, b: usize| &z[a - 4] - &z[b - 4];
    let (num, den) = match t.indices() {
        [1, 2, 3, l] => (zz(l), one.clone()),
        [1, 2, i, j] => (zz(j), zz(i)),
        [1, 3, i, j] => (om(j), om(i)),
        [2, 3, i, j] => (&zz(i) * &om(j), &zz(j) * &om(i)),
        [1, i, j, k] => (diff(i, k), diff(i, j)),
        [2, i, j, k] => (&zz(j) * &diff(i, k), &zz(k) * &diff(i, j)),
        [3, i, j, k] => (&om(j) * &diff(i, k), &om(k) * &diff(i, j)),
        [i, j, k, l] => (&diff(i, k) * &diff(j, l), &diff(i, l) * &diff(j, k)),
    };
    ProjectivePoint::new(num, den)
}

/// `Φ(pv)`: every sorted cross-ratio.
pub fn embed_phi(pv: &PluckerVector) -> CrossTuple {
    let values = Tuple4::all_sorted(pv.n()).into_iter().map(|t| (t, evaluate_cross_ratio(pv, &t))).collect();
    CrossTuple { n: pv.n(), values }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `w_ijkl = 1 / w_jikl`
    Reciprocal,
    /// `1 - w_ijkl = w_ikjl`
    Complement,
    /// `w_mjkl = (w_ijmk - 1) / (w_ijmk - w_ijlk)`
    Transfer,
    /// `w_ijkl · w_ijkm⁻¹ · w_ijlm = 1`
    Cocycle,
    /// The Plücker relation the complement identity reduces to after clearing denominators.
    PluckerForm,
}

impl Identity {
    pub const ALL: [Identity; 5] =
        [Self::Reciprocal, Self::Complement, Self::Transfer, Self::Cocycle, Self::PluckerForm];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Reciprocal => "reciprocal",
            Self::Complement => "complement",
            Self::Transfer => "transfer",
            Self::Cocycle => "cocycle",
            Self::PluckerForm => "plucker-form",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub checked: usize,
    pub failures: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures.is_empty())
    }

    pub fn outcome(&self, identity: Identity) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| o.identity == identity)
    }
}

fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 1..=n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl std::ops::Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl std::ops::Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl std::ops::Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

/// Checks the four cross-ratio identities over every ordered choice of distinct indices.
pub fn identity_suite(pv: &PluckerVector) -> Result<IdentityReport> {
    if pv.coords().iter().any(GaussianRational::is_zero) {
        return Err(Error::NotMainStratum);
    }
    let n = pv.n();
    // Cross-ratios ignore a common factor, so clear denominators and work in Z[i].
    let lcm = pv.coords().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re.denom()).lcm(x.im.denom()));
    let scale = Rational::from_integer(lcm);
    let coords: Vec<GaussInt> = pv
        .coords()
        .iter()
        .map(|x| GaussInt { re: (&x.re * &scale).to_integer(), im: (&x.im * &scale).to_integer() })
        .collect();
    let p = |a: usize, b: usize| -> GaussInt {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let v = coords[pair_index(n, lo, hi)].clone();
        if a < b {
            v
        } else {
            -v
        }
    };
    let slot = |i: usize, j: usize, k: usize, l: usize| ((i * (n + 1) + j) * (n + 1) + k) * (n + 1) + l;
    // w_ijkl = num / den
    let mut num = vec![GaussInt::default(); (n + 1).pow(4)];
    let mut den = num.clone();
    for idx in arrangements(n, 4) {
        let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
        num[slot(i, j, k, l)] = &p(i, k) * &p(j, l);
        den[slot(i, j, k, l)] = &p(i, l) * &p(j, k);
    }
    let nd = |i, j, k, l| (&num[slot(i, j, k, l)], &den[slot(i, j, k, l)]);
    let mut outcomes = Vec::new();
    let quads = arrangements(n, 4);
    let quints = arrangements(n, 5);
    for identity in Identity::ALL {
        let family = match identity {
            Identity::Transfer | Identity::Cocycle => &quints,
            _ => &quads,
        };
        let mut failures = Vec::new();
        for idx in family {
            let holds = match identity {
                Identity::Reciprocal => {
                    let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
                    let ((n1, d1), (n2, d2)) = (nd(i, j, k, l), nd(j, i, k, l));
                    n1 * n2 == d1 * d2
                }
                Identity::Complement => {
                    let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
                    let ((n1, d1), (n2, d2)) = (nd(i, j, k, l), nd(i, k, j, l));
                    &(d1 - n1) * d2 == n2 * d1
                }
                Identity::Transfer => {
                    // w_mjkl = (a - 1) / (a - b) with a = w_ijmk, b = w_ijlk
                    let [i, j, k, l, m] = [idx[0], idx[1], idx[2], idx[3], idx[4]];
                    let ((na, da), (nb, db), (nc, dc)) = (nd(i, j, m, k), nd(i, j, l, k), nd(m, j, k, l));
                    let gap = &(na * db) - &(nb * da);
                    !gap.is_zero() && nc * &gap == &(dc * &(na - da)) * db
                }
                Identity::Cocycle => {
                    let [i, j, k, l, m] = [idx[0], idx[1], idx[2], idx[3], idx[4]];
                    let ((n1, d1), (n2, d2), (n3, d3)) = (nd(i, j, k, l), nd(i, j, k, m), nd(i, j, l, m));
                    &(n1 * n3) * d2 == &(d1 * d3) * n2
                }
                Identity::PluckerForm => {
                    let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
                    let r = &(&p(i, j) * &p(k, l)) - &(&(&p(i, k) * &p(j, l)) - &(&p(i, l) * &p(j, k)));
                    r.is_zero()
                }
            };
            if !holds {
                failures.push(idx.clone());
            }
        }
        outcomes.push(IdentityOutcome { identity, checked: family.len(), failures });
    }
    Ok(IdentityReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::w5;
    use crate::grassmann::{plucker_of, Plane};
    use crate::scalar::{rat, GaussianRational as G};

    fn t(i: usize, j: usize, k: usize, l: usize) -> Tuple4 {
        Tuple4::new(i, j, k, l).unwrap()
    }

    fn val(s: &str) -> CrossRatioValue {
        s.parse().unwrap()
    }

    fn fixed_point() -> PluckerVector {
        PluckerVector::from_entries(5, [((1, 2), G::one())]).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let pv = plucker_of(&w5());
        assert_eq!(evaluate_cross_ratio(&pv, &t(1, 2, 3, 4)), val("1/2"));
        assert_eq!(evaluate_cross_ratio(&pv, &t(2, 1, 3, 4)), val("2"));
        assert_eq!(evaluate_cross_ratio(&fixed_point(), &t(1, 2, 3, 4)), CrossRatioValue::Undefined);
    }

    #[test]
    fn classification_examples() {
        let sig = Signature::new(5, [(3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(classify_cross_ratio(&sig, &t(1, 2, 3, 4)), Ok(Classification::Weak(Forced::One)));
        assert_eq!(classify_cross_ratio(&sig, &t(1, 3, 4, 5)), Ok(Classification::NonAdmissible));
        assert_eq!(classify_cross_ratio(&sig, &t(2, 3, 4, 5)), Ok(Classification::NonAdmissible));
        for q in Tuple4::all_sorted(5) {
            assert_eq!(classify_cross_ratio(&Signature::empty(5), &q), Ok(Classification::Strong));
        }
        let bad = Signature::new(5, [(1, 2), (1, 3)]).unwrap();
        assert_eq!(classify_cross_ratio(&bad, &t(1, 2, 3, 4)), Err(Error::Inadmissible));
    }

    #[test]
    fn z_examples() {
        let g = |a, b| G::from_ratio(a, b);
        assert_eq!(z_coordinates(&plucker_of(&w5())).unwrap(), vec![g(1, 2), g(1, 3)]);
        let four = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (1, 2)]).unwrap();
        assert_eq!(z_coordinates(&plucker_of(&four)).unwrap(), vec![g(1, 2)]);
        let other = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(z_coordinates(&plucker_of(&other)).unwrap(), vec![g(2, 1), g(3, 1)]);
        assert_eq!(z_coordinates(&fixed_point()), Err(Error::NotMainStratum));
    }

    #[test]
    fn formula_examples() {
        let z = vec![G::from_ratio(1, 2), G::from_ratio(1, 3)];
        let p = |s: &str| s.parse::<ProjectivePoint>().unwrap();
        assert_eq!(cross_ratio_from_z(&t(1, 2, 4, 5), &z), Ok(p("2/3")));
        assert_eq!(cross_ratio_from_z(&t(2, 3, 4, 5), &z), Ok(p("2")));
        assert_eq!(cross_ratio_from_z(&t(1, 2, 3, 5), &z), Ok(p("1/3")));
        let bad = vec![G::from_ratio(1, 2), G::from_ratio(1, 2)];
        assert!(matches!(cross_ratio_from_z(&t(1, 2, 3, 4), &bad), Err(Error::MalformedZ(_))));
        assert!(matches!(cross_ratio_from_z(&t(1, 2, 3, 4), &[G::one()]), Err(Error::MalformedZ(_))));
    }

    #[test]
    fn formulas_match_direct_evaluation() {
        let plane = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 7), (-1, 4)]).unwrap();
        let pv = plucker_of(&plane);
        let z = z_coordinates(&pv).unwrap();
        for q in Tuple4::all_sorted(7) {
            let direct = evaluate_cross_ratio(&pv, &q);
            assert_eq!(CrossRatioValue::Defined(cross_ratio_from_z(&q, &z).unwrap()), direct, "{q}");
        }
    }

    #[test]
    fn phi_examples() {
        let four = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (1, 2)]).unwrap();
        assert_eq!(embed_phi(&plucker_of(&four)).values().len(), 1);
        let phi = embed_phi(&plucker_of(&w5()));
        let expected: Vec<CrossRatioValue> = ["1/2", "1/3", "2/3", "4/3", "2"].into_iter().map(val).collect();
        assert_eq!(phi.ordered_values(), expected.iter().collect::<Vec<_>>());
        assert!(embed_phi(&fixed_point()).values().values().all(|v| *v == CrossRatioValue::Undefined));
    }

    #[test]
    fn phi_json_round_trip() {
        let phi = embed_phi(&plucker_of(&w5()));
        let text = serde_json::to_string(&phi).unwrap();
        assert!(text.starts_with(r#"[{"tuple":[1,2,3,4],"value":"1/2"}"#));
        assert_eq!(serde_json::from_str::<CrossTuple>(&text).unwrap(), phi);
        let fixed = embed_phi(&fixed_point());
        let text = serde_json::to_string(&fixed).unwrap();
        assert!(text.contains(r#""value":"undef""#));
        assert_eq!(serde_json::from_str::<CrossTuple>(&text).unwrap(), fixed);
    }

    #[test]
    fn identities_on_w5() {
        let pv = plucker_of(&w5());
        let report = identity_suite(&pv).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.outcome(Identity::Cocycle).unwrap().checked, 120);
        let w = |i, j, k, l| evaluate_cross_ratio(&pv, &t(i, j, k, l));
        // (1/2)·3·(2/3) = 1
        assert_eq!(w(1, 2, 3, 5), val("1/3"));
        assert_eq!(w(1, 2, 4, 5), val("2/3"));
        assert_eq!(w(1, 3, 2, 4), val("1/2"));
        assert_eq!(identity_suite(&fixed_point()), Err(Error::NotMainStratum));
    }

    #[test]
    fn printed_complement_sign_fails() {
        // 1 - w_ijkl = -w_ikjl never holds under antisymmetric access
        let pv = plucker_of(&w5());
        let lhs = &G::one() - &G::from_ratio(1, 2);
        let w1324 = evaluate_cross_ratio(&pv, &t(1, 3, 2, 4)).point().unwrap().as_affine().unwrap().clone();
        assert_ne!(lhs, -w1324);
        assert_eq!(lhs, G::from_rational(rat(1, 2)));
    }
}
