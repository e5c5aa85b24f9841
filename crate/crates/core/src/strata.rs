//! Strata of the Grassmannian indexed by vanishing patterns of Plücker coordinates.
//!
//! A pattern is realisable exactly when it comes from a set of zero rows plus a
//! partition of the remaining rows into parallel classes (at least two of them).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{all_pairs, plucker_of, sorted_pair, Pair, Plane, PluckerVector};
use crate::linalg::{nullspace, primitive_integer, RatMatrix};
use crate::sampling::{random_nonzero_scalar, random_scalar};
use crate::scalar::{GaussianRational, Rational};

pub const MIN_ENUMERATION_N: usize = 4;
pub const MAX_ENUMERATION_N: usize = 8;

/// The set of pairs `{i, j}` whose Plücker coordinate vanishes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignatureJson", into = "SignatureJson")]
pub struct Signature {
    n: usize,
    vanishing: BTreeSet<Pair>,
}

#[derive(Serialize, Deserialize)]
struct SignatureJson {
    n: usize,
    vanishing: Vec<[usize; 2]>,
}

impl TryFrom<SignatureJson> for Signature {
    type Error = Error;
    fn try_from(v: SignatureJson) -> Result<Self> {
        Signature::new(v.n, v.vanishing.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Signature> for SignatureJson {
    fn from(s: Signature) -> Self {
        SignatureJson { n: s.n, vanishing: s.vanishing.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl Signature {
    /// Pairs may be given in either order; they are stored sorted.
    pub fn new<I: IntoIterator<Item = Pair>>(n: usize, pairs: I) -> Result<Self> {
        let mut vanishing = BTreeSet::new();
        for (a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidPair(a, b));
            }
            vanishing.insert(sorted_pair(a, b));
        }
        if vanishing.len() == n * (n - 1) / 2 {
            return Err(Error::EverythingVanishes);
        }
        Ok(Self { n, vanishing })
    }

    /// The main stratum: nothing vanishes.
    pub fn empty(n: usize) -> Self {
        Self { n, vanishing: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vanishing(&self) -> &BTreeSet<Pair> {
        &self.vanishing
    }

    pub fn vanishes(&self, i: usize, j: usize) -> bool {
        i == j || self.vanishing.contains(&sorted_pair(i, j))
    }

    pub fn nonvanishing(&self) -> Vec<Pair> {
        all_pairs(self.n).into_iter().filter(|p| !self.vanishing.contains(p)).collect()
    }

    pub fn is_main(&self) -> bool {
        self.vanishing.is_empty()
    }
}

impl fmt::Display for Signature {
    /// `1,2;3,4`, or `-` for the main stratum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vanishing.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.vanishing.iter().map(|(a, b)| format!("{a},{b}")).collect();
        f.write_str(&parts.join(";"))
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature(n={}, {})", self.n, self)
    }
}

/// Parses the `"1,2;3,4"` flag syntax for a given `n`. Empty text or `-` is the main stratum.
pub fn parse_signature(n: usize, text: &str) -> Result<Signature> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Signature::empty(n));
    }
    let mut pairs = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part.split_once(',').ok_or_else(|| Error::Parse(format!("invalid pair '{part}'")))?;
        let a = a.trim().parse().map_err(|_| Error::Parse(format!("invalid index '{a}'")))?;
        let b = b.trim().parse().map_err(|_| Error::Parse(format!("invalid index '{b}'")))?;
        pairs.push((a, b));
    }
    Signature::new(n, pairs)
}

impl FromStr for Signature {
    type Err = Error;
    /// `n:pairs`, e.g. `5:1,2;3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected 'n:pairs', got '{s}'")))?;
        let n = n.trim().parse().map_err(|_| Error::Parse(format!("invalid n '{n}'")))?;
        parse_signature(n, rest)
    }
}

/// Zero rows plus a partition of the other indices into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParallelStructure {
    n: usize,
    zero_rows: BTreeSet<usize>,
    classes: Vec<Vec<usize>>,
}

impl ParallelStructure {
    /// Validates and canonicalises: classes sorted internally and by first element.
    pub fn new(n: usize, zero_rows: BTreeSet<usize>, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort();
        let mut seen = zero_rows.clone();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidStructure("empty class".into()));
            }
            for &i in class {
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
                if !seen.insert(i) {
                    return Err(Error::InvalidStructure(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(&z) = zero_rows.iter().find(|&&z| z == 0 || z > n) {
            return Err(Error::IndexOutOfRange { index: z, n });
        }
        if seen.len() != n {
            return Err(Error::InvalidStructure("classes and zero rows do not cover 1..=n".into()));
        }
        if classes.len() < 2 {
            return Err(Error::InvalidStructure("need at least two parallel classes".into()));
        }
        Ok(Self { n, zero_rows, classes })
    }

    /// All singletons: the main stratum.
    ///
    /// # Panics
    /// If `n < 2`.
    pub fn main(n: usize) -> Self {
        Self::new(n, BTreeSet::new(), (1..=n).map(|i| vec![i]).collect()).expect("n ≥ 2")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero_rows(&self) -> &BTreeSet<usize> {
        &self.zero_rows
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    fn class_of(&self, i: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&i))
    }

    /// Pairs meeting a zero row or lying inside one class.
    pub fn signature(&self) -> Signature {
        let vanishing = all_pairs(self.n).into_iter().filter(|&(i, j)| match (self.class_of(i), self.class_of(j)) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        });
        Signature::new(self.n, vanishing).expect("two classes leave a nonvanishing pair")
    }
}

/// Reads a signature as zero rows plus parallel classes, or `None` when the
/// pattern is not realisable by any plane.
pub fn parallel_structure_of(sig: &Signature) -> Option<ParallelStructure> {
    let n = sig.n();
    let zero_rows: BTreeSet<usize> =
        (1..=n).filter(|&i| (1..=n).all(|j| j == i || sig.vanishes(i, j))).collect();
    let rest: Vec<usize> = (1..=n).filter(|i| !zero_rows.contains(i)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in &rest {
        match classes.iter_mut().find(|c| sig.vanishes(c[0], i)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    // Transitivity: the relation must coincide with "same class".
    for (a, &i) in rest.iter().enumerate() {
        for &j in &rest[a + 1..] {
            let same = classes.iter().any(|c| c.contains(&i) && c.contains(&j));
            if same != sig.vanishes(i, j) {
                return None;
            }
        }
    }
    ParallelStructure::new(n, zero_rows, classes).ok()
}

pub fn is_admissible(sig: &Signature) -> bool {
    parallel_structure_of(sig).is_some()
}

pub fn signature_of(pv: &PluckerVector) -> Signature {
    let vanishing = pv.entries().filter(|(_, v)| v.is_zero()).map(|(p, _)| p);
    Signature::new(pv.n(), vanishing).expect("Plücker vectors are nonzero")
}

/// A plane realising `ps`: zero rows for `Z`, one random direction per class,
/// random nonzero multiples within a class. Resamples on accidental coincidences.
pub fn witness_plane(ps: &ParallelStructure, seed: u64) -> Plane {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    witness_plane_with(ps, &mut rng)
}

pub fn witness_plane_with<R: Rng>(ps: &ParallelStructure, rng: &mut R) -> Plane {
    let target = ps.signature();
    loop {
        let mut rows = vec![[GaussianRational::zero(), GaussianRational::zero()]; ps.n()];
        for class in ps.classes() {
            let dir = [random_scalar(rng, 9), random_scalar(rng, 9)];
            for &i in class {
                let m = random_nonzero_scalar(rng, 5);
                rows[i - 1] = [&dir[0] * &m, &dir[1] * &m];
            }
        }
        if let Ok(plane) = Plane::new(rows) {
            if signature_of(&plucker_of(&plane)) == target {
                return plane;
            }
        }
    }
}

/// All set partitions of `items`, blocks in order of first element.
fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for partition in set_partitions(rest) {
        let mut alone = vec![vec![first]];
        alone.extend(partition.iter().cloned());
        out.push(alone);
        for k in 0..partition.len() {
            let mut joined = partition.clone();
            joined[k].insert(0, first);
            out.push(joined);
        }
    }
    out
}

fn subsets_of_size(n: usize, size: usize) -> Vec<BTreeSet<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if left == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// Every parallel structure on `1..=n`, ordered like [`enumerate_strata`].
pub fn enumerate_parallel_structures(n: usize) -> Result<Vec<ParallelStructure>> {
    if !(MIN_ENUMERATION_N..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfRange(n, MIN_ENUMERATION_N, MAX_ENUMERATION_N));
    }
    let mut out = Vec::new();
    for z in 0..=(n - 2) {
        let mut level = Vec::new();
        for zero_rows in subsets_of_size(n, z) {
            let rest: Vec<usize> = (1..=n).filter(|i| !zero_rows.contains(i)).collect();
            for partition in set_partitions(&rest) {
                if partition.len() >= 2 {
                    level.push(ParallelStructure::new(n, zero_rows.clone(), partition).expect("valid by construction"));
                }
            }
        }
        level.sort_by_cached_key(|ps| ps.signature());
        out.extend(level);
    }
    Ok(out)
}

/// Every admissible signature on `1..=n`, ordered by number of zero rows and
/// then lexicographically by vanishing pairs.
pub fn enumerate_strata(n: usize) -> Result<Vec<Signature>> {
    Ok(enumerate_parallel_structures(n)?.iter().map(ParallelStructure::signature).collect())
}

/// Lattice of one-parameter subgroups fixing a stratum (diagonal included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerLattice {
    pub n: usize,
    pub basis: Vec<Vec<BigInt>>,
}

impl StabilizerLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Solutions of `u_i + u_j = λ` over every nonvanishing pair, with λ eliminated.
pub fn stabilizer_lattice(sig: &Signature) -> Result<StabilizerLattice> {
    if !is_admissible(sig) {
        return Err(Error::Inadmissible);
    }
    let n = sig.n();
    // unknowns u_1..u_n, λ
    let rows: RatMatrix = sig
        .nonvanishing()
        .into_iter()
        .map(|(i, j)| {
            let mut row = vec![Rational::from_integer(0.into()); n + 1];
            row[i - 1] = Rational::from_integer(1.into());
            row[j - 1] = Rational::from_integer(1.into());
            row[n] = Rational::from_integer((-1).into());
            row
        })
        .collect();
    let basis = nullspace(&rows, n + 1).into_iter().map(|v| primitive_integer(&v[..n])).collect();
    Ok(StabilizerLattice { n, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::w5;

    fn sig(n: usize, pairs: &[(usize, usize)]) -> Signature {
        Signature::new(n, pairs.iter().copied()).unwrap()
    }

    fn classes(n: usize, z: &[usize], cls: &[&[usize]]) -> ParallelStructure {
        ParallelStructure::new(n, z.iter().copied().collect(), cls.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn signature_examples() {
        assert!(signature_of(&plucker_of(&w5())).is_main());
        let fixed = Plane::from_ints(&[(1, 0), (0, 1), (0, 0), (0, 0), (0, 0)]).unwrap();
        let s = signature_of(&plucker_of(&fixed));
        assert_eq!(s.nonvanishing(), vec![(1, 2)]);
        let p = Plane::from_ints(&[(1, 0), (0, 1), (1, 1), (1, 2), (1, 2)]).unwrap();
        assert_eq!(signature_of(&plucker_of(&p)), sig(5, &[(4, 5)]));
    }

    #[test]
    fn structure_examples() {
        assert_eq!(parallel_structure_of(&sig(5, &[(1, 2), (1, 3)])), None);
        let ps = parallel_structure_of(&sig(5, &[(1, 2), (1, 3), (2, 3)])).unwrap();
        assert!(ps.zero_rows().is_empty());
        assert_eq!(ps.classes(), &[vec![1, 2, 3], vec![4], vec![5]]);
        let main = parallel_structure_of(&Signature::empty(5)).unwrap();
        assert_eq!(main.classes().len(), 5);
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&sig(5, &[(1, 2)])));
        assert!(!is_admissible(&sig(5, &[(1, 2), (1, 3)])));
        assert_eq!(Signature::new(5, all_pairs(5)), Err(Error::EverythingVanishes));
        // one class only: rows all parallel, rank 1
        let all_but_one: Vec<Pair> = all_pairs(4).into_iter().filter(|&p| p != (1, 2)).collect();
        assert!(is_admissible(&sig(4, &all_but_one)));
        assert!(!is_admissible(&sig(4, &[(1, 2), (2, 3)])));
        assert!(is_admissible(&sig(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])));
    }

    #[test]
    fn witness_examples() {
        let ps = classes(5, &[], &[&[1, 2], &[3, 4, 5]]);
        let w = witness_plane(&ps, 1);
        assert_eq!(signature_of(&plucker_of(&w)), sig(5, &[(1, 2), (3, 4), (3, 5), (4, 5)]));
        let main = classes(5, &[], &[&[1], &[2], &[3], &[4], &[5]]);
        assert!(signature_of(&plucker_of(&witness_plane(&main, 2))).is_main());
        let z = classes(5, &[1], &[&[2], &[3], &[4, 5]]);
        let w = witness_plane(&z, 3);
        assert!(w.row(1)[0].is_zero() && w.row(1)[1].is_zero());
        assert_eq!(signature_of(&plucker_of(&w)), sig(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (4, 5)]));
    }

    fn bell(k: usize) -> usize {
        // Bell triangle
        let mut row = vec![1usize];
        for _ in 0..k {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0]
    }

    fn census_oracle(n: usize) -> usize {
        (0..=n - 2).map(|z| crate::grassmann::binomial(n, z) * (bell(n - z) - 1)).sum()
    }

    #[test]
    fn census_matches_partition_count() {
        assert_eq!(census_oracle(4), 36);
        assert_eq!(census_oracle(5), 171);
        assert_eq!(enumerate_strata(4).unwrap().len(), 36);
        assert_eq!(enumerate_strata(5).unwrap().len(), 171);
        assert_eq!(enumerate_strata(6).unwrap().len(), census_oracle(6));
        for n in 4..=6 {
            let list = enumerate_strata(n).unwrap();
            assert!(list.contains(&Signature::empty(n)));
            let unique: BTreeSet<_> = list.iter().collect();
            assert_eq!(unique.len(), list.len());
            assert!(list.iter().all(is_admissible));
        }
        assert_eq!(enumerate_strata(3), Err(Error::OutOfRange(3, 4, 8)));
        assert!(enumerate_strata(9).is_err());
    }

    #[test]
    fn enumeration_is_complete_for_n4() {
        // brute force over all 2^6 subsets of pairs
        let pairs = all_pairs(4);
        let mut admissible = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let chosen = pairs.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, p)| *p);
            if let Ok(s) = Signature::new(4, chosen) {
                if is_admissible(&s) {
                    admissible.insert(s);
                }
            }
        }
        let listed: BTreeSet<_> = enumerate_strata(4).unwrap().into_iter().collect();
        assert_eq!(admissible, listed);
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_lattice(&Signature::empty(5)).unwrap().rank(), 1);
        let two = classes(5, &[], &[&[1, 2], &[3, 4, 5]]).signature();
        assert_eq!(stabilizer_lattice(&two).unwrap().rank(), 2);
        let fixed = sig(5, &all_pairs(5).into_iter().filter(|&p| p != (1, 2)).collect::<Vec<_>>());
        assert_eq!(stabilizer_lattice(&fixed).unwrap().rank(), 5);
        assert_eq!(stabilizer_lattice(&sig(5, &[(1, 2), (1, 3)])), Err(Error::Inadmissible));
    }

    #[test]
    fn signature_text() {
        let s = parse_signature(5, "1,2; 4,3").unwrap();
        assert_eq!(s, sig(5, &[(1, 2), (3, 4)]));
        assert_eq!(s.to_string(), "1,2;3,4");
        assert_eq!("5:1,2;3,4".parse::<Signature>().unwrap(), s);
        assert!(parse_signature(5, "1;2").is_err());
        assert!(parse_signature(5, "1,6").is_err());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":5,"vanishing":[[1,2],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Signature>(&json).unwrap(), s);
    }
}
