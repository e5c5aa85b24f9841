//! Small exact linear algebra: rational row reduction, integer lattices, and a
//! Bland-rule simplex for feasibility questions about tiny polytopes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of `{x : m·x = 0}` over the rationals.
pub fn nullspace(m: &RatMatrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[row][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// An integer row carrying a multiplicative sign tag; row operations update
/// the tag the way they update the value of `Π w^row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedRow {
    pub entries: Vec<BigInt>,
    /// `true` when the associated product equals `-1`.
    pub negative: bool,
}

impl TaggedRow {
    pub fn new(entries: Vec<BigInt>, negative: bool) -> Self {
        Self { entries, negative }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `self -= k · other`
    fn sub_multiple(&mut self, k: &BigInt, other: &TaggedRow) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a -= k * b;
        }
        if other.negative && k.is_odd() {
            self.negative = !self.negative;
        }
    }

    fn negate(&mut self) {
        for a in self.entries.iter_mut() {
            *a = -a.clone();
        }
    }
}

/// Row Hermite normal form of the lattice spanned by `rows` (zero rows dropped).
/// Pivots are positive and entries above each pivot are reduced into `[0, pivot)`.
pub fn hermite_rows(mut rows: Vec<TaggedRow>) -> Vec<TaggedRow> {
    let cols = rows.first().map_or(0, |r| r.entries.len());
    let mut r = 0;
    for c in 0..cols {
        // Euclid on column c among rows r..
        loop {
            let candidates: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i].entries[c].is_zero()).collect();
            if candidates.is_empty() {
                break;
            }
            let p = *candidates.iter().min_by_key(|&&i| rows[i].entries[c].abs()).unwrap();
            rows.swap(r, p);
            let mut done = true;
            for i in (r + 1)..rows.len() {
                if rows[i].entries[c].is_zero() {
                    continue;
                }
                let q = rows[i].entries[c].div_floor(&rows[r].entries[c]);
                let pivot_row = rows[r].clone();
                rows[i].sub_multiple(&q, &pivot_row);
                if !rows[i].entries[c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r].entries[c].is_zero() {
            if rows[r].entries[c].is_negative() {
                rows[r].negate();
            }
            r += 1;
        }
    }
    rows.truncate(r);
    // reduce entries above pivots
    for i in 0..rows.len() {
        let pc = rows[i].entries.iter().position(|x| !x.is_zero()).unwrap();
        for k in 0..i {
            let q = rows[k].entries[pc].div_floor(&rows[i].entries[pc]);
            if !q.is_zero() {
                let pivot_row = rows[i].clone();
                rows[k].sub_multiple(&q, &pivot_row);
            }
        }
    }
    rows.retain(|r| !r.is_zero());
    rows
}

/// Reduces `row` against a Hermite basis so each pivot entry lands in `[0, pivot)`.
pub fn reduce_modulo(row: &mut TaggedRow, basis: &[TaggedRow]) {
    for b in basis {
        let Some(pc) = b.entries.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = row.entries[pc].div_floor(&b.entries[pc]);
        if !q.is_zero() {
            row.sub_multiple(&q, b);
        }
    }
}

/// Basis of the integer kernel `{v ∈ Z^k : Σ_j v_j · columns[j] = 0}` where each
/// column is an integer vector of a common length.
pub fn integer_kernel(columns: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = columns.len();
    if k == 0 {
        return Vec::new();
    }
    let m = columns[0].len();
    // rows [column_j^T | e_j]; reduce the first m coordinates.
    let rows: Vec<TaggedRow> = columns
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut e = col.clone();
            e.extend((0..k).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            TaggedRow::new(e, false)
        })
        .collect();
    hermite_rows(rows)
        .into_iter()
        .filter(|r| r.entries[..m].iter().all(Zero::is_zero))
        .map(|r| r.entries[m..].to_vec())
        .collect()
}

/// Result of an exact linear program `max c·x` subject to `A x = b`, `x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

/// Exact two-phase simplex with Bland's rule. Intended for systems with a few
/// dozen variables.
pub fn maximize(a: &RatMatrix, b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    // Tableau columns: n originals, m artificials, rhs.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Rational::one();
        row[n + m] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase I: maximise -Σ artificials.
    let mut phase1 = vec![Rational::zero(); n + m];
    for j in n..n + m {
        phase1[j] = -Rational::one();
    }
    let allowed1: Vec<bool> = vec![true; n + m];
    if !run_simplex(&mut t, &mut basis, &phase1, &allowed1) {
        unreachable!("phase one is bounded");
    }
    let infeas: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &bj)| bj >= n)
        .map(|(i, _)| t[i][n + m].clone())
        .sum();
    if !infeas.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis where possible.
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            }
        }
    }
    // Phase II on original variables only.
    let mut obj = c.to_vec();
    obj.extend(std::iter::repeat_n(Rational::zero(), m));
    let mut allowed = vec![true; n];
    allowed.extend(std::iter::repeat_n(false, m));
    if !run_simplex(&mut t, &mut basis, &obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[i][n + m].clone();
        }
    }
    let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { value, x }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], row: usize, col: usize) {
    let inv = t[row][col].recip();
    for x in t[row].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    basis[row] = col;
}

/// Returns false when the objective is unbounded.
fn run_simplex(t: &mut [Vec<Rational>], basis: &mut [usize], obj: &[Rational], allowed: &[bool]) -> bool {
    let nvars = obj.len();
    let rhs = t.first().map_or(0, |r| r.len() - 1);
    loop {
        // reduced cost of column j: obj_j - Σ_i obj_{basis_i} t[i][j]
        let entering = (0..nvars).find(|&j| {
            if !allowed[j] || basis.contains(&j) {
                return false;
            }
            let mut rc = obj[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                rc -= &obj[bj] * &t[i][j];
            }
            rc.is_positive()
        });
        let Some(j) = entering else {
            return true;
        };
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = &t[i][rhs] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = best else {
            return false;
        };
        pivot(t, basis, i, j);
    }
}
