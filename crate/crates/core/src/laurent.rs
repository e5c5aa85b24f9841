//! Finite Laurent polynomials in one parameter `t` over Q(i), used to model
//! one-parameter degenerations and their `t → 0` limits.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, ProjectivePoint};

/// `Σ c_k t^k` with finitely many nonzero coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, GaussianRational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: GaussianRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, GaussianRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&GaussianRational> {
        self.terms.values().next()
    }

    pub fn coefficient(&self, exp: i64) -> GaussianRational {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// True when the series has no `t`-dependence.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// Substitutes `t → c·t`.
    pub fn rescale(&self, c: &GaussianRational) -> Result<Self> {
        let mut out = Self::zero();
        for (&k, coeff) in &self.terms {
            out.add_term(k, &(coeff * &c.pow(k)?));
        }
        Ok(out)
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

/// Limit as `t → 0` of `f / g` in the projective line.
pub fn laurent_limit_ratio(f: &LaurentScalar, g: &LaurentScalar) -> Result<ProjectivePoint> {
    let vg = g.valuation().ok_or(Error::ZeroDenominatorSeries)?;
    let Some(vf) = f.valuation() else {
        return Ok(ProjectivePoint::zero());
    };
    match vf.cmp(&vg) {
        std::cmp::Ordering::Greater => Ok(ProjectivePoint::zero()),
        std::cmp::Ordering::Less => Ok(ProjectivePoint::infinity()),
        std::cmp::Ordering::Equal => ProjectivePoint::new(
            f.leading_coefficient().cloned().unwrap_or_default(),
            g.leading_coefficient().cloned().unwrap_or_default(),
        ),
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            let parts = [(c.re.clone(), ""), (c.im.clone(), "*i")];
            for (value, unit) in parts {
                if value == num_traits::Zero::zero() {
                    continue;
                }
                let text = crate::scalar::GaussianRational::from_rational(value).to_string();
                if !first && !text.starts_with('-') {
                    f.write_str("+")?;
                }
                first = false;
                f.write_str(&text)?;
                f.write_str(unit)?;
                if k != 0 {
                    write!(f, "*t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits on top-level `+`/`-` signs, keeping the sign with its term and
/// ignoring signs that belong to an exponent (`t^-2`).
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..bytes.len() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
            out.push(&s[start..k]);
            start = k;
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term(term: &str) -> Result<(i64, GaussianRational)> {
    let bad = || Error::Parse(format!("invalid Laurent term '{term}'"));
    let (coeff, exp) = if let Some(pos) = term.find('t') {
        let (head, tail) = term.split_at(pos);
        let exp = match tail.strip_prefix('t').unwrap_or("") {
            "" => 1,
            rest => rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?,
        };
        (head.strip_suffix('*').unwrap_or(head), exp)
    } else {
        (term, 0)
    };
    let coeff = match coeff {
        "" | "+" => GaussianRational::one(),
        "-" => -GaussianRational::one(),
        c => c.parse()?,
    };
    Ok((exp, coeff))
}

impl FromStr for LaurentScalar {
    type Err = Error;

    /// Parses sums of `c*t^k` terms, e.g. `2+1*t^1`, `1/2*i*t^-1 - 3`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Laurent scalar".into()));
        }
        let mut out = Self::zero();
        for term in split_terms(&s) {
            let (k, c) = parse_term(term)?;
            out.add_term(k, &c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
