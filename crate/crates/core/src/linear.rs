//! Exact scalars, tensor words and formal linear combinations.
//!
//! `LinComb` keeps its terms in a `BTreeMap` keyed by the structural order of
//! the basis type. Anything user-facing (display, JSON) re-sorts by the
//! canonical string of each term, so output never depends on the internal
//! order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A basis index of V, stored 0-based and rendered as `e{i+1}`.
pub type Letter = usize;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Always `p/q`, even for integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// A pure tensor `e_{w1} ⊗ ... ⊗ e_{wn}`; the empty word is the scalar unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn join(parts: &[&[Letter]]) -> Word {
        Word(parts.concat())
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("e{}", l + 1)).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// Basis elements that have a canonical textual form.
pub trait Canonical {
    fn canonical(&self) -> String;

    fn json_term(&self) -> Value {
        Value::String(self.canonical())
    }
}

impl Canonical for Word {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::scaled(k, Rational::one())
    }

    pub fn scaled(k: K, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Linear extension of an infallible basis map.
    pub fn map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a fallible basis map.
    pub fn try_map<L: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<L>>,
    ) -> Result<LinComb<L>> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone + Canonical> LinComb<K> {
    /// Terms ordered by canonical string.
    pub fn sorted_terms(&self) -> Vec<(String, &K, &Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| (k.canonical(), k, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(_, k, c)| json!({"coeff": format_rational(c), "term": k.json_term()}))
                .collect(),
        )
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Rational::one())
    }
}

impl<K: Ord + Clone + Canonical> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, _, c) in self.sorted_terms() {
            let sign_neg = c.is_negative();
            let mag = c.abs();
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if sign_neg { "-" } else { "+" })?;
            }
            first = false;
            if mag.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{mag}·{s}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone + Canonical> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `a + c·b`
pub fn lin_combine<K: Ord + Clone>(a: &LinComb<K>, c: &Rational, b: &LinComb<K>) -> LinComb<K> {
    let mut out = a.clone();
    out.add_scaled(b, c);
    out
}

/// Linear extension of a partial map; a term outside the domain is an error.
pub fn linear_extend<K, L>(
    f: impl Fn(&K) -> Option<LinComb<L>>,
    x: &LinComb<K>,
) -> Result<LinComb<L>>
where
    K: Ord + Clone + Canonical,
    L: Ord + Clone,
{
    x.try_map(|k| f(k).ok_or_else(|| Error::UndefinedTerm(k.canonical())))
}

/// Bilinear extension of a basis-level map.
pub fn bilinear<K, L, M>(
    a: &LinComb<K>,
    b: &LinComb<L>,
    mut f: impl FnMut(&K, &L) -> Result<LinComb<M>>,
) -> Result<LinComb<M>>
where
    K: Ord + Clone,
    L: Ord + Clone,
    M: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_scaled(&f(x, y)?, &(c * d));
        }
    }
    Ok(out)
}
