//! Multi-factor tensors of decorated trees and single letters, and the
//! braided moves on them.
//!
//! A tensor stores the shapes of its factors and one concatenated word, so a
//! braiding of two adjacent factors is `β` applied to a slice of the word.

use std::fmt;

use serde_json::{json, Value};

use crate::braid::Braiding;
use crate::linear::{Canonical, LinComb, Letter, Word};
use crate::trees::{Decorated, Shape};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Factor<S> {
    /// A bare factor of V.
    Letter,
    Tree(S),
}

impl<S: Shape> Factor<S> {
    pub fn slots(&self) -> usize {
        match self {
            Factor::Letter => 1,
            Factor::Tree(s) => s.slots(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<S> {
    pub factors: Vec<Factor<S>>,
    pub word: Word,
}

impl<S: Shape> Tensor<S> {
    pub fn pair(a: &Decorated<S>, b: &Decorated<S>) -> Self {
        Tensor {
            factors: vec![Factor::Tree(a.shape.clone()), Factor::Tree(b.shape.clone())],
            word: a.word.concat(&b.word),
        }
    }

    pub fn of(parts: &[&Decorated<S>]) -> Self {
        Tensor {
            factors: parts.iter().map(|p| Factor::Tree(p.shape.clone())).collect(),
            word: Word(parts.iter().flat_map(|p| p.word.iter().copied()).collect()),
        }
    }

    pub fn single(a: &Decorated<S>) -> Self {
        Self::of(&[a])
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    fn offset(&self, i: usize) -> usize {
        self.factors[..i].iter().map(|f| f.slots()).sum()
    }

    fn slice(&self, i: usize) -> &[Letter] {
        let o = self.offset(i);
        &self.word[o..o + self.factors[i].slots()]
    }

    /// The i-th factor as a decorated tree. Panics on a letter factor.
    pub fn part(&self, i: usize) -> Decorated<S> {
        match &self.factors[i] {
            Factor::Tree(s) => Decorated {
                shape: s.clone(),
                word: Word(self.slice(i).to_vec()),
            },
            Factor::Letter => panic!("factor {i} is a letter"),
        }
    }

    pub fn letter(&self, i: usize) -> Letter {
        match self.factors[i] {
            Factor::Letter => self.slice(i)[0],
            Factor::Tree(_) => panic!("factor {i} is a tree"),
        }
    }

    pub fn left(&self) -> Decorated<S> {
        self.part(0)
    }

    pub fn right(&self) -> Decorated<S> {
        self.part(1)
    }

    pub fn parts(&self) -> Vec<Decorated<S>> {
        (0..self.arity()).map(|i| self.part(i)).collect()
    }

    /// Inserts a letter factor before position `i`.
    pub fn insert_letter(&self, i: usize, v: Letter) -> Self {
        let o = self.offset(i);
        let mut factors = self.factors.clone();
        factors.insert(i, Factor::Letter);
        let mut word = self.word.0.clone();
        word.insert(o, v);
        Tensor {
            factors,
            word: Word(word),
        }
    }

    /// Concatenation of tensors (`a ⊗ b`).
    pub fn join(&self, other: &Tensor<S>) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Tensor {
            factors,
            word: self.word.concat(&other.word),
        }
    }
}

impl<S: Shape> fmt::Display for Tensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.arity() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            match &self.factors[i] {
                Factor::Letter => write!(f, "e{}", self.letter(i) + 1)?,
                Factor::Tree(_) => write!(f, "{}", self.part(i))?,
            }
        }
        Ok(())
    }
}

impl<S: Shape> Canonical for Tensor<S> {
    fn canonical(&self) -> String {
        self.to_string()
    }

    fn json_term(&self) -> Value {
        let show = |i: usize| match &self.factors[i] {
            Factor::Letter => format!("e{}", self.letter(i) + 1),
            Factor::Tree(_) => self.part(i).to_string(),
        };
        if self.arity() == 2 {
            json!({"left": show(0), "right": show(1)})
        } else {
            Value::Array((0..self.arity()).map(|i| Value::String(show(i))).collect())
        }
    }
}

/// Braids factors `i` and `i+1` (0-based), i.e. `β` on their decoration blocks.
pub fn braid_adjacent<S: Shape>(sigma: &Braiding, x: &LinComb<Tensor<S>>, i: usize) -> LinComb<Tensor<S>> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        let a = t.factors[i].slots();
        let b = t.factors[i + 1].slots();
        let mut factors = t.factors.clone();
        factors.swap(i, i + 1);
        if a == 0 || b == 0 {
            out.add_term(
                Tensor {
                    factors,
                    word: t.word.clone(),
                },
                c.clone(),
            );
            continue;
        }
        let o = t.offset(i);
        let n = t.word.len();
        let lens = [o, a, b, n - o - a - b];
        for (w, d) in sigma.permute_blocks(&t.word, &lens, &[0, 2, 1, 3]).into_terms() {
            out.add_term(
                Tensor {
                    factors: factors.clone(),
                    word: w,
                },
                c * d,
            );
        }
    }
    out
}

/// Applies adjacent braidings in sequence; `steps[0]` acts first.
pub fn braid_steps<S: Shape>(sigma: &Braiding, x: &LinComb<Tensor<S>>, steps: &[usize]) -> LinComb<Tensor<S>> {
    let mut cur = x.clone();
    for &i in steps {
        cur = braid_adjacent(sigma, &cur, i);
    }
    cur
}

/// Replaces factors `start..start+len` by the image of that sub-tensor under `f`.
pub fn collapse<S: Shape>(
    x: &LinComb<Tensor<S>>,
    start: usize,
    len: usize,
    mut f: impl FnMut(&Tensor<S>) -> LinComb<Decorated<S>>,
) -> LinComb<Tensor<S>> {
    try_collapse(x, start, len, |t| Ok(f(t))).expect("infallible")
}

pub fn try_collapse<S: Shape>(
    x: &LinComb<Tensor<S>>,
    start: usize,
    len: usize,
    mut f: impl FnMut(&Tensor<S>) -> crate::Result<LinComb<Decorated<S>>>,
) -> crate::Result<LinComb<Tensor<S>>> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        let (pre, mid, post) = split3(t, start, len);
        for (d, e) in f(&mid)?.into_terms() {
            let mut factors = pre.factors.clone();
            factors.push(Factor::Tree(d.shape));
            factors.extend(post.factors.iter().cloned());
            out.add_term(
                Tensor {
                    factors,
                    word: Word::join(&[&pre.word, &d.word, &post.word]),
                },
                c * e,
            );
        }
    }
    Ok(out)
}

/// Replaces factor `i` by the tensor `f(part i)`.
pub fn expand<S: Shape>(
    x: &LinComb<Tensor<S>>,
    i: usize,
    mut f: impl FnMut(&Decorated<S>) -> LinComb<Tensor<S>>,
) -> LinComb<Tensor<S>> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        let (pre, mid, post) = split3(t, i, 1);
        for (d, e) in f(&mid.part(0)).into_terms() {
            out.add_term(pre.join(&d).join(&post), c * e);
        }
    }
    out
}

/// Applies a linear map to factor `i`.
pub fn map_factor<S: Shape>(
    x: &LinComb<Tensor<S>>,
    i: usize,
    mut f: impl FnMut(&Decorated<S>) -> LinComb<Decorated<S>>,
) -> LinComb<Tensor<S>> {
    collapse(x, i, 1, |t| f(&t.part(0)))
}

fn split3<S: Shape>(t: &Tensor<S>, start: usize, len: usize) -> (Tensor<S>, Tensor<S>, Tensor<S>) {
    let a = t.offset(start);
    let b = t.offset(start + len);
    let mk = |fs: &[Factor<S>], w: &[Letter]| Tensor {
        factors: fs.to_vec(),
        word: Word(w.to_vec()),
    };
    (
        mk(&t.factors[..start], &t.word[..a]),
        mk(&t.factors[start..start + len], &t.word[a..b]),
        mk(&t.factors[start + len..], &t.word[b..]),
    )
}

/// `σ_X(a ⊗ b) = (b ⊗ a) β_{m,n}` on decorated objects of one kind.
pub fn braid_objects<S: Shape>(
    sigma: &Braiding,
    a: &LinComb<Decorated<S>>,
    b: &LinComb<Decorated<S>>,
) -> LinComb<Tensor<S>> {
    let mut pairs = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            pairs.add_term(Tensor::pair(x, y), c * d);
        }
    }
    braid_adjacent(sigma, &pairs, 0)
}

/// `a ⊗ b` extended bilinearly.
pub fn tensor_lin<S: Shape>(a: &LinComb<Decorated<S>>, b: &LinComb<Decorated<S>>) -> LinComb<Tensor<S>> {
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term(Tensor::pair(x, y), c * d);
        }
    }
    out
}
