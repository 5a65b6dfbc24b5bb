//! Planar trees: binary trees, rooted forests and angular trees.
//!
//! Every shape has a canonical order on its decoration slots: in-order (leaf
//! gaps) for binary trees, preorder for forests, left-to-right angles for
//! angular trees. A decorated tree is a shape plus a word whose i-th letter
//! sits on the i-th slot.
//!
//! Notation (decorations `e1, e2, ...`, or `*` for a bare shape):
//! binary `|` / `(L e1 R)`, forest `e1(e2 e3) e4` with `1` for the empty
//! forest, angular `[T0 e1 T1 ... ek Tk]`.

mod angular;
mod binary;
pub mod lush;
mod notation;
mod rooted;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linear::{Canonical, Letter, Word};

pub use angular::{graft_angular, AngularTree};
pub(crate) use angular::graft_unchecked;
pub use binary::{graft_binary, BinaryTree};
pub use notation::Cursor;
pub use rooted::{Forest, RootedTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    Binary,
    Forest,
    Angular,
    Lush,
}

impl FromStr for TreeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(TreeKind::Binary),
            "forest" => Ok(TreeKind::Forest),
            "angular" => Ok(TreeKind::Angular),
            "lush" => Ok(TreeKind::Lush),
            _ => Err(Error::KindMismatch(format!("unknown tree kind {s:?}"))),
        }
    }
}

/// Path from the root: child indices, and for angular trees a final angle index.
pub type Position = Vec<usize>;

/// A descendant-closed cut of a tree: the removed pieces (in canonical
/// order), what remains, and which slots of the original went into the pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut<S> {
    pub pieces: Vec<S>,
    pub rest: S,
    pub positions: Vec<usize>,
}

pub trait Shape: Clone + Eq + Ord + Hash + fmt::Debug {
    fn slots(&self) -> usize;
    fn unit() -> Self;
    fn is_unit(&self) -> bool {
        self.slots() == 0
    }
    /// All shapes with `n` slots, sorted by bare notation.
    fn enumerate(n: usize) -> Vec<Self>;
    fn canonical_positions(&self) -> Vec<Position>;
    fn cuts(&self) -> Vec<Cut<Self>>;
    fn write(&self, word: &mut dyn Iterator<Item = Option<Letter>>, out: &mut String);
    fn parse_at(c: &mut Cursor) -> Result<(Self, Vec<Option<Letter>>)>;

    fn bare(&self) -> String {
        let mut s = String::new();
        self.write(&mut std::iter::repeat(None), &mut s);
        s
    }
}

pub(crate) fn sort_by_notation<S: Shape>(mut v: Vec<S>) -> Vec<S> {
    v.sort_by_cached_key(|s| s.bare());
    v
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Decorated<S> {
    pub shape: S,
    pub word: Word,
}

impl<S: Shape> Decorated<S> {
    pub fn new(shape: S, word: Word) -> Result<Self> {
        if shape.slots() != word.len() {
            return Err(Error::LengthMismatch {
                expected: shape.slots(),
                got: word.len(),
            });
        }
        Ok(Decorated { shape, word })
    }

    pub(crate) fn raw(shape: S, word: Word) -> Self {
        debug_assert_eq!(shape.slots(), word.len());
        Decorated { shape, word }
    }

    pub fn unit() -> Self {
        Decorated {
            shape: S::unit(),
            word: Word::empty(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.shape.is_unit()
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let (shape, decs) = S::parse_at(&mut c)?;
        c.skip_ws();
        if !c.at_end() {
            return Err(c.error("trailing input"));
        }
        let word = notation::letters_only(&decs, c.pos())?;
        Ok(Decorated { shape, word })
    }

    /// All decorated trees of degree `n` over a `dim`-letter alphabet.
    pub fn all(shapes: &[S], dim: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for s in shapes {
            for w in all_words(s.slots(), dim) {
                out.push(Decorated::raw(s.clone(), w));
            }
        }
        out
    }
}

pub fn parse_shape<S: Shape>(s: &str) -> Result<S> {
    let mut c = Cursor::new(s);
    let (shape, decs) = S::parse_at(&mut c)?;
    c.skip_ws();
    if !c.at_end() {
        return Err(c.error("trailing input"));
    }
    if decs.iter().any(|d| d.is_some()) {
        return Err(c.error("expected a bare shape with `*` decorations"));
    }
    Ok(shape)
}

pub fn all_words(len: usize, dim: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * dim);
        for w in &out {
            for l in 0..dim {
                let mut x: Vec<Letter> = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out = next;
    }
    out.into_iter().map(Word).collect()
}

impl<S: Shape> fmt::Display for Decorated<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.shape.write(&mut self.word.iter().map(|&l| Some(l)), &mut s);
        f.write_str(&s)
    }
}

impl<S: Shape> Canonical for Decorated<S> {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Bare notations of all shapes of a kind and grade.
pub fn enumerate_shapes(kind: TreeKind, n: usize) -> Vec<String> {
    match kind {
        TreeKind::Binary => BinaryTree::enumerate(n).iter().map(|t| t.bare()).collect(),
        TreeKind::Forest => Forest::enumerate(n).iter().map(|t| t.bare()).collect(),
        TreeKind::Angular => AngularTree::enumerate(n).iter().map(|t| t.bare()).collect(),
        TreeKind::Lush => lush::enumerate_lush(n).iter().map(|t| t.bare()).collect(),
    }
}
