//! Yang–Baxter operators on V and their lifts to tensor words.

mod perm;

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, LinComb, Letter, Rational, Word};

pub use perm::{shuffles, DescentScheme, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidingKind {
    Flip,
    Diagonal,
    Explicit,
}

/// `σ(e_i ⊗ e_j) = Σ c·e_k ⊗ e_l`, stored sparsely per input pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Braiding {
    dim: usize,
    kind: BraidingKind,
    action: Vec<Vec<(Letter, Letter, Rational)>>,
}

/// Failure of the braid relation on one basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWitness {
    pub triple: (Letter, Letter, Letter),
    pub lhs: LinComb<Word>,
    pub rhs: LinComb<Word>,
}

impl fmt::Display for BraidWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(
            f,
            "on e{}⊗e{}⊗e{}: σ1σ2σ1 = {} but σ2σ1σ2 = {}",
            i + 1,
            j + 1,
            k + 1,
            self.lhs,
            self.rhs
        )
    }
}

impl From<BraidWitness> for Error {
    fn from(w: BraidWitness) -> Self {
        Error::BraidRelation {
            i: w.triple.0 + 1,
            j: w.triple.1 + 1,
            k: w.triple.2 + 1,
            lhs: w.lhs.to_string(),
            rhs: w.rhs.to_string(),
        }
    }
}

impl Braiding {
    pub fn flip(dim: usize) -> Self {
        let mut action = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                action[i * dim + j].push((j, i, Rational::one()));
            }
        }
        Braiding {
            dim,
            kind: BraidingKind::Flip,
            action,
        }
    }

    /// `σ(e_i⊗e_j) = q_ij e_j⊗e_i`. Always satisfies the braid relation, but
    /// it is checked anyway.
    pub fn diagonal(q: &[Vec<Rational>]) -> Result<Self> {
        let b = Self::diagonal_unchecked(q)?;
        b.validate()?;
        Ok(b)
    }

    pub fn diagonal_unchecked(q: &[Vec<Rational>]) -> Result<Self> {
        let dim = q.len();
        if q.iter().any(|row| row.len() != dim) {
            return Err(Error::BadBraiding("q must be a square matrix".into()));
        }
        let mut action = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if !q[i][j].is_zero() {
                    action[i * dim + j].push((j, i, q[i][j].clone()));
                }
            }
        }
        Ok(Braiding {
            dim,
            kind: BraidingKind::Diagonal,
            action,
        })
    }

    /// Every `q_ij` equal to `q`.
    pub fn uniform_diagonal(dim: usize, q: Rational) -> Self {
        Self::diagonal_unchecked(&vec![vec![q; dim]; dim]).expect("square")
    }

    /// Entries `(i, j, k, l, c)` (0-based) meaning `c·e_k⊗e_l` in `σ(e_i⊗e_j)`.
    pub fn explicit(dim: usize, entries: &[(Letter, Letter, Letter, Letter, Rational)]) -> Result<Self> {
        let b = Self::explicit_unchecked(dim, entries)?;
        b.validate()?;
        Ok(b)
    }

    pub fn explicit_unchecked(
        dim: usize,
        entries: &[(Letter, Letter, Letter, Letter, Rational)],
    ) -> Result<Self> {
        let mut table: Vec<LinComb<(Letter, Letter)>> = vec![LinComb::zero(); dim * dim];
        for (i, j, k, l, c) in entries {
            for &x in [i, j, k, l] {
                if x >= dim {
                    return Err(Error::LetterOutOfRange { letter: x + 1, dim });
                }
            }
            table[i * dim + j].add_term((*k, *l), c.clone());
        }
        let action = table
            .into_iter()
            .map(|t| t.into_terms().map(|((k, l), c)| (k, l, c)).collect())
            .collect();
        Ok(Braiding {
            dim,
            kind: BraidingKind::Explicit,
            action,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &BraidingKind {
        &self.kind
    }

    pub fn validate(&self) -> Result<()> {
        self.check_yang_baxter().map_err(Error::from)
    }

    /// `σ(e_i⊗e_j)` as a list of `(k, l, c)`.
    pub fn image(&self, i: Letter, j: Letter) -> &[(Letter, Letter, Rational)] {
        &self.action[i * self.dim + j]
    }

    /// All `(i, j, k, l, c)` with nonzero `c`.
    pub fn entries(&self) -> Vec<(Letter, Letter, Letter, Letter, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, l, c) in self.image(i, j) {
                    out.push((i, j, *k, *l, c.clone()));
                }
            }
        }
        out
    }

    /// Compares `σ1σ2σ1` and `σ2σ1σ2` on every basis triple.
    pub fn check_yang_baxter(&self) -> std::result::Result<(), BraidWitness> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let x = LinComb::basis(Word(vec![i, j, k]));
                    let lhs = self.at(&self.at(&self.at(&x, 0), 1), 0);
                    let rhs = self.at(&self.at(&self.at(&x, 1), 0), 1);
                    if lhs != rhs {
                        return Err(BraidWitness {
                            triple: (i, j, k),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// σ at 0-based slots `(p, p+1)`; the caller guarantees `p+1 < len`.
    pub(crate) fn at(&self, x: &LinComb<Word>, p: usize) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (w, c) in x.iter() {
            for (k, l, d) in self.image(w[p], w[p + 1]) {
                let mut v = w.0.clone();
                v[p] = *k;
                v[p + 1] = *l;
                out.add_term(Word(v), c * d);
            }
        }
        out
    }

    fn check_word_lengths(&self, x: &LinComb<Word>, n: usize) -> Result<()> {
        for w in x.keys() {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
            if let Some(&l) = w.iter().find(|&&l| l >= self.dim) {
                return Err(Error::LetterOutOfRange {
                    letter: l + 1,
                    dim: self.dim,
                });
            }
        }
        Ok(())
    }

    /// `σ_i = id^{i-1} ⊗ σ ⊗ id^{n-i-1}` for 1-based `i`.
    pub fn sigma_i(&self, i: usize, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        for w in x.keys() {
            if i == 0 || i >= w.len() {
                return Err(Error::SlotOutOfRange { slot: i, len: w.len() });
            }
        }
        if let Some(w) = x.keys().next() {
            self.check_word_lengths(x, w.len())?;
        }
        Ok(self.at(x, i - 1))
    }

    /// `σ_{i1} ∘ ... ∘ σ_{il}` for a word `[i1, ..., il]`: the rightmost factor acts first.
    pub fn apply_word(&self, word: &[usize], x: &LinComb<Word>) -> LinComb<Word> {
        let mut cur = x.clone();
        for &i in word.iter().rev() {
            cur = self.at(&cur, i - 1);
        }
        cur
    }

    /// `T^σ_w` along the default reduced word.
    pub fn lift(&self, w: &Permutation, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        self.lift_with(w, DescentScheme::Leftmost, x)
    }

    pub fn lift_with(
        &self,
        w: &Permutation,
        scheme: DescentScheme,
        x: &LinComb<Word>,
    ) -> Result<LinComb<Word>> {
        self.check_word_lengths(x, w.len())?;
        Ok(self.apply_word(&w.reduced_word_with(scheme), x))
    }

    /// `β_{m,n} = T^σ_{χ_{m,n}}`
    pub fn beta(&self, m: usize, n: usize, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        self.lift(&Permutation::block_swap(m, n), x)
    }

    /// Rearranges consecutive blocks of a single word; this is `T^σ` of the
    /// induced letter permutation.
    pub(crate) fn permute_blocks(&self, word: &Word, lens: &[usize], order: &[usize]) -> LinComb<Word> {
        let w = Permutation::blocks(lens, order);
        self.apply_word(&w.reduced_word(), &LinComb::basis(word.clone()))
    }
}

impl fmt::Debug for Braiding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Braiding({:?}, dim {})", self.kind, self.dim)
    }
}

/// A scalar in a JSON file: `"p/q"` or a bare integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    pub fn value(&self) -> Result<Rational> {
        match self {
            ScalarRepr::Text(s) => parse_rational(s),
            ScalarRepr::Int(n) => Ok(crate::linear::int(*n)),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        ScalarRepr::Text(format_rational(r))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryRepr {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub c: ScalarRepr,
}

/// Braiding file: basis indices are 1-based, omitted entries are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidingFile {
    pub dim: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Vec<ScalarRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<EntryRepr>>,
}

impl BraidingFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadBraiding(e.to_string()))
    }

    /// Builds the braiding; `validate = false` skips the braid-relation check.
    pub fn build(&self, validate: bool) -> Result<Braiding> {
        let b = match self.kind.as_str() {
            "flip" => Braiding::flip(self.dim),
            "diagonal" => {
                let q = self
                    .q
                    .as_ref()
                    .ok_or_else(|| Error::BadBraiding("diagonal braiding needs `q`".into()))?;
                let q = q
                    .iter()
                    .map(|row| row.iter().map(|x| x.value()).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                if q.len() != self.dim {
                    return Err(Error::BadBraiding("`q` does not match `dim`".into()));
                }
                Braiding::diagonal_unchecked(&q)?
            }
            "explicit" => {
                let mut es = Vec::new();
                for e in self.entries.as_deref().unwrap_or(&[]) {
                    if [e.i, e.j, e.k, e.l].contains(&0) {
                        return Err(Error::BadBraiding("entry indices are 1-based".into()));
                    }
                    es.push((e.i - 1, e.j - 1, e.k - 1, e.l - 1, e.c.value()?));
                }
                Braiding::explicit_unchecked(self.dim, &es)?
            }
            other => return Err(Error::BadBraiding(format!("unknown kind {other:?}"))),
        };
        if validate {
            b.validate()?;
        }
        Ok(b)
    }

    pub fn from_braiding(b: &Braiding) -> Self {
        BraidingFile {
            dim: b.dim,
            kind: "explicit".into(),
            q: None,
            entries: Some(
                b.entries()
                    .into_iter()
                    .map(|(i, j, k, l, c)| EntryRepr {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        l: l + 1,
                        c: ScalarRepr::from_rational(&c),
                    })
                    .collect(),
            ),
        }
    }
}
