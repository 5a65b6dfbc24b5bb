use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..n-1}`, `map[p]` being the image of `p`.
///
/// Acting on words, the letter at position `p` moves to position `map[p]`.
/// One-line notation (display, `from_one_line`) is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentScheme {
    Leftmost,
    Rightmost,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || seen[x] {
                return Err(Error::BadPermutation(map.iter().map(|v| v + 1).collect()));
            }
            seen[x] = true;
        }
        Ok(Permutation { map })
    }

    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::BadPermutation(one_line.to_vec()));
        }
        Self::from_images(one_line.iter().map(|x| x - 1).collect())
            .map_err(|_| Error::BadPermutation(one_line.to_vec()))
    }

    /// The adjacent transposition `s_i` (1-based) in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i - 1, i);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.map[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (p, &q) in self.map.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            map: other.map.iter().map(|&p| self.map[p]).collect(),
        }
    }

    pub fn inversions(&self) -> usize {
        let n = self.map.len();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.map[a] > self.map[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word `[i1, ..., il]` (1-based) with `self = s_{i1} ∘ ... ∘ s_{il}`.
    ///
    /// Repeatedly right-multiplies by `s_i` at a descent until the identity
    /// is reached; `scheme` picks which descent.
    pub fn reduced_word_with(&self, scheme: DescentScheme) -> Vec<usize> {
        let mut cur = self.map.clone();
        let mut steps = Vec::new();
        loop {
            let n = cur.len();
            let descent = match scheme {
                DescentScheme::Leftmost => (0..n.saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]),
                DescentScheme::Rightmost => (0..n.saturating_sub(1)).rev().find(|&i| cur[i] > cur[i + 1]),
            };
            match descent {
                Some(i) => {
                    cur.swap(i, i + 1);
                    steps.push(i + 1);
                }
                None => break,
            }
        }
        steps.reverse();
        steps
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_with(DescentScheme::Leftmost)
    }

    /// The block swap `χ_{m,n}`: the first `m` positions move past the last `n`.
    pub fn block_swap(m: usize, n: usize) -> Self {
        Permutation {
            map: (0..m + n).map(|p| if p < m { p + n } else { p - m }).collect(),
        }
    }

    /// Letter permutation that rearranges consecutive blocks of the given
    /// lengths into the order `order` (a list of block indices).
    pub fn blocks(lens: &[usize], order: &[usize]) -> Self {
        let mut old_start = Vec::with_capacity(lens.len());
        let mut acc = 0;
        for &l in lens {
            old_start.push(acc);
            acc += l;
        }
        let mut map = vec![0; acc];
        let mut new_pos = 0;
        for &b in order {
            for o in 0..lens[b] {
                map[old_start[b] + o] = new_pos;
                new_pos += 1;
            }
        }
        Permutation { map }
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation { map: prefix.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All `(i,j)`-shuffles: increasing on the first `i` and on the last `j`
/// positions, in lexicographic order of one-line notation.
pub fn shuffles(i: usize, j: usize) -> Vec<Permutation> {
    let n = i + j;
    let mut out = Vec::new();
    // choose the images of the first block
    fn choose(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            choose(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut subsets = Vec::new();
    choose(0, n, i, &mut Vec::new(), &mut subsets);
    for s in subsets {
        let mut map = s.clone();
        map.extend((0..n).filter(|x| !s.contains(x)));
        out.push(Permutation { map });
    }
    out.sort();
    out
}
