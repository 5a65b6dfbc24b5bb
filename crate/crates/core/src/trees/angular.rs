use super::notation::{write_dec, Cursor};
use super::{sort_by_notation, Cut, Decorated, Position, Shape};
use crate::error::{Error, Result};
use crate::linear::{Letter, Word};

/// Planar tree whose internal vertices have at least two children; the
/// decorations sit in the angles between adjacent children.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AngularTree {
    Leaf,
    Node(Vec<AngularTree>),
}

impl AngularTree {
    /// Leaf degree: number of leaves minus one.
    pub fn degree(&self) -> usize {
        match self {
            AngularTree::Leaf => 0,
            AngularTree::Node(bs) => bs.iter().map(|b| b.degree()).sum::<usize>() + bs.len() - 1,
        }
    }

    pub fn branches(&self) -> &[AngularTree] {
        match self {
            AngularTree::Leaf => &[],
            AngularTree::Node(bs) => bs,
        }
    }

    /// The corolla with `k` angles.
    pub fn corolla(k: usize) -> Self {
        AngularTree::Node(vec![AngularTree::Leaf; k + 1])
    }

    fn all(n: usize) -> Vec<AngularTree> {
        if n == 0 {
            return vec![AngularTree::Leaf];
        }
        // Branch degrees d_0..d_k with Σ d_i + k = n, k ≥ 1.
        let mut out = Vec::new();
        for k in 1..=n {
            for degs in compositions_with_zeros(n - k, k + 1) {
                let mut acc: Vec<Vec<AngularTree>> = vec![vec![]];
                for &d in &degs {
                    let opts = Self::all(d);
                    let mut next = Vec::new();
                    for a in &acc {
                        for o in &opts {
                            let mut v = a.clone();
                            v.push(o.clone());
                            next.push(v);
                        }
                    }
                    acc = next;
                }
                out.extend(acc.into_iter().map(AngularTree::Node));
            }
        }
        out
    }

    fn positions_into(&self, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        if let AngularTree::Node(bs) = self {
            for (i, b) in bs.iter().enumerate() {
                if i > 0 {
                    let mut p = path.clone();
                    p.push(i - 1);
                    out.push(p);
                }
                path.push(i);
                b.positions_into(path, out);
                path.pop();
            }
        }
    }
}

/// Sequences of `parts` nonnegative integers summing to `total`.
fn compositions_with_zeros(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions_with_zeros(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Shape for AngularTree {
    fn slots(&self) -> usize {
        self.degree()
    }

    fn unit() -> Self {
        AngularTree::Leaf
    }

    fn enumerate(n: usize) -> Vec<Self> {
        sort_by_notation(Self::all(n))
    }

    /// Each handle is the vertex path followed by the 0-based angle index.
    fn canonical_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        self.positions_into(&mut Vec::new(), &mut out);
        out
    }

    fn cuts(&self) -> Vec<Cut<Self>> {
        match self {
            AngularTree::Leaf => vec![Cut {
                pieces: vec![],
                rest: AngularTree::Leaf,
                positions: vec![],
            }],
            AngularTree::Node(bs) => {
                let mut acc = vec![Cut {
                    pieces: vec![],
                    rest: AngularTree::Node(vec![]),
                    positions: vec![],
                }];
                let mut shift = 0;
                for (i, b) in bs.iter().enumerate() {
                    if i > 0 {
                        shift += 1;
                    }
                    let bc = b.cuts();
                    let mut next = Vec::with_capacity(acc.len() * bc.len());
                    for a in &acc {
                        for c in &bc {
                            let mut pieces = a.pieces.clone();
                            pieces.extend(c.pieces.iter().cloned());
                            let mut positions = a.positions.clone();
                            positions.extend(c.positions.iter().map(|p| p + shift));
                            let mut rest = a.rest.branches().to_vec();
                            rest.push(c.rest.clone());
                            next.push(Cut {
                                pieces,
                                rest: AngularTree::Node(rest),
                                positions,
                            });
                        }
                    }
                    acc = next;
                    shift += b.degree();
                }
                acc.insert(
                    0,
                    Cut {
                        pieces: vec![self.clone()],
                        rest: AngularTree::Leaf,
                        positions: (0..self.degree()).collect(),
                    },
                );
                acc
            }
        }
    }

    fn write(&self, word: &mut dyn Iterator<Item = Option<Letter>>, out: &mut String) {
        match self {
            AngularTree::Leaf => out.push('|'),
            AngularTree::Node(bs) => {
                out.push('[');
                for (i, b) in bs.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                        write_dec(word.next().flatten(), out);
                        out.push(' ');
                    }
                    b.write(word, out);
                }
                out.push(']');
            }
        }
    }

    fn parse_at(c: &mut Cursor) -> Result<(Self, Vec<Option<Letter>>)> {
        c.skip_ws();
        if c.eat("|") {
            return Ok((AngularTree::Leaf, vec![]));
        }
        if !c.eat("[") {
            return Err(c.error("expected `|` or `[`"));
        }
        let (b0, mut decs) = Self::parse_at(c)?;
        let mut bs = vec![b0];
        loop {
            c.skip_ws();
            if c.eat("]") {
                break;
            }
            decs.push(c.decoration()?);
            let (b, d) = Self::parse_at(c)?;
            decs.extend(d);
            bs.push(b);
        }
        if bs.len() < 2 {
            return Err(c.error("an internal vertex needs at least one angle"));
        }
        Ok((AngularTree::Node(bs), decs))
    }
}

impl Decorated<AngularTree> {
    /// `T[v] = | ∨_v |`
    pub fn t(v: Letter) -> Self {
        Decorated::raw(AngularTree::corolla(1), Word(vec![v]))
    }

    /// Splits `T0 ∨_{v1} ... ∨_{vk} Tk` into branches and angle letters.
    pub fn split(&self) -> Option<(Vec<Self>, Vec<Letter>)> {
        match &self.shape {
            AngularTree::Leaf => None,
            AngularTree::Node(bs) => {
                let mut branches = Vec::with_capacity(bs.len());
                let mut angles = Vec::with_capacity(bs.len() - 1);
                let mut off = 0;
                for (i, b) in bs.iter().enumerate() {
                    if i > 0 {
                        angles.push(self.word[off]);
                        off += 1;
                    }
                    let d = b.degree();
                    branches.push(Decorated::raw(b.clone(), Word(self.word[off..off + d].to_vec())));
                    off += d;
                }
                Some((branches, angles))
            }
        }
    }
}

/// `T0 ∨_{v1} T1 ... ∨_{vk} Tk`
pub fn graft_angular(
    branches: &[Decorated<AngularTree>],
    angles: &[Letter],
) -> Result<Decorated<AngularTree>> {
    if angles.is_empty() || branches.len() != angles.len() + 1 {
        return Err(Error::LengthMismatch {
            expected: angles.len() + 1,
            got: branches.len(),
        });
    }
    Ok(graft_unchecked(branches, angles))
}

pub(crate) fn graft_unchecked(
    branches: &[Decorated<AngularTree>],
    angles: &[Letter],
) -> Decorated<AngularTree> {
    let mut word = Vec::new();
    for (i, b) in branches.iter().enumerate() {
        if i > 0 {
            word.push(angles[i - 1]);
        }
        word.extend_from_slice(&b.word);
    }
    Decorated::raw(
        AngularTree::Node(branches.iter().map(|b| b.shape.clone()).collect()),
        Word(word),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_shape;

    type A = Decorated<AngularTree>;

    #[test]
    fn roundtrip() {
        for s in ["|", "[| e1 |]", "[[| e1 |] e2 | e3 [| e4 |]]"] {
            assert_eq!(A::parse(s).unwrap().to_string(), s);
        }
        for n in 0..5 {
            for t in AngularTree::enumerate(n) {
                assert_eq!(parse_shape::<AngularTree>(&t.bare()).unwrap(), t);
            }
        }
        assert!(A::parse("[|]").is_err());
    }

    #[test]
    fn graft_examples() {
        let leaf = A::unit();
        assert_eq!(graft_angular(&[leaf.clone(), leaf.clone()], &[2]).unwrap(), A::t(2));
        let c = graft_angular(&[leaf.clone(), leaf.clone(), leaf.clone()], &[0, 1]).unwrap();
        assert_eq!(c.to_string(), "[| e1 | e2 |]");
        assert!(graft_angular(&[leaf], &[]).is_err());
        let big = A::parse("[[| e1 |] e2 | e3 [| e4 |]]").unwrap();
        let (bs, angles) = big.split().unwrap();
        assert_eq!(angles, vec![1, 2]);
        assert_eq!(big.degree(), bs.iter().map(|b| b.degree()).sum::<usize>() + 2);
        assert_eq!(graft_angular(&bs, &angles).unwrap(), big);
    }

    #[test]
    fn angle_positions() {
        let t = parse_shape::<AngularTree>("[[| * |] * | * |]").unwrap();
        assert_eq!(
            t.canonical_positions(),
            vec![vec![0, 0], vec![0], vec![1]]
        );
    }

    #[test]
    fn cuts_of_corolla() {
        let c = AngularTree::corolla(2);
        assert_eq!(c.cuts().len(), 2);
        let t = parse_shape::<AngularTree>("[[| * |] * [| * |]]").unwrap();
        let cuts = t.cuts();
        assert_eq!(cuts.len(), 5);
        for cut in &cuts {
            assert!(cut.positions.windows(2).all(|w| w[0] < w[1]));
            let d: usize = cut.pieces.iter().map(|p| p.degree()).sum();
            assert_eq!(d + cut.rest.degree(), t.degree());
        }
    }
}
