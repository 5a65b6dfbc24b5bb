use super::notation::{write_dec, Cursor};
use super::{sort_by_notation, Cut, Decorated, Position, Shape};
use crate::error::Result;
use crate::linear::{Letter, Word};

/// Planar binary tree, graded by internal vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => l.degree() + r.degree() + 1,
        }
    }

    fn all(n: usize) -> Vec<BinaryTree> {
        if n == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            let ls = Self::all(k);
            let rs = Self::all(n - 1 - k);
            for l in &ls {
                for r in &rs {
                    out.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        out
    }

    fn positions_into(&self, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        if let BinaryTree::Node(l, r) = self {
            path.push(0);
            l.positions_into(path, out);
            path.pop();
            out.push(path.clone());
            path.push(1);
            r.positions_into(path, out);
            path.pop();
        }
    }
}

impl Shape for BinaryTree {
    fn slots(&self) -> usize {
        self.degree()
    }

    fn unit() -> Self {
        BinaryTree::Leaf
    }

    fn enumerate(n: usize) -> Vec<Self> {
        sort_by_notation(Self::all(n))
    }

    fn canonical_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        self.positions_into(&mut Vec::new(), &mut out);
        out
    }

    fn cuts(&self) -> Vec<Cut<Self>> {
        match self {
            BinaryTree::Leaf => vec![Cut {
                pieces: vec![],
                rest: BinaryTree::Leaf,
                positions: vec![],
            }],
            BinaryTree::Node(l, r) => {
                let shift = l.degree() + 1;
                let mut out = vec![Cut {
                    pieces: vec![self.clone()],
                    rest: BinaryTree::Leaf,
                    positions: (0..self.degree()).collect(),
                }];
                let rc = r.cuts();
                for a in l.cuts() {
                    for b in &rc {
                        let mut pieces = a.pieces.clone();
                        pieces.extend(b.pieces.iter().cloned());
                        let mut positions = a.positions.clone();
                        positions.extend(b.positions.iter().map(|p| p + shift));
                        out.push(Cut {
                            pieces,
                            rest: BinaryTree::node(a.rest.clone(), b.rest.clone()),
                            positions,
                        });
                    }
                }
                out
            }
        }
    }

    fn write(&self, word: &mut dyn Iterator<Item = Option<Letter>>, out: &mut String) {
        match self {
            BinaryTree::Leaf => out.push('|'),
            BinaryTree::Node(l, r) => {
                out.push('(');
                l.write(word, out);
                out.push(' ');
                write_dec(word.next().flatten(), out);
                out.push(' ');
                r.write(word, out);
                out.push(')');
            }
        }
    }

    fn parse_at(c: &mut Cursor) -> Result<(Self, Vec<Option<Letter>>)> {
        c.skip_ws();
        if c.eat("|") {
            return Ok((BinaryTree::Leaf, vec![]));
        }
        if !c.eat("(") {
            return Err(c.error("expected `|` or `(`"));
        }
        let (l, mut decs) = Self::parse_at(c)?;
        decs.push(c.decoration()?);
        let (r, rd) = Self::parse_at(c)?;
        decs.extend(rd);
        c.expect(")")?;
        Ok((BinaryTree::node(l, r), decs))
    }
}

impl Decorated<BinaryTree> {
    /// `Y[v] = | ∨_v |`
    pub fn y(v: Letter) -> Self {
        Decorated::raw(
            BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf),
            Word(vec![v]),
        )
    }

    /// Splits `Y1 ∨_v Y2` into its parts; `None` for the leaf.
    pub fn split(&self) -> Option<(Self, Letter, Self)> {
        match &self.shape {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => {
                let k = l.degree();
                Some((
                    Decorated::raw((**l).clone(), Word(self.word[..k].to_vec())),
                    self.word[k],
                    Decorated::raw((**r).clone(), Word(self.word[k + 1..].to_vec())),
                ))
            }
        }
    }
}

/// `l ∨_v r`; the new vertex lands between the two words.
pub fn graft_binary(
    l: &Decorated<BinaryTree>,
    v: Letter,
    r: &Decorated<BinaryTree>,
) -> Decorated<BinaryTree> {
    Decorated::raw(
        BinaryTree::node(l.shape.clone(), r.shape.clone()),
        Word::join(&[&l.word, &[v], &r.word]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_shape;

    #[test]
    fn roundtrip() {
        for s in ["|", "((| e1 |) e2 (| e3 |))", "(| e10 (| e2 |))"] {
            assert_eq!(Decorated::<BinaryTree>::parse(s).unwrap().to_string(), s);
        }
        for n in 0..5 {
            for t in BinaryTree::enumerate(n) {
                assert_eq!(parse_shape::<BinaryTree>(&t.bare()).unwrap(), t);
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(Decorated::<BinaryTree>::parse("(| e0 |)").is_err());
        assert!(Decorated::<BinaryTree>::parse("(| e1 |").is_err());
        assert!(Decorated::<BinaryTree>::parse("(| * |)").is_err());
        assert!(Decorated::<BinaryTree>::parse("| |").is_err());
    }

    #[test]
    fn graft_examples() {
        let leaf = Decorated::<BinaryTree>::unit();
        assert_eq!(graft_binary(&leaf, 4, &leaf), Decorated::y(4));
        let t = graft_binary(&Decorated::y(0), 1, &leaf);
        assert_eq!(t.word, Word(vec![0, 1]));
        assert_eq!(t.to_string(), "((| e1 |) e2 |)");
        assert_eq!(t.degree(), 2);
        let (l, v, r) = t.split().unwrap();
        assert_eq!((l, v, r), (Decorated::y(0), 1, leaf));
    }

    #[test]
    fn positions_in_gap_order() {
        assert!(BinaryTree::Leaf.canonical_positions().is_empty());
        let comb = parse_shape::<BinaryTree>("(| * (| * |))").unwrap();
        assert_eq!(comb.canonical_positions(), vec![vec![], vec![1]]);
        let bal = parse_shape::<BinaryTree>("((| * |) * (| * |))").unwrap();
        assert_eq!(bal.canonical_positions(), vec![vec![0], vec![], vec![1]]);
    }

    #[test]
    fn cuts_of_balanced_tree() {
        let bal = parse_shape::<BinaryTree>("((| * |) * (| * |))").unwrap();
        let cuts = bal.cuts();
        assert_eq!(cuts.len(), 5);
        let pos: Vec<_> = cuts.iter().map(|c| c.positions.clone()).collect();
        assert!(pos.contains(&vec![0, 2]));
        assert!(pos.contains(&vec![0, 1, 2]));
        assert!(pos.contains(&vec![]));
    }
}
