use super::notation::{write_dec, Cursor};
use super::{sort_by_notation, Cut, Decorated, Position, Shape};
use crate::error::Result;
use crate::linear::{Letter, Word};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    pub children: Vec<RootedTree>,
}

/// Ordered sequence of planar rooted trees; the empty forest is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Forest(pub Vec<RootedTree>);

impl RootedTree {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    fn write(&self, word: &mut dyn Iterator<Item = Option<Letter>>, out: &mut String) {
        write_dec(word.next().flatten(), out);
        if !self.children.is_empty() {
            out.push('(');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                c.write(word, out);
            }
            out.push(')');
        }
    }

    fn parse_at(c: &mut Cursor, decs: &mut Vec<Option<Letter>>) -> Result<Self> {
        decs.push(c.decoration()?);
        let save = c.pos();
        c.skip_ws();
        let mut children = Vec::new();
        if c.eat("(") {
            loop {
                children.push(RootedTree::parse_at(c, decs)?);
                c.skip_ws();
                if c.eat(")") {
                    break;
                }
                if !c.at_decoration() {
                    return Err(c.error("expected a vertex or `)`"));
                }
            }
        } else {
            c.set_pos(save);
        }
        Ok(RootedTree { children })
    }

    fn positions_into(&self, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        out.push(path.clone());
        for (i, c) in self.children.iter().enumerate() {
            path.push(i);
            c.positions_into(path, out);
            path.pop();
        }
    }

    fn cuts(&self) -> Vec<Cut<Forest>> {
        let mut out = vec![Cut {
            pieces: vec![Forest(vec![self.clone()])],
            rest: Forest::default(),
            positions: (0..self.size()).collect(),
        }];
        let below = Forest(self.children.clone()).cuts();
        for c in below {
            out.push(Cut {
                pieces: c.pieces,
                rest: Forest(vec![RootedTree { children: c.rest.0 }]),
                positions: c.positions.into_iter().map(|p| p + 1).collect(),
            });
        }
        out
    }
}

impl Forest {
    pub fn size(&self) -> usize {
        self.0.iter().map(|t| t.size()).sum()
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Forest(v)
    }

    fn all(n: usize) -> Vec<Forest> {
        if n == 0 {
            return vec![Forest::default()];
        }
        let mut out = Vec::new();
        for m in 1..=n {
            let firsts: Vec<RootedTree> = Self::all(m - 1)
                .into_iter()
                .map(|f| RootedTree { children: f.0 })
                .collect();
            let rests = Self::all(n - m);
            for t in &firsts {
                for r in &rests {
                    let mut v = vec![t.clone()];
                    v.extend(r.0.iter().cloned());
                    out.push(Forest(v));
                }
            }
        }
        out
    }
}

impl Shape for Forest {
    fn slots(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        Forest::default()
    }

    fn enumerate(n: usize) -> Vec<Self> {
        sort_by_notation(Self::all(n))
    }

    fn canonical_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for (i, t) in self.0.iter().enumerate() {
            t.positions_into(&mut vec![i], &mut out);
        }
        out
    }

    /// Cuts of a forest are tuples of cuts of its trees.
    fn cuts(&self) -> Vec<Cut<Self>> {
        let mut acc = vec![Cut {
            pieces: vec![],
            rest: Forest::default(),
            positions: vec![],
        }];
        let mut shift = 0;
        for t in &self.0 {
            let tc = t.cuts();
            let mut next = Vec::with_capacity(acc.len() * tc.len());
            for a in &acc {
                for b in &tc {
                    let mut pieces = a.pieces.clone();
                    pieces.extend(b.pieces.iter().cloned());
                    let mut positions = a.positions.clone();
                    positions.extend(b.positions.iter().map(|p| p + shift));
                    next.push(Cut {
                        pieces,
                        rest: a.rest.concat(&b.rest),
                        positions,
                    });
                }
            }
            acc = next;
            shift += t.size();
        }
        acc
    }

    fn write(&self, word: &mut dyn Iterator<Item = Option<Letter>>, out: &mut String) {
        if self.0.is_empty() {
            out.push('1');
            return;
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            t.write(word, out);
        }
    }

    fn parse_at(c: &mut Cursor) -> Result<(Self, Vec<Option<Letter>>)> {
        c.skip_ws();
        if c.eat("1") || c.eat("∅") {
            return Ok((Forest::default(), vec![]));
        }
        let mut decs = Vec::new();
        let mut trees = vec![RootedTree::parse_at(c, &mut decs)?];
        // In a decorated forest a free-standing `*` is an operator, not a vertex.
        let lead = if decs[0].is_some() { 'e' } else { '*' };
        loop {
            let save = c.pos();
            c.skip_ws();
            if c.peek() == Some(lead) {
                trees.push(RootedTree::parse_at(c, &mut decs)?);
            } else {
                c.set_pos(save);
                break;
            }
        }
        Ok((Forest(trees), decs))
    }
}

impl Decorated<Forest> {
    /// The single vertex `•_v`.
    pub fn vertex(v: Letter) -> Self {
        Decorated::raw(Forest(vec![RootedTree { children: vec![] }]), Word(vec![v]))
    }

    /// Graft a forest under a new root decorated `v`.
    pub fn b_plus(v: Letter, f: &Decorated<Forest>) -> Self {
        let mut word = vec![v];
        word.extend_from_slice(&f.word);
        Decorated::raw(
            Forest(vec![RootedTree {
                children: f.shape.0.clone(),
            }]),
            Word(word),
        )
    }

    pub fn concat(&self, other: &Self) -> Self {
        Decorated::raw(self.shape.concat(&other.shape), self.word.concat(&other.word))
    }

    /// The trees of the forest, each as a one-tree decorated forest.
    pub fn trees(&self) -> Vec<Self> {
        let mut out = Vec::new();
        let mut off = 0;
        for t in &self.shape.0 {
            let n = t.size();
            out.push(Decorated::raw(
                Forest(vec![t.clone()]),
                Word(self.word[off..off + n].to_vec()),
            ));
            off += n;
        }
        out
    }

    /// For a single tree `B⁺_v(F)`, returns `(v, F)`.
    pub fn root_split(&self) -> Option<(Letter, Self)> {
        match self.shape.0.as_slice() {
            [t] => Some((
                self.word[0],
                Decorated::raw(Forest(t.children.clone()), Word(self.word[1..].to_vec())),
            )),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_shape;

    type F = Decorated<Forest>;

    #[test]
    fn roundtrip() {
        for s in ["1", "e1", "e1(e2 e3(e4 e5))", "e1(e2) e3", "e2 e1 e1(e1)"] {
            assert_eq!(F::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(F::parse("∅").unwrap(), F::unit());
        for n in 0..6 {
            for t in Forest::enumerate(n) {
                assert_eq!(parse_shape::<Forest>(&t.bare()).unwrap(), t);
            }
        }
    }

    #[test]
    fn preorder_positions_of_seven_vertex_forest() {
        let f = F::parse("e1(e2) e3(e4 e5(e6 e7))").unwrap();
        assert_eq!(
            f.shape.canonical_positions(),
            vec![
                vec![0],
                vec![0, 0],
                vec![1],
                vec![1, 0],
                vec![1, 1],
                vec![1, 1, 0],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn b_plus_examples() {
        assert_eq!(F::b_plus(3, &F::unit()), F::vertex(3));
        let ladder = F::b_plus(0, &F::vertex(1));
        assert_eq!(ladder.to_string(), "e1(e2)");
        let corolla = F::b_plus(0, &F::vertex(1).concat(&F::vertex(2)));
        assert_eq!(corolla.to_string(), "e1(e2 e3)");
        assert_eq!(corolla.root_split().unwrap(), (0, F::parse("e2 e3").unwrap()));
    }

    #[test]
    fn cut_counts() {
        let dot = parse_shape::<Forest>("*").unwrap();
        let cuts = dot.cuts();
        assert_eq!(cuts.len(), 2);
        assert_eq!(cuts[0].positions, vec![0]);
        assert!(cuts[1].pieces.is_empty());
        let t = parse_shape::<Forest>("*(* *(* *))").unwrap();
        assert_eq!(t.cuts().len(), 11);
    }

    #[test]
    fn bplus_bijection_counts() {
        for n in 0..7 {
            let fs = Forest::enumerate(n);
            let mut trees: Vec<_> = fs
                .iter()
                .map(|f| RootedTree { children: f.0.clone() })
                .collect();
            trees.sort();
            trees.dedup();
            assert_eq!(trees.len(), fs.len());
            let single = Forest::enumerate(n + 1).into_iter().filter(|f| f.0.len() == 1).count();
            assert_eq!(single, fs.len());
        }
    }
}
