//! The braided tridendriform algebra P(V) on angularly decorated trees, its
//! braided Hopf structure, and the lush-tree algebra P_A(A) over a braided
//! algebra A together with the reduction P(A) → P_A(A).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::axioms::{check_braid_relation, check_op_braiding, check_ternary, check_unit_rules, Op};
use crate::braid::{Braiding, BraidingFile, ScalarRepr};
use crate::error::{Error, Result};
use crate::hopf::{basis_by_degree, check_bialgebra, cut_coproduct, tuples, Caches, Element, TreeHopf};
use crate::linear::{bilinear, LinComb, Letter, Rational, Word};
use crate::report::{differ, Report};
use crate::tensor::{braid_objects, braid_steps, collapse, Tensor};
use crate::trees::lush::{enumerate_lush, is_lush};
use crate::trees::{graft_unchecked, AngularTree, Decorated, Shape};

pub type AT = Decorated<AngularTree>;
pub type ATElement = Element<AngularTree>;

/// A finite-dimensional nonunital algebra with a braiding on its basis.
#[derive(Clone, Debug)]
pub struct BraidedAlgebraSpec {
    dim: usize,
    mult: Vec<Vec<Vec<(Letter, Rational)>>>,
    sigma: Braiding,
}

impl BraidedAlgebraSpec {
    /// Structure constants `(i, j, k, c)` meaning `e_i e_j += c e_k`, 0-based.
    pub fn new(sigma: Braiding, entries: &[(Letter, Letter, Letter, Rational)]) -> Result<Self> {
        let a = Self::new_unchecked(sigma, entries)?;
        a.validate()?;
        Ok(a)
    }

    pub fn new_unchecked(sigma: Braiding, entries: &[(Letter, Letter, Letter, Rational)]) -> Result<Self> {
        let dim = sigma.dim();
        let mut acc: Vec<Vec<BTreeMap<Letter, Rational>>> = vec![vec![BTreeMap::new(); dim]; dim];
        for (i, j, k, c) in entries {
            for &x in [i, j, k] {
                if x >= dim {
                    return Err(Error::LetterOutOfRange { letter: x + 1, dim });
                }
            }
            *acc[*i][*j].entry(*k).or_insert_with(Rational::zero) += c;
        }
        let mult = acc
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        Ok(BraidedAlgebraSpec { dim, mult, sigma })
    }

    /// The one-dimensional algebra `e1 e1 = e1` with the flip.
    pub fn trivial() -> Self {
        Self::new(Braiding::flip(1), &[(0, 0, 0, Rational::one())]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn braiding(&self) -> &Braiding {
        &self.sigma
    }

    pub fn product(&self, i: Letter, j: Letter) -> &[(Letter, Rational)] {
        &self.mult[i][j]
    }

    /// Multiplies letters `p, p+1` of every word.
    pub fn mul_at(&self, x: &LinComb<Word>, p: usize) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (w, c) in x.iter() {
            for (k, d) in self.product(w[p], w[p + 1]) {
                let mut v = w[..p].to_vec();
                v.push(*k);
                v.extend_from_slice(&w[p + 2..]);
                out.add_term(Word(v), c * d);
            }
        }
        out
    }

    /// Associativity, and `(μ⊗id)σ2σ1 = σ(id⊗μ)`, `(id⊗μ)σ1σ2 = σ(μ⊗id)`.
    pub fn validate(&self) -> Result<()> {
        let s = &self.sigma;
        for w in crate::trees::all_words(3, self.dim) {
            let x = LinComb::basis(w.clone());
            let l = self.mul_at(&self.mul_at(&x, 0), 0);
            let r = self.mul_at(&self.mul_at(&x, 1), 0);
            if l != r {
                return Err(Error::BadAlgebra(format!("not associative on {w}: {l} ≠ {r}")));
            }
            let l = self.mul_at(&s.apply_word(&[2, 1], &x), 0);
            let r = s.apply_word(&[1], &self.mul_at(&x, 1));
            if l != r {
                return Err(Error::BadAlgebra(format!("(μ⊗id)σ2σ1 ≠ σ(id⊗μ) on {w}: {l} ≠ {r}")));
            }
            let l = self.mul_at(&s.apply_word(&[1, 2], &x), 1);
            let r = s.apply_word(&[1], &self.mul_at(&x, 0));
            if l != r {
                return Err(Error::BadAlgebra(format!("(id⊗μ)σ1σ2 ≠ σ(μ⊗id) on {w}: {l} ≠ {r}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: ScalarRepr,
}

/// Algebra file: 1-based indices, omitted products are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub mult: Vec<MultEntry>,
    pub braiding: BraidingFile,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadAlgebra(e.to_string()))
    }

    pub fn build(&self, validate: bool) -> Result<BraidedAlgebraSpec> {
        let sigma = self.braiding.build(validate)?;
        if sigma.dim() != self.dim {
            return Err(Error::BadAlgebra("braiding dimension differs from `dim`".into()));
        }
        let mut es = Vec::new();
        for e in &self.mult {
            if [e.i, e.j, e.k].contains(&0) {
                return Err(Error::BadAlgebra("indices are 1-based".into()));
            }
            es.push((e.i - 1, e.j - 1, e.k - 1, e.c.value()?));
        }
        if validate {
            BraidedAlgebraSpec::new(sigma, &es)
        } else {
            BraidedAlgebraSpec::new_unchecked(sigma, &es)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriOp {
    Prec,
    Succ,
    Dot,
    Star,
}

/// `≺, ≻, ·, *` on angular trees. With an algebra attached, `·` multiplies
/// the two angle decorations that meet over a shared leaf.
pub struct AngularProducts {
    algebra: Option<BraidedAlgebraSpec>,
    memo: RefCell<HashMap<(AT, AT), ATElement>>,
}

fn graft_terms(branches: &[AT], angles: &[Letter], i: usize, middle: &ATElement) -> ATElement {
    let mut out = LinComb::zero();
    for (z, c) in middle.iter() {
        let mut bs = branches.to_vec();
        bs[i] = z.clone();
        out.add_term(graft_unchecked(&bs, angles), c.clone());
    }
    out
}

impl AngularProducts {
    pub fn plain() -> Self {
        AngularProducts {
            algebra: None,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lush(algebra: BraidedAlgebraSpec) -> Self {
        AngularProducts {
            algebra: Some(algebra),
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> Option<&BraidedAlgebraSpec> {
        self.algebra.as_ref()
    }

    pub fn basis_op(&self, op: TriOp, a: &AT, b: &AT) -> Result<ATElement> {
        if op != TriOp::Star && a.is_unit() && b.is_unit() {
            return Err(Error::UnitProduct(match op {
                TriOp::Prec => "≺",
                TriOp::Succ => "≻",
                _ => "·",
            }));
        }
        Ok(match op {
            TriOp::Prec => self.prec_b(a, b),
            TriOp::Succ => self.succ_b(a, b),
            TriOp::Dot => self.dot_b(a, b),
            TriOp::Star => self.star_b(a, b),
        })
    }

    pub fn op(&self, op: TriOp, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        bilinear(a, b, |x, y| self.basis_op(op, x, y))
    }

    pub fn prec(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        self.op(TriOp::Prec, a, b)
    }

    pub fn succ(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        self.op(TriOp::Succ, a, b)
    }

    pub fn dot(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        self.op(TriOp::Dot, a, b)
    }

    pub fn star(&self, a: &ATElement, b: &ATElement) -> ATElement {
        self.op(TriOp::Star, a, b).expect("star is total")
    }

    fn prec_b(&self, a: &AT, b: &AT) -> ATElement {
        if b.is_unit() {
            return LinComb::basis(a.clone());
        }
        let Some((bs, angles)) = a.split() else {
            return LinComb::zero();
        };
        let k = angles.len();
        graft_terms(&bs, &angles, k, &self.star_b(&bs[k], b))
    }

    fn succ_b(&self, a: &AT, b: &AT) -> ATElement {
        if a.is_unit() {
            return LinComb::basis(b.clone());
        }
        let Some((bs, angles)) = b.split() else {
            return LinComb::zero();
        };
        graft_terms(&bs, &angles, 0, &self.star_b(a, &bs[0]))
    }

    fn dot_b(&self, a: &AT, b: &AT) -> ATElement {
        let (Some((l, la)), Some((r, ra))) = (a.split(), b.split()) else {
            return LinComb::zero();
        };
        let k = la.len();
        let mut branches: Vec<AT> = l[..k].to_vec();
        if let (Some(alg), true) = (&self.algebra, l[k].is_unit() && r[0].is_unit()) {
            branches.extend_from_slice(&r[1..]);
            let mut out = LinComb::zero();
            for (m, c) in alg.product(la[k - 1], ra[0]) {
                let mut angles = la[..k - 1].to_vec();
                angles.push(*m);
                angles.extend_from_slice(&ra[1..]);
                out.add_term(graft_unchecked(&branches, &angles), c.clone());
            }
            return out;
        }
        branches.push(AT::unit());
        branches.extend_from_slice(&r[1..]);
        let mut angles = la.clone();
        angles.extend_from_slice(&ra);
        graft_terms(&branches, &angles, k, &self.star_b(&l[k], &r[0]))
    }

    fn star_b(&self, a: &AT, b: &AT) -> ATElement {
        if a.is_unit() {
            return LinComb::basis(b.clone());
        }
        if b.is_unit() {
            return LinComb::basis(a.clone());
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let mut v = self.prec_b(a, b);
        v.add_scaled(&self.succ_b(a, b), &Rational::one());
        v.add_scaled(&self.dot_b(a, b), &Rational::one());
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }
}

/// P(V) with a fixed braiding.
pub struct TridendriformHopf {
    sigma: Braiding,
    caches: Caches<AngularTree>,
    ops: AngularProducts,
}

impl TridendriformHopf {
    pub fn new(sigma: Braiding) -> Self {
        TridendriformHopf {
            sigma,
            caches: Caches::default(),
            ops: AngularProducts::plain(),
        }
    }

    pub fn ops(&self) -> &AngularProducts {
        &self.ops
    }

    pub fn coproduct_subforest(&self, x: &ATElement) -> LinComb<Tensor<AngularTree>> {
        x.map(|d| cut_coproduct(self, d))
    }
}

impl TreeHopf for TridendriformHopf {
    type S = AngularTree;

    fn braiding(&self) -> &Braiding {
        &self.sigma
    }

    fn caches(&self) -> &Caches<AngularTree> {
        &self.caches
    }

    fn mul(&self, a: &AT, b: &AT) -> ATElement {
        self.ops.star_b(a, b)
    }

    /// `Δ(T0 ∨_{v1} ... ∨_{vk} Tk) = T ⊗ | + Σ (A0*...*Ak) ⊗ (B0 ∨_{v1} ... ∨_{vk} Bk)`
    /// where each `Ai` is braided leftwards past the `B`s and `v`s before it.
    fn coproduct_raw(&self, t: &AT) -> LinComb<Tensor<AngularTree>> {
        let Some((bs, angles)) = t.split() else {
            return LinComb::basis(Tensor::pair(t, t));
        };
        let k = angles.len();
        let mut acc = self.coproduct_basis(&bs[0]);
        for i in 1..=k {
            let mut next = LinComb::zero();
            for (s, c) in acc.iter() {
                let s = s.insert_letter(s.arity(), angles[i - 1]);
                for (u, d) in self.coproduct_basis(&bs[i]).iter() {
                    next.add_term(s.join(u), c * d);
                }
            }
            acc = next;
        }
        // A0 B0 v1 A1 B1 ... vk Ak Bk  →  A0 ... Ak B0 v1 B1 ... vk Bk
        let steps: Vec<usize> = (1..=k).flat_map(|i| (i..3 * i).rev()).collect();
        let moved = braid_steps(&self.sigma, &acc, &steps);
        let starred = collapse(&moved, 0, k + 1, |m| {
            (1..=k).fold(LinComb::basis(m.part(0)), |p, i| self.ops.star(&p, &LinComb::basis(m.part(i))))
        });
        let mut out = collapse(&starred, 1, 2 * k + 1, |m| {
            let branches: Vec<AT> = (0..=k).map(|i| m.part(2 * i)).collect();
            let letters: Vec<Letter> = (1..=k).map(|i| m.letter(2 * i - 1)).collect();
            LinComb::basis(graft_unchecked(&branches, &letters))
        });
        out.add_term(Tensor::pair(t, &AT::unit()), Rational::one());
        out
    }
}

/// A tridendriform algebra that can receive the universal map from P(V).
pub trait TridendriformTarget {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn embed(&self, v: Letter) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Rational);
    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn dot(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

impl TridendriformTarget for AngularProducts {
    type Elem = ATElement;

    fn zero(&self) -> ATElement {
        LinComb::zero()
    }
    fn unit(&self) -> ATElement {
        LinComb::basis(AT::unit())
    }
    fn embed(&self, v: Letter) -> ATElement {
        LinComb::basis(AT::t(v))
    }
    fn add_scaled(&self, acc: &mut ATElement, x: &ATElement, c: &Rational) {
        acc.add_scaled(x, c);
    }
    fn prec(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        AngularProducts::prec(self, a, b)
    }
    fn succ(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        AngularProducts::succ(self, a, b)
    }
    fn dot(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        AngularProducts::dot(self, a, b)
    }
}

/// The homomorphism determined by `T[v] ↦ embed(v)`:
/// `k = 1`: `φ(T0) ≻ v1 ≺ φ(T1)`;
/// `k = 2`: `φ(T0) ≻ ((v1 ≺ φ(T1)) · v2) ≺ φ(T2)`;
/// `k > 2`: `φ(T0) ≻ (v1 · φ(T1 ∨ ... ∨ T_{k-1}) · vk) ≺ φ(Tk)`.
pub fn universal_map<T: TridendriformTarget>(target: &T, x: &ATElement) -> Result<T::Elem> {
    let mut out = target.zero();
    for (t, c) in x.iter() {
        target.add_scaled(&mut out, &universal_basis(target, t)?, c);
    }
    Ok(out)
}

fn universal_basis<T: TridendriformTarget>(target: &T, t: &AT) -> Result<T::Elem> {
    let Some((bs, angles)) = t.split() else {
        return Ok(target.unit());
    };
    let k = angles.len();
    let core = match k {
        1 => target.embed(angles[0]),
        2 => {
            let left = target.prec(&target.embed(angles[0]), &universal_basis(target, &bs[1])?)?;
            target.dot(&left, &target.embed(angles[1]))?
        }
        _ => {
            let middle = graft_unchecked(&bs[1..k], &angles[1..k - 1]);
            let left = target.dot(&target.embed(angles[0]), &universal_basis(target, &middle)?)?;
            target.dot(&left, &target.embed(angles[k - 1]))?
        }
    };
    let with_left = target.succ(&universal_basis(target, &bs[0])?, &core)?;
    target.prec(&with_left, &universal_basis(target, &bs[k])?)
}

/// The lush-tree algebra P_A(A).
pub struct LushQuotient {
    ops: AngularProducts,
}

impl LushQuotient {
    pub fn new(algebra: BraidedAlgebraSpec) -> Self {
        LushQuotient {
            ops: AngularProducts::lush(algebra),
        }
    }

    pub fn algebra(&self) -> &BraidedAlgebraSpec {
        self.ops.algebra().expect("lush products carry an algebra")
    }

    pub fn ops(&self) -> &AngularProducts {
        &self.ops
    }

    /// The projection of P(A) onto the lush trees along the ideal generated
    /// by `T[a]·T[b] - T[ab]`.
    pub fn reduce(&self, x: &ATElement) -> ATElement {
        universal_map(&self.ops, x).expect("reduction is total")
    }

    /// `·` on lush trees; rejects non-lush input.
    pub fn dot(&self, a: &ATElement, b: &ATElement) -> Result<ATElement> {
        if let Some(t) = a.keys().chain(b.keys()).find(|t| !is_lush(&t.shape)) {
            return Err(Error::NotLush(t.to_string()));
        }
        self.ops.dot(a, b)
    }

    /// `dim` of the degree-n part of the ideal: the rank of `x - reduce(x)`
    /// over the degree-n basis of P(A).
    pub fn ideal_dimension(&self, n: usize) -> usize {
        let basis = AT::all(&AngularTree::enumerate(n), self.algebra().dim());
        let vectors = basis.iter().map(|t| {
            let x = LinComb::basis(t.clone());
            &x - &self.reduce(&x)
        });
        rank(vectors)
    }

    /// `T[a]·T[b] - T[ab]` for all basis letters.
    pub fn generators(&self) -> Vec<((Letter, Letter), ATElement)> {
        let plain = AngularProducts::plain();
        let a = self.algebra();
        let mut out = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let mut g = plain.dot(&LinComb::basis(AT::t(i)), &LinComb::basis(AT::t(j))).expect("nonunit");
                for (k, c) in a.product(i, j) {
                    g.add_term(AT::t(*k), -c);
                }
                out.push(((i, j), g));
            }
        }
        out
    }
}

/// Rank over Q of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = LinComb<K>>) -> usize {
    let mut pivots: BTreeMap<K, BTreeMap<K, Rational>> = BTreeMap::new();
    for v in vectors {
        let mut row: BTreeMap<K, Rational> = v.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        while let Some((lead, c)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            match pivots.get(&lead) {
                Some(p) => {
                    let f = &c / &p[&lead];
                    for (k, d) in p {
                        let e = row.entry(k.clone()).or_insert_with(Rational::zero);
                        *e -= &f * d;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn nonunit_tuples(by: &[Vec<AT>], k: usize, max: usize) -> Vec<Vec<AT>> {
    let mut by = by.to_vec();
    by[0].clear();
    tuples(&by, k, max)
}

/// The seven axioms, unit rules and braided compatibilities for one set of
/// products, on all triples of non-unit basis elements.
fn check_tri_axioms(r: &mut Report, prefix: &str, sigma: &Braiding, ops: &AngularProducts, triples: &[Vec<AT>]) {
    let prec = |a: &ATElement, b: &ATElement| ops.prec(a, b);
    let succ = |a: &ATElement, b: &ATElement| ops.succ(a, b);
    let dot = |a: &ATElement, b: &ATElement| ops.dot(a, b);
    let star = |a: &ATElement, b: &ATElement| ops.star(a, b);
    let name = |n: &str| format!("{prefix}{n}");
    check_ternary(r, &name("tprec"), "(x≺y)≺z = x≺(y*z)", triples, |x, y, z| prec(&prec(x, y)?, z), |x, y, z| {
        prec(x, &star(y, z))
    });
    check_ternary(r, &name("tps"), "(x≻y)≺z = x≻(y≺z)", triples, |x, y, z| prec(&succ(x, y)?, z), |x, y, z| {
        succ(x, &prec(y, z)?)
    });
    check_ternary(r, &name("tsucc"), "x≻(y≻z) = (x*y)≻z", triples, |x, y, z| succ(x, &succ(y, z)?), |x, y, z| {
        succ(&star(x, y), z)
    });
    check_ternary(r, &name("tpc"), "(x·y)≺z = x·(y≺z)", triples, |x, y, z| prec(&dot(x, y)?, z), |x, y, z| {
        dot(x, &prec(y, z)?)
    });
    check_ternary(r, &name("tpsc"), "(x≺y)·z = x·(y≻z)", triples, |x, y, z| dot(&prec(x, y)?, z), |x, y, z| {
        dot(x, &succ(y, z)?)
    });
    check_ternary(r, &name("tsc"), "(x≻y)·z = x≻(y·z)", triples, |x, y, z| dot(&succ(x, y)?, z), |x, y, z| {
        succ(x, &dot(y, z)?)
    });
    check_ternary(r, &name("tc"), "(x·y)·z = x·(y·z)", triples, |x, y, z| dot(&dot(x, y)?, z), |x, y, z| {
        dot(x, &dot(y, z)?)
    });
    check_op_braiding(r, &name("bta1"), sigma, triples, &prec);
    check_op_braiding(r, &name("bta2"), sigma, triples, &succ);
    check_op_braiding(r, &name("bta3"), sigma, triples, &dot);
}

/// Tridendriform axioms, unit rules, braided compatibilities, grafting
/// compatibilities and the braided bialgebra identities of P(V).
pub fn check_tridendriform_suite(h: &TridendriformHopf, max: usize) -> Report {
    let mut r = Report::new("tridendriform");
    let sigma = h.braiding();
    check_braid_relation(&mut r, sigma);
    let by = basis_by_degree(h, max);
    let triples = nonunit_tuples(&by, 3, max);
    check_tri_axioms(&mut r, "", sigma, &h.ops, &triples);
    let singles: Vec<AT> = by.iter().flatten().cloned().collect();
    let ops = &h.ops;
    let prec = |a: &ATElement, b: &ATElement| ops.prec(a, b);
    let succ = |a: &ATElement, b: &ATElement| ops.succ(a, b);
    let dot = |a: &ATElement, b: &ATElement| ops.dot(a, b);
    let unit_ops: [(&str, Op<AngularTree>, bool, bool); 3] =
        [("≺", &prec, true, false), ("≻", &succ, false, true), ("·", &dot, false, false)];
    check_unit_rules(&mut r, &singles, &unit_ops);
    check_grafting_braiding(sigma, &by, max, &mut r);
    check_bialgebra(h, max, &mut r);
    r
}

/// `σ((T1 ∨ ... ∨ Tk) ⊗ T)` moves `T` leftwards past each branch and angle,
/// then regrafts; and the mirror image.
fn check_grafting_braiding(sigma: &Braiding, by: &[Vec<AT>], max: usize, r: &mut Report) {
    let mut by_nonunit = by.to_vec();
    by_nonunit[0].clear();
    let pairs: Vec<(AT, AT)> = tuples(by, 2, max)
        .into_iter()
        .filter(|p| !p[0].is_unit())
        .map(|p| (p[0].clone(), p[1].clone()))
        .collect();
    let spread = |x: &AT| {
        let (bs, angles) = x.split().expect("non-unit");
        let mut t = Tensor::of(&bs.iter().collect::<Vec<_>>());
        for (i, v) in angles.iter().enumerate() {
            t = t.insert_letter(2 * i + 1, *v);
        }
        t
    };
    let regraft = |m: &Tensor<AngularTree>| {
        let k = (m.arity() - 1) / 2;
        let branches: Vec<AT> = (0..=k).map(|i| m.part(2 * i)).collect();
        let letters: Vec<Letter> = (1..=k).map(|i| m.letter(2 * i - 1)).collect();
        LinComb::basis(graft_unchecked(&branches, &letters))
    };
    r.check("av1", pairs.iter(), |(x, t)| {
        let lhs = braid_objects(sigma, &LinComb::basis(x.clone()), &LinComb::basis(t.clone()));
        let s = spread(x);
        let n = s.arity();
        let steps: Vec<usize> = (0..n).rev().collect();
        let moved = braid_steps(sigma, &LinComb::basis(s.join(&Tensor::single(t))), &steps);
        let rhs = collapse(&moved, 1, n, regraft);
        differ(&format!("σ({x}⊗{t})"), &lhs, &rhs)
    });
    r.check("av2", pairs.iter(), |(x, t)| {
        let lhs = braid_objects(sigma, &LinComb::basis(t.clone()), &LinComb::basis(x.clone()));
        let s = spread(x);
        let n = s.arity();
        let moved = braid_steps(sigma, &LinComb::basis(Tensor::single(t).join(&s)), &(0..n).collect::<Vec<_>>());
        let rhs = collapse(&moved, 0, n, regraft);
        differ(&format!("σ({t}⊗{x})"), &lhs, &rhs)
    });
}

/// The braided Hopf identities of P(V) and agreement of the recursive
/// coproduct with the cut formula.
pub fn check_hopf_at_suite(h: &TridendriformHopf, max: usize) -> Report {
    let mut r = Report::new("hopf-at");
    check_bialgebra(h, max, &mut r);
    let singles: Vec<AT> = basis_by_degree(h, max).into_iter().flatten().collect();
    r.check("recursion-vs-subforest", singles.iter(), |x| {
        differ(&format!("Δ({x})"), &h.coproduct_basis(x), &cut_coproduct(h, x))
    });
    r
}

/// The lush products satisfy the tridendriform axioms; the reduction is an
/// idempotent tridendriform morphism fixing lush trees and killing the ideal,
/// whose dimension matches the tree counts; the ideal is a coideal.
pub fn check_lush_suite(q: &LushQuotient, max: usize) -> Report {
    let mut r = Report::new("lush-quotient");
    let alg = q.algebra();
    let sigma = alg.braiding();
    check_braid_relation(&mut r, sigma);
    r.record("algebra", alg.dim().pow(3), alg.validate().err().map(|e| e.to_string()));
    let lush_by: Vec<Vec<AT>> = (0..=max).map(|n| AT::all(&enumerate_lush(n), alg.dim())).collect();
    let triples = nonunit_tuples(&lush_by, 3, max);
    check_tri_axioms(&mut r, "lush-", sigma, &q.ops, &triples);
    let pairs = nonunit_tuples(&lush_by, 2, max);
    r.check("lush-closure", pairs.iter(), |p| {
        let (x, y) = (LinComb::basis(p[0].clone()), LinComb::basis(p[1].clone()));
        [TriOp::Prec, TriOp::Succ, TriOp::Dot].iter().find_map(|op| {
            let z = q.ops.op(*op, &x, &y).ok()?;
            let bad = z.keys().find(|t| !is_lush(&t.shape)).map(|t| format!("{op:?}({}, {}) has the non-lush term {t}", p[0], p[1]));
            bad
        })
    });
    let lush_singles: Vec<&AT> = lush_by.iter().flatten().collect();
    r.check("reduce-fixes-lush", lush_singles.iter(), |t| {
        let x = LinComb::basis((**t).clone());
        differ(&format!("reduce({t})"), &q.reduce(&x), &x)
    });
    let plain = TridendriformHopf::new(sigma.clone());
    let all_by = basis_by_degree(&plain, max);
    let singles: Vec<&AT> = all_by.iter().flatten().collect();
    r.check("reduce-idempotent", singles.iter(), |t| {
        let once = q.reduce(&LinComb::basis((**t).clone()));
        let lush_only = once.keys().find(|s| !is_lush(&s.shape)).map(|s| format!("reduce({t}) has the non-lush term {s}"));
        lush_only.or_else(|| differ(&format!("reduce(reduce({t}))"), &q.reduce(&once), &once))
    });
    let gens = q.generators();
    r.check("reduce-kills-generators", gens.iter(), |((i, j), g)| {
        let z = q.reduce(g);
        (!z.is_zero()).then(|| format!("reduce(T[e{}]·T[e{}] - T[e{}e{}]) = {z}", i + 1, j + 1, i + 1, j + 1))
    });
    let all_pairs = nonunit_tuples(&all_by, 2, max);
    r.check("reduce-morphism", all_pairs.iter(), |p| {
        let (x, y) = (LinComb::basis(p[0].clone()), LinComb::basis(p[1].clone()));
        let (rx, ry) = (q.reduce(&x), q.reduce(&y));
        [TriOp::Prec, TriOp::Succ, TriOp::Dot, TriOp::Star].iter().find_map(|op| {
            let lhs = q.reduce(&plain.ops.op(*op, &x, &y).ok()?);
            let rhs = q.ops.op(*op, &rx, &ry).ok()?;
            differ(&format!("reduce({} {op:?} {})", p[0], p[1]), &lhs, &rhs)
        })
    });
    let d = alg.dim();
    r.check("ideal-dimension", 0..=max, |&n| {
        let got = q.ideal_dimension(n);
        let want = (AngularTree::enumerate(n).len() - enumerate_lush(n).len()) * d.pow(n as u32);
        (got != want).then(|| format!("degree {n}: rank {got}, expected {want}"))
    });
    r.check("biideal", singles.iter(), |t| {
        let x = LinComb::basis((**t).clone());
        let ideal_part = &x - &q.reduce(&x);
        let both = reduce_both_legs(q, &plain.coproduct(&ideal_part));
        (!both.is_zero()).then(|| format!("(reduce⊗reduce)Δ({t} - reduce({t})) = {both}"))
    });
    r
}

/// `(reduce ⊗ reduce)` on two-leg tensors.
pub fn reduce_both_legs(q: &LushQuotient, x: &LinComb<Tensor<AngularTree>>) -> LinComb<Tensor<AngularTree>> {
    x.map(|t| {
        let l = q.reduce(&LinComb::basis(t.left()));
        let r = q.reduce(&LinComb::basis(t.right()));
        crate::tensor::tensor_lin(&l, &r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::counit;
    use crate::linear::int;

    fn t(s: &str) -> AT {
        AT::parse(s).unwrap()
    }

    fn e(s: &str) -> ATElement {
        LinComb::basis(t(s))
    }

    /// `e1 e1 = e2`, other products zero, with `σ` diagonal `q11 = -1`.
    fn nilpotent() -> BraidedAlgebraSpec {
        let q = vec![vec![int(-1), int(1)], vec![int(1), int(1)]];
        BraidedAlgebraSpec::new(Braiding::diagonal(&q).unwrap(), &[(0, 0, 1, int(1))]).unwrap()
    }

    #[test]
    fn products_of_generators() {
        let p = AngularProducts::plain();
        let (a, b) = (e("[| e1 |]"), e("[| e2 |]"));
        assert_eq!(p.dot(&a, &b).unwrap(), e("[| e1 | e2 |]"));
        assert_eq!(p.prec(&a, &b).unwrap(), e("[| e1 [| e2 |]]"));
        assert_eq!(p.succ(&a, &b).unwrap(), e("[[| e1 |] e2 |]"));
        assert_eq!(p.star(&a, &b).len(), 3);
        let u = e("|");
        assert_eq!(p.prec(&a, &u).unwrap(), a);
        assert_eq!(p.succ(&u, &a).unwrap(), a);
        assert!(p.dot(&a, &u).unwrap().is_zero());
        assert!(p.dot(&u, &u).is_err());
        assert!(p.prec(&u, &u).is_err());
    }

    #[test]
    fn lush_dot_merges_angles() {
        let q = LushQuotient::new(nilpotent());
        let (a, b) = (e("[| e1 |]"), e("[| e2 |]"));
        assert_eq!(q.dot(&a, &a).unwrap(), e("[| e2 |]"));
        assert!(q.dot(&a, &b).unwrap().is_zero());
        let x = e("[[| e1 |] e1 |]");
        assert_eq!(q.dot(&x, &a).unwrap(), e("[[| e1 |] e2 |]"));
        assert_eq!(q.dot(&a, &x).unwrap(), AngularProducts::plain().dot(&a, &x).unwrap());
        assert!(matches!(q.dot(&e("[| e1 | e1 |]"), &a), Err(Error::NotLush(_))));
        let tr = LushQuotient::new(BraidedAlgebraSpec::trivial());
        assert_eq!(tr.dot(&e("[| e1 |]"), &e("[| e1 |]")).unwrap(), e("[| e1 |]"));
    }

    #[test]
    fn reduce_examples() {
        let q = LushQuotient::new(nilpotent());
        assert_eq!(q.reduce(&e("[| e1 | e1 |]")), e("[| e2 |]"));
        assert!(q.reduce(&e("[| e1 | e2 |]")).is_zero());
        for (_, g) in q.generators() {
            assert!(q.reduce(&g).is_zero());
        }
        let tr = LushQuotient::new(BraidedAlgebraSpec::trivial());
        assert_eq!(tr.ideal_dimension(1), 0);
        assert_eq!(tr.ideal_dimension(2), 1);
        assert_eq!(tr.ideal_dimension(3), 5);
    }

    #[test]
    fn coproduct_small_cases() {
        let h = TridendriformHopf::new(Braiding::flip(2));
        let u = t("|");
        assert_eq!(h.coproduct(&e("|")), LinComb::basis(Tensor::pair(&u, &u)));
        let g = t("[| e1 |]");
        let want = &LinComb::basis(Tensor::pair(&g, &u)) + &LinComb::basis(Tensor::pair(&u, &g));
        assert_eq!(h.coproduct(&e("[| e1 |]")), want);
        let c = e("[| e1 | e2 |]");
        assert_eq!(h.coproduct(&c), h.coproduct_subforest(&c));
        assert_eq!(counit(&e("|")), int(1));
        assert_eq!(h.antipode(&e("[| e1 |]")), -&e("[| e1 |]"));
    }

    #[test]
    fn universal_map_into_itself_is_identity() {
        let p = AngularProducts::plain();
        for n in 0..=3 {
            for x in AT::all(&AngularTree::enumerate(n), 2) {
                let x = LinComb::basis(x);
                assert_eq!(universal_map(&p, &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn algebra_validation() {
        assert!(BraidedAlgebraSpec::new(Braiding::uniform_diagonal(1, int(2)), &[(0, 0, 0, int(1))]).is_err());
        let f = r#"{"dim":1,"mult":[{"i":1,"j":1,"k":1,"c":"1/1"}],"braiding":{"dim":1,"kind":"flip"}}"#;
        let a = AlgebraFile::from_json(f).unwrap().build(true).unwrap();
        assert_eq!(a.product(0, 0), &[(0, int(1))]);
    }

    #[test]
    fn suites_small() {
        for sigma in [Braiding::flip(2), Braiding::uniform_diagonal(1, int(2))] {
            let h = TridendriformHopf::new(sigma);
            let r = check_tridendriform_suite(&h, 2);
            assert!(r.all_pass(), "{}", r.to_plain());
            let r = check_hopf_at_suite(&h, 2);
            assert!(r.all_pass(), "{}", r.to_plain());
        }
        for a in [BraidedAlgebraSpec::trivial(), nilpotent()] {
            let r = check_lush_suite(&LushQuotient::new(a), 2);
            assert!(r.all_pass(), "{}", r.to_plain());
        }
    }
}
