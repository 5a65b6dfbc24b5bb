//! The braided dendriform algebra Y(V) on decorated planar binary trees and
//! its braided Hopf structure.
//!
//! The products `≺`, `≻`, `*` never braid: they act on shapes and concatenate
//! decoration words, so they are computed (and memoized) on shapes alone.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use num_bigint::BigInt;

use crate::axioms::{check_braid_relation, check_op_braiding, check_ternary, check_unit_rules};
use crate::braid::Braiding;
use crate::error::{Error, Result};
use crate::hopf::{basis_by_degree, check_bialgebra, cut_coproduct, tuples, Caches, Element, TreeHopf};
use crate::linear::{Canonical, LinComb, Letter, Rational};
use crate::report::{differ, Report};
use crate::tensor::{braid_objects, braid_steps, collapse, Tensor};
use crate::trees::lush::{catalan_numbers, compositions};
use crate::trees::{graft_binary, BinaryTree, Decorated};

pub type BT = Decorated<BinaryTree>;
pub type BTElement = Element<BinaryTree>;

thread_local! {
    static STAR: RefCell<HashMap<(BinaryTree, BinaryTree), LinComb<BinaryTree>>> =
        RefCell::new(HashMap::new());
}

/// `a * b` on shapes, with the leaf as unit.
pub fn star_shapes(a: &BinaryTree, b: &BinaryTree) -> LinComb<BinaryTree> {
    if *a == BinaryTree::Leaf {
        return LinComb::basis(b.clone());
    }
    if *b == BinaryTree::Leaf {
        return LinComb::basis(a.clone());
    }
    let key = (a.clone(), b.clone());
    if let Some(v) = STAR.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let v = &prec_shapes(a, b) + &succ_shapes(a, b);
    STAR.with(|m| m.borrow_mut().insert(key, v.clone()));
    v
}

/// `Y ≺ Y' = Y1 ∨ (Y2 * Y')`, `Y ≺ | = Y`, `| ≺ Y = 0`.
pub fn prec_shapes(a: &BinaryTree, b: &BinaryTree) -> LinComb<BinaryTree> {
    match (a, b) {
        (_, BinaryTree::Leaf) => LinComb::basis(a.clone()),
        (BinaryTree::Leaf, _) => LinComb::zero(),
        (BinaryTree::Node(a1, a2), _) => star_shapes(a2, b).map(|z| LinComb::basis(BinaryTree::node((**a1).clone(), z.clone()))),
    }
}

/// `Y ≻ Y' = (Y * Y'1) ∨ Y'2`, `| ≻ Y = Y`, `Y ≻ | = 0`.
pub fn succ_shapes(a: &BinaryTree, b: &BinaryTree) -> LinComb<BinaryTree> {
    match (a, b) {
        (BinaryTree::Leaf, _) => LinComb::basis(b.clone()),
        (_, BinaryTree::Leaf) => LinComb::zero(),
        (_, BinaryTree::Node(b1, b2)) => star_shapes(a, b1).map(|z| LinComb::basis(BinaryTree::node(z.clone(), (**b2).clone()))),
    }
}

fn with_word(shapes: LinComb<BinaryTree>, a: &BT, b: &BT) -> BTElement {
    let w = a.word.concat(&b.word);
    shapes.map(|s| LinComb::basis(Decorated::raw(s.clone(), w.clone())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendOp {
    Prec,
    Succ,
    Star,
}

impl DendOp {
    fn name(self) -> &'static str {
        match self {
            DendOp::Prec => "≺",
            DendOp::Succ => "≻",
            DendOp::Star => "*",
        }
    }
}

/// One product of two basis trees; `≺` and `≻` are undefined on `| ⊗ |`.
pub fn dend_basis(op: DendOp, a: &BT, b: &BT) -> Result<BTElement> {
    if op != DendOp::Star && a.is_unit() && b.is_unit() {
        return Err(Error::UnitProduct(op.name()));
    }
    let shapes = match op {
        DendOp::Prec => prec_shapes(&a.shape, &b.shape),
        DendOp::Succ => succ_shapes(&a.shape, &b.shape),
        DendOp::Star => star_shapes(&a.shape, &b.shape),
    };
    Ok(with_word(shapes, a, b))
}

pub fn dend_op(op: DendOp, a: &BTElement, b: &BTElement) -> Result<BTElement> {
    crate::linear::bilinear(a, b, |x, y| dend_basis(op, x, y))
}

pub fn dend_prec(a: &BTElement, b: &BTElement) -> Result<BTElement> {
    dend_op(DendOp::Prec, a, b)
}

pub fn dend_succ(a: &BTElement, b: &BTElement) -> Result<BTElement> {
    dend_op(DendOp::Succ, a, b)
}

pub fn dend_star(a: &BTElement, b: &BTElement) -> BTElement {
    dend_op(DendOp::Star, a, b).expect("star is total")
}

/// Y(V) with a fixed braiding.
pub struct DendriformHopf {
    sigma: Braiding,
    caches: Caches<BinaryTree>,
}

impl DendriformHopf {
    pub fn new(sigma: Braiding) -> Self {
        DendriformHopf {
            sigma,
            caches: Caches::default(),
        }
    }

    /// The cut formula, as an independent route to the coproduct.
    pub fn coproduct_subforest(&self, x: &BTElement) -> LinComb<Tensor<BinaryTree>> {
        x.map(|d| cut_coproduct(self, d))
    }

    pub fn braid_bt(&self, a: &BTElement, b: &BTElement) -> LinComb<Tensor<BinaryTree>> {
        TreeHopf::braid(self, a, b)
    }
}

impl TreeHopf for DendriformHopf {
    type S = BinaryTree;

    fn braiding(&self) -> &Braiding {
        &self.sigma
    }

    fn caches(&self) -> &Caches<BinaryTree> {
        &self.caches
    }

    fn mul(&self, a: &BT, b: &BT) -> BTElement {
        with_word(star_shapes(&a.shape, &b.shape), a, b)
    }

    /// `Δ(Y1 ∨_v Y2) = Y ⊗ | + (*⊗∨)(σ_BT)_2(σ_{V,Y})_3 (ΔY1 ⊗ v ⊗ ΔY2)`
    fn coproduct_raw(&self, y: &BT) -> LinComb<Tensor<BinaryTree>> {
        let Some((l, v, r)) = y.split() else {
            return LinComb::basis(Tensor::pair(y, y));
        };
        let mut five = LinComb::zero();
        for (s, c) in self.coproduct_basis(&l).iter() {
            for (t, d) in self.coproduct_basis(&r).iter() {
                five.add_term(s.join(t).insert_letter(2, v), c * d);
            }
        }
        // A ⊗ B ⊗ v ⊗ C ⊗ D  →  A ⊗ C ⊗ B ⊗ v ⊗ D
        let moved = braid_steps(&self.sigma, &five, &[2, 1]);
        let grafted = collapse(&moved, 2, 3, |m| {
            LinComb::basis(graft_binary(&m.part(0), m.letter(1), &m.part(2)))
        });
        let mut out = collapse(&grafted, 0, 2, |m| self.mul(&m.part(0), &m.part(1)));
        out.add_term(Tensor::pair(y, &BT::unit()), Rational::one());
        out
    }
}

/// A dendriform algebra that can receive the universal map from Y(V).
pub trait DendriformTarget {
    type Elem: Clone;
    type Pair;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn embed(&self, v: Letter) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Rational);
    fn prec(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn succ(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn braid(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Pair;
}

impl DendriformTarget for DendriformHopf {
    type Elem = BTElement;
    type Pair = LinComb<Tensor<BinaryTree>>;

    fn zero(&self) -> BTElement {
        LinComb::zero()
    }
    fn unit(&self) -> BTElement {
        LinComb::basis(BT::unit())
    }
    fn embed(&self, v: Letter) -> BTElement {
        LinComb::basis(BT::y(v))
    }
    fn add_scaled(&self, acc: &mut BTElement, x: &BTElement, c: &Rational) {
        acc.add_scaled(x, c);
    }
    fn prec(&self, a: &BTElement, b: &BTElement) -> Result<BTElement> {
        dend_prec(a, b)
    }
    fn succ(&self, a: &BTElement, b: &BTElement) -> Result<BTElement> {
        dend_succ(a, b)
    }
    fn braid(&self, a: &BTElement, b: &BTElement) -> Self::Pair {
        self.braid_bt(a, b)
    }
}

/// `φ̄(|) = 1`, `φ̄(Y ∨_v Y') = (φ̄(Y) ≻ φ(v)) ≺ φ̄(Y')`.
pub fn universal_map<T: DendriformTarget>(target: &T, a: &BTElement) -> Result<T::Elem> {
    let mut out = target.zero();
    for (y, c) in a.iter() {
        target.add_scaled(&mut out, &universal_basis(target, y)?, c);
    }
    Ok(out)
}

fn universal_basis<T: DendriformTarget>(target: &T, y: &BT) -> Result<T::Elem> {
    match y.split() {
        None => Ok(target.unit()),
        Some((l, v, r)) => {
            let left = universal_basis(target, &l)?;
            let mid = target.succ(&left, &target.embed(v))?;
            target.prec(&mid, &universal_basis(target, &r)?)
        }
    }
}

/// A product `g1 * g2 * ... * gk` of generators `| ∨_v Y'`; empty means `|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<BT>);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "|");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

impl Canonical for Monomial {
    fn canonical(&self) -> String {
        self.to_string()
    }
}

pub fn is_generator(y: &BT) -> bool {
    matches!(&y.shape, BinaryTree::Node(l, _) if **l == BinaryTree::Leaf)
}

/// Rewrites a tree as a polynomial in generators `| ∨_v Y'` using
/// `Y = Y1 * (| ∨_v Y2) - Y11 ∨_u (Y12 * (| ∨_v Y2))` for `Y1 = Y11 ∨_u Y12`.
pub fn generator_decomposition(y: &BT) -> LinComb<Monomial> {
    let Some((y1, v, y2)) = y.split() else {
        return LinComb::basis(Monomial(vec![]));
    };
    let g = graft_binary(&BT::unit(), v, &y2);
    let Some((y11, u, y12)) = y1.split() else {
        return LinComb::basis(Monomial(vec![g]));
    };
    let mut out = generator_decomposition(&y1).map(|m| {
        let mut gs = m.0.clone();
        gs.push(g.clone());
        LinComb::basis(Monomial(gs))
    });
    let inner = dend_star(&LinComb::basis(y12), &LinComb::basis(g.clone()));
    for (z, c) in inner.iter() {
        let t = graft_binary(&y11, u, z);
        out.add_scaled(&generator_decomposition(&t), &-c);
    }
    out
}

/// Multiplies out a generator polynomial with `*`.
pub fn evaluate_monomials(x: &LinComb<Monomial>) -> BTElement {
    x.map(|m| {
        m.0.iter().fold(LinComb::basis(BT::unit()), |acc, g| {
            dend_star(&acc, &LinComb::basis(g.clone()))
        })
    })
}

/// `Σ_{(k_1..k_r) ⊨ n} Π C_{k_i - 1}`: the dimension of the degree-n part of
/// the tensor algebra on generators `| ∨ Y'`, one generator shape per Catalan
/// tree of degree `k - 1`.
pub fn free_generation_dimension(n: usize) -> BigInt {
    let cat = catalan_numbers(n);
    compositions(n)
        .iter()
        .map(|c| c.iter().map(|&k| cat[k - 1].clone()).product::<BigInt>())
        .sum()
}

fn nonunit_tuples(h: &DendriformHopf, k: usize, max: usize) -> Vec<Vec<BT>> {
    let mut by = basis_by_degree(h, max);
    by[0].clear();
    tuples(&by, k, max)
}

/// Dendriform axioms, braided compatibilities, grafting compatibilities,
/// unit rules, and the braided bialgebra identities.
pub fn check_dendriform_suite(h: &DendriformHopf, max: usize) -> Report {
    let mut r = Report::new("dendriform");
    let sigma = h.braiding();
    check_braid_relation(&mut r, sigma);
    let triples = nonunit_tuples(h, 3, max);
    check_ternary(&mut r, "prec", "(x≺y)≺z = x≺(y*z)", &triples, |x, y, z| dend_prec(&dend_prec(x, y)?, z), |x, y, z| {
        dend_prec(x, &dend_star(y, z))
    });
    check_ternary(&mut r, "ps", "(x≻y)≺z = x≻(y≺z)", &triples, |x, y, z| dend_prec(&dend_succ(x, y)?, z), |x, y, z| {
        dend_succ(x, &dend_prec(y, z)?)
    });
    check_ternary(&mut r, "succ", "(x*y)≻z = x≻(y≻z)", &triples, |x, y, z| dend_succ(&dend_star(x, y), z), |x, y, z| {
        dend_succ(x, &dend_succ(y, z)?)
    });
    check_op_braiding(&mut r, "bda1", sigma, &triples, &dend_prec);
    check_op_braiding(&mut r, "bda2", sigma, &triples, &dend_succ);
    check_grafting_braiding(h, max, &mut r);
    let singles: Vec<BT> = basis_by_degree(h, max).into_iter().flatten().collect();
    check_unit_rules(&mut r, &singles, &[("≺", &dend_prec, true, false), ("≻", &dend_succ, false, true)]);
    check_bialgebra(h, max, &mut r);
    r
}

/// `σ((Y ∨_v Y') ⊗ Y'') = (id⊗∨)σ1σ2σ3(Y⊗v⊗Y'⊗Y'')` and its mirror.
fn check_grafting_braiding(h: &DendriformHopf, max: usize, r: &mut Report) {
    let sigma = h.braiding();
    let by = basis_by_degree(h, max.saturating_sub(1));
    let mut instances = Vec::new();
    for t in tuples(&by, 3, max.saturating_sub(1)) {
        for v in 0..sigma.dim() {
            instances.push((t.clone(), v));
        }
    }
    let graft = |m: &Tensor<BinaryTree>| LinComb::basis(graft_binary(&m.part(0), m.letter(1), &m.part(2)));
    r.check("tv1", instances.iter(), |(t, v)| {
        let lhs = braid_objects(sigma, &LinComb::basis(graft_binary(&t[0], *v, &t[1])), &LinComb::basis(t[2].clone()));
        let x = LinComb::basis(Tensor::of(&[&t[0], &t[1], &t[2]]).insert_letter(1, *v));
        let rhs = collapse(&braid_steps(sigma, &x, &[2, 1, 0]), 1, 3, graft);
        differ(&format!("σ(({} ∨_e{} {})⊗{})", t[0], v + 1, t[1], t[2]), &lhs, &rhs)
    });
    r.check("tv2", instances.iter(), |(t, v)| {
        let lhs = braid_objects(sigma, &LinComb::basis(t[0].clone()), &LinComb::basis(graft_binary(&t[1], *v, &t[2])));
        let x = LinComb::basis(Tensor::of(&[&t[0], &t[1], &t[2]]).insert_letter(2, *v));
        let rhs = collapse(&braid_steps(sigma, &x, &[0, 1, 2]), 0, 3, graft);
        differ(&format!("σ({}⊗({} ∨_e{} {}))", t[0], t[1], v + 1, t[2]), &lhs, &rhs)
    });
}

/// The braided Hopf identities, plus agreement of the recursive coproduct
/// with the cut formula.
pub fn check_hopf_bt_suite(h: &DendriformHopf, max: usize) -> Report {
    let mut r = Report::new("hopf-bt");
    check_bialgebra(h, max, &mut r);
    let singles: Vec<BT> = basis_by_degree(h, max).into_iter().flatten().collect();
    r.check("recursion-vs-subforest", singles.iter(), |x| {
        differ(&format!("Δ({x})"), &h.coproduct_basis(x), &cut_coproduct(h, x))
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::counit;
    use crate::linear::int;

    fn y(s: &str) -> BT {
        BT::parse(s).unwrap()
    }

    fn e(s: &str) -> BTElement {
        LinComb::basis(y(s))
    }

    #[test]
    fn free_generation_matches_catalan() {
        let cat = catalan_numbers(10);
        for n in 1..=10 {
            assert_eq!(free_generation_dimension(n), cat[n]);
        }
    }

    #[test]
    fn suites_pass_at_degree_two() {
        for sigma in [Braiding::flip(2), Braiding::uniform_diagonal(1, int(2))] {
            let h = DendriformHopf::new(sigma);
            let r = check_dendriform_suite(&h, 2);
            assert!(r.all_pass(), "{}", r.to_plain());
            let r = check_hopf_bt_suite(&h, 3);
            assert!(r.all_pass(), "{}", r.to_plain());
        }
    }

    #[test]
    fn unit_rules() {
        let t = e("((| e1 |) e2 |)");
        let u = e("|");
        assert_eq!(dend_prec(&t, &u).unwrap(), t);
        assert_eq!(dend_succ(&u, &t).unwrap(), t);
        assert!(dend_succ(&t, &u).unwrap().is_zero());
        assert!(dend_prec(&u, &t).unwrap().is_zero());
        assert_eq!(dend_prec(&u, &u), Err(Error::UnitProduct("≺")));
        assert!(dend_succ(&u, &u).is_err());
        assert_eq!(dend_star(&u, &u), u);
    }

    #[test]
    fn small_products() {
        let a = e("(| e1 |)");
        let b = e("(| e2 |)");
        assert_eq!(dend_prec(&a, &b).unwrap(), e("(| e1 (| e2 |))"));
        assert_eq!(dend_succ(&a, &b).unwrap(), e("((| e1 |) e2 |)"));
        let s = dend_star(&a, &b);
        assert_eq!(s.len(), 2);
        assert_eq!(s, &e("(| e1 (| e2 |))") + &e("((| e1 |) e2 |)"));
    }

    #[test]
    fn star_term_counts() {
        let c = e("(| e3 |)");
        assert_eq!(dend_star(&e("((| e1 |) e2 |)"), &c).len(), 2);
        assert_eq!(dend_star(&e("(| e1 (| e2 |))"), &c).len(), 3);
    }

    #[test]
    fn coproduct_small_cases() {
        let h = DendriformHopf::new(Braiding::flip(2));
        let u = y("|");
        assert_eq!(h.coproduct(&e("|")), LinComb::basis(Tensor::pair(&u, &u)));
        let g = y("(| e1 |)");
        let expected = &LinComb::basis(Tensor::pair(&g, &u)) + &LinComb::basis(Tensor::pair(&u, &g));
        assert_eq!(h.coproduct(&e("(| e1 |)")), expected);
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&e("|")), int(1));
        assert_eq!(counit(&e("(| e1 |)")), int(0));
        let x = &e("|").scale(&int(3)) + &e("(| e1 |)").scale(&int(2));
        assert_eq!(counit(&x), int(3));
    }

    #[test]
    fn antipode_of_primitive() {
        let h = DendriformHopf::new(Braiding::uniform_diagonal(2, int(2)));
        assert_eq!(h.antipode(&e("|")), e("|"));
        assert_eq!(h.antipode(&e("(| e2 |)")), -&e("(| e2 |)"));
    }

    #[test]
    fn universal_map_into_itself_is_identity() {
        let h = DendriformHopf::new(Braiding::flip(2));
        assert_eq!(universal_map(&h, &e("|")).unwrap(), e("|"));
        assert_eq!(universal_map(&h, &e("(| e2 |)")).unwrap(), e("(| e2 |)"));
        for n in 0..=3 {
            for t in h.basis(n) {
                let x = LinComb::basis(t);
                assert_eq!(universal_map(&h, &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn generator_decomposition_example() {
        let t = y("((| e1 (| e2 |)) e3 |)");
        let d = generator_decomposition(&t);
        let mut expected = LinComb::zero();
        expected.add_term(Monomial(vec![y("(| e1 (| e2 |))"), y("(| e3 |)")]), int(1));
        let star = dend_star(&e("(| e2 |)"), &e("(| e3 |)"));
        for (z, c) in star.iter() {
            expected.add_term(Monomial(vec![graft_binary(&y("|"), 0, z)]), -c);
        }
        assert_eq!(d, expected);
        let g = y("(| e1 ((| e2 |) e3 |))");
        assert_eq!(generator_decomposition(&g), LinComb::basis(Monomial(vec![g])));
    }

    #[test]
    fn generator_decomposition_reevaluates() {
        for n in 1..=4 {
            for t in BT::all(&<BinaryTree as crate::trees::Shape>::enumerate(n), 1) {
                let d = generator_decomposition(&t);
                assert!(d.keys().all(|m| m.0.iter().all(is_generator)));
                assert_eq!(evaluate_monomials(&d), LinComb::basis(t));
            }
        }
    }
}
