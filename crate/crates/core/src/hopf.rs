//! Operations and identities shared by the three braided Hopf algebras of
//! trees: extension to linear combinations, counit, antipode, and the
//! bialgebra/braided-coalgebra identity checks.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::braid::{Braiding, Permutation};
use crate::linear::{LinComb, Rational};
use crate::report::{differ, Report};
use crate::tensor::{braid_adjacent, braid_steps, collapse, expand, Tensor};
use crate::trees::{Decorated, Shape};

pub type Element<S> = LinComb<Decorated<S>>;

/// Memo tables for basis-level coproducts and antipodes.
pub struct Caches<S: Shape> {
    coproduct: RefCell<HashMap<Decorated<S>, LinComb<Tensor<S>>>>,
    antipode: RefCell<HashMap<Decorated<S>, Element<S>>>,
}

impl<S: Shape> Default for Caches<S> {
    fn default() -> Self {
        Caches {
            coproduct: RefCell::new(HashMap::new()),
            antipode: RefCell::new(HashMap::new()),
        }
    }
}

/// A connected braided bialgebra with a basis of decorated trees.
pub trait TreeHopf {
    type S: Shape;

    fn braiding(&self) -> &Braiding;
    fn caches(&self) -> &Caches<Self::S>;
    /// Unital product of two basis elements.
    fn mul(&self, a: &Decorated<Self::S>, b: &Decorated<Self::S>) -> Element<Self::S>;
    /// Uncached coproduct of a basis element.
    fn coproduct_raw(&self, a: &Decorated<Self::S>) -> LinComb<Tensor<Self::S>>;

    /// Basis elements of degree `n`.
    fn basis(&self, n: usize) -> Vec<Decorated<Self::S>> {
        Decorated::all(&Self::S::enumerate(n), self.braiding().dim())
    }

    /// Whether products add degrees.
    fn graded_product(&self) -> bool {
        true
    }

    fn coproduct_basis(&self, a: &Decorated<Self::S>) -> LinComb<Tensor<Self::S>> {
        if let Some(v) = self.caches().coproduct.borrow().get(a) {
            return v.clone();
        }
        let v = self.coproduct_raw(a);
        self.caches().coproduct.borrow_mut().insert(a.clone(), v.clone());
        v
    }

    fn mul_lin(&self, a: &Element<Self::S>, b: &Element<Self::S>) -> Element<Self::S> {
        let mut out = LinComb::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                out.add_scaled(&self.mul(x, y), &(c * d));
            }
        }
        out
    }

    fn coproduct(&self, x: &Element<Self::S>) -> LinComb<Tensor<Self::S>> {
        x.map(|d| self.coproduct_basis(d))
    }

    fn antipode_basis(&self, d: &Decorated<Self::S>) -> Element<Self::S> {
        if d.is_unit() {
            return LinComb::basis(d.clone());
        }
        if let Some(v) = self.caches().antipode.borrow().get(d) {
            return v.clone();
        }
        // S(d) = -Σ S(d')*d'' over the terms whose left leg is smaller than d;
        // the remaining term is d ⊗ 1.
        let mut out = LinComb::zero();
        for (t, c) in self.coproduct_basis(d).iter() {
            let (l, r) = (t.left(), t.right());
            if l.degree() >= d.degree() {
                debug_assert!(r.is_unit() && l == *d);
                continue;
            }
            let s = self.antipode_basis(&l);
            out.add_scaled(&self.mul_lin(&s, &LinComb::basis(r)), &-c);
        }
        self.caches().antipode.borrow_mut().insert(d.clone(), out.clone());
        out
    }

    fn antipode(&self, x: &Element<Self::S>) -> Element<Self::S> {
        x.map(|d| self.antipode_basis(d))
    }

    /// Tree-level braiding `σ(a ⊗ b)`.
    fn braid(&self, a: &Element<Self::S>, b: &Element<Self::S>) -> LinComb<Tensor<Self::S>> {
        crate::tensor::braid_objects(self.braiding(), a, b)
    }
}

/// The cut formula: `Σ_P (P* ⊗ Y/P) T^σ_{w_P⁻¹}(word)`, where `w_P` lists
/// the slots of the cut first and the remaining slots after, both in
/// canonical order, and `P*` is the product of the pieces left to right.
pub fn cut_coproduct<H: TreeHopf>(h: &H, d: &Decorated<H::S>) -> LinComb<Tensor<H::S>> {
    let n = d.degree();
    let mut out = LinComb::zero();
    for cut in d.shape.cuts() {
        let dp = cut.positions.len();
        let mut images = cut.positions.clone();
        images.extend((0..n).filter(|p| !cut.positions.contains(p)));
        let wp = Permutation::from_images(images).expect("cut positions form a permutation");
        let moved = h
            .braiding()
            .lift(&wp.inverse(), &LinComb::basis(d.word.clone()))
            .expect("word length matches");
        for (w, c) in moved.iter() {
            let mut prod: Element<H::S> = LinComb::basis(Decorated::unit());
            let mut off = 0;
            for piece in &cut.pieces {
                let k = piece.slots();
                let p = Decorated {
                    shape: piece.clone(),
                    word: crate::linear::Word(w[off..off + k].to_vec()),
                };
                off += k;
                prod = h.mul_lin(&prod, &LinComb::basis(p));
            }
            let rest = Decorated {
                shape: cut.rest.clone(),
                word: crate::linear::Word(w[dp..].to_vec()),
            };
            for (p, e) in prod.iter() {
                out.add_term(Tensor::pair(p, &rest), c * e);
            }
        }
    }
    out
}

/// Coefficient of the unit.
pub fn counit<S: Shape>(x: &Element<S>) -> Rational {
    x.coeff(&Decorated::unit())
}

/// Applies the counit to factor `i` of each tensor, removing that factor.
pub fn counit_factor<S: Shape>(x: &LinComb<Tensor<S>>, i: usize) -> LinComb<Tensor<S>> {
    let mut out = LinComb::zero();
    for (t, c) in x.iter() {
        if t.part(i).is_unit() {
            let mut factors = t.factors.clone();
            factors.remove(i);
            out.add_term(
                Tensor {
                    factors,
                    word: t.word.clone(),
                },
                c.clone(),
            );
        }
    }
    out
}

pub fn tensor_basis<S: Shape>(parts: &[&Decorated<S>]) -> LinComb<Tensor<S>> {
    LinComb::basis(Tensor::of(parts))
}

fn single<S: Shape>(x: &Element<S>) -> LinComb<Tensor<S>> {
    x.map(|d| LinComb::basis(Tensor::single(d)))
}

/// Basis elements grouped by degree `0..=max`.
pub fn basis_by_degree<H: TreeHopf>(h: &H, max: usize) -> Vec<Vec<Decorated<H::S>>> {
    (0..=max).map(|n| h.basis(n)).collect()
}

/// All `k`-tuples of basis elements with total degree at most `max`.
pub fn tuples<T: Clone>(by_degree: &[Vec<T>], k: usize, max: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    fn rec<T: Clone>(by: &[Vec<T>], k: usize, left: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left.min(by.len() - 1) {
            for x in &by[d] {
                cur.push(x.clone());
                rec(by, k, left - d, cur, out);
                cur.pop();
            }
        }
    }
    rec(by_degree, k, max, &mut Vec::new(), &mut out);
    out
}

fn mul_tensor<H: TreeHopf>(h: &H, x: &LinComb<Tensor<H::S>>, i: usize) -> LinComb<Tensor<H::S>> {
    collapse(x, i, 2, |t| h.mul(&t.part(0), &t.part(1)))
}

/// `(μ⊗μ) σ_2 (Δa ⊗ Δb)`
pub fn coproduct_of_product_rhs<H: TreeHopf>(
    h: &H,
    da: &LinComb<Tensor<H::S>>,
    db: &LinComb<Tensor<H::S>>,
) -> LinComb<Tensor<H::S>> {
    let mut four = LinComb::zero();
    for (s, c) in da.iter() {
        for (t, d) in db.iter() {
            four.add_term(s.join(t), c * d);
        }
    }
    let mixed = braid_adjacent(h.braiding(), &four, 1);
    mul_tensor(h, &mul_tensor(h, &mixed, 2), 0)
}

/// Coalgebra, bialgebra, braided-coalgebra and antipode identities, and the
/// braided-algebra identities of the product, on all basis tuples of total
/// degree at most `max`.
pub fn check_bialgebra<H: TreeHopf>(h: &H, max: usize, report: &mut Report) {
    let by = basis_by_degree(h, max);
    let singles: Vec<Decorated<H::S>> = by.iter().flatten().cloned().collect();
    let pairs = tuples(&by, 2, max);
    let triples = tuples(&by, 3, max);
    let sigma = h.braiding();

    report.check("coassociativity", singles.iter(), |x| {
        let d = h.coproduct_basis(x);
        let l = expand(&d, 0, |a| h.coproduct_basis(a));
        let r = expand(&d, 1, |a| h.coproduct_basis(a));
        differ(&format!("(Δ⊗id)Δ vs (id⊗Δ)Δ on {x}"), &l, &r)
    });
    report.check("counit", singles.iter(), |x| {
        let d = h.coproduct_basis(x);
        let id = single(&LinComb::basis((*x).clone()));
        differ(&format!("(ε⊗id)Δ on {x}"), &counit_factor(&d, 0), &id)
            .or_else(|| differ(&format!("(id⊗ε)Δ on {x}"), &counit_factor(&d, 1), &id))
    });
    if h.graded_product() {
        report.check("coproduct-grading", singles.iter(), |x| {
            h.coproduct_basis(x)
                .keys()
                .find(|t| t.word.len() != x.degree())
                .map(|t| format!("term {t} of Δ({x}) has the wrong degree"))
        });
    }
    report.check("unit", singles.iter(), |x| {
        let e = LinComb::basis((*x).clone());
        let u = Decorated::unit();
        differ(&format!("1*{x}"), &h.mul(&u, x), &e).or_else(|| differ(&format!("{x}*1"), &h.mul(x, &u), &e))
    });
    report.check("associativity", triples.iter(), |v| {
        let l = h.mul_lin(&h.mul(&v[0], &v[1]), &LinComb::basis(v[2].clone()));
        let r = h.mul_lin(&LinComb::basis(v[0].clone()), &h.mul(&v[1], &v[2]));
        differ(&format!("({}*{})*{} vs {}*({}*{})", v[0], v[1], v[2], v[0], v[1], v[2]), &l, &r)
    });
    report.check("bialgebra", pairs.iter(), |v| {
        let l = h.coproduct(&h.mul(&v[0], &v[1]));
        let r = coproduct_of_product_rhs(h, &h.coproduct_basis(&v[0]), &h.coproduct_basis(&v[1]));
        differ(&format!("Δ({}*{})", v[0], v[1]), &l, &r)
    });
    report.check("braided-coalgebra-bc1", pairs.iter(), |v| {
        let xy = tensor_basis(&[&v[0], &v[1]]);
        // σ1σ2(Δ⊗id) = (id⊗Δ)σ
        let l = braid_steps(sigma, &expand(&xy, 0, |a| h.coproduct_basis(a)), &[1, 0]);
        let r = expand(&braid_adjacent(sigma, &xy, 0), 1, |a| h.coproduct_basis(a));
        // σ2σ1(id⊗Δ) = (Δ⊗id)σ
        let l2 = braid_steps(sigma, &expand(&xy, 1, |a| h.coproduct_basis(a)), &[0, 1]);
        let r2 = expand(&braid_adjacent(sigma, &xy, 0), 0, |a| h.coproduct_basis(a));
        differ(&format!("σ1σ2(Δ⊗id) on {}⊗{}", v[0], v[1]), &l, &r)
            .or_else(|| differ(&format!("σ2σ1(id⊗Δ) on {}⊗{}", v[0], v[1]), &l2, &r2))
    });
    report.check("braided-coalgebra-bc2", pairs.iter(), |v| {
        let xy = tensor_basis(&[&v[0], &v[1]]);
        let s = braid_adjacent(sigma, &xy, 0);
        // (ε⊗id)σ = id⊗ε and (id⊗ε)σ = ε⊗id
        differ(&format!("(ε⊗id)σ on {}⊗{}", v[0], v[1]), &counit_factor(&s, 0), &counit_factor(&xy, 1))
            .or_else(|| {
                differ(&format!("(id⊗ε)σ on {}⊗{}", v[0], v[1]), &counit_factor(&s, 1), &counit_factor(&xy, 0))
            })
    });
    report.check("antipode", singles.iter(), |x| {
        let d = h.coproduct_basis(x);
        let eps = if x.is_unit() { Rational::one() } else { Rational::zero() };
        let expected = LinComb::scaled(Decorated::unit(), eps);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (t, c) in d.iter() {
            let (a, b) = (t.left(), t.right());
            left.add_scaled(&h.mul_lin(&h.antipode_basis(&a), &LinComb::basis(b.clone())), c);
            right.add_scaled(&h.mul_lin(&LinComb::basis(a), &h.antipode_basis(&b)), c);
        }
        differ(&format!("μ(S⊗id)Δ on {x}"), &left, &expected)
            .or_else(|| differ(&format!("μ(id⊗S)Δ on {x}"), &right, &expected))
    });
    check_braided_algebra(h, &pairs, &triples, report);
}

/// The tree-level braiding is a braiding compatible with the product.
pub fn check_braided_algebra<H: TreeHopf>(
    h: &H,
    pairs: &[Vec<Decorated<H::S>>],
    triples: &[Vec<Decorated<H::S>>],
    report: &mut Report,
) {
    let sigma = h.braiding();
    report.check("tree-braid-relation", triples.iter(), |v| {
        let x = tensor_basis(&[&v[0], &v[1], &v[2]]);
        differ(
            &format!("σ1σ2σ1 vs σ2σ1σ2 on {}⊗{}⊗{}", v[0], v[1], v[2]),
            &braid_steps(sigma, &x, &[0, 1, 0]),
            &braid_steps(sigma, &x, &[1, 0, 1]),
        )
    });
    report.check("braided-algebra-ba1", triples.iter(), |v| {
        let x = tensor_basis(&[&v[0], &v[1], &v[2]]);
        // (μ⊗id)σ2σ1 = σ(id⊗μ)
        let l = mul_tensor(h, &braid_steps(sigma, &x, &[0, 1]), 0);
        let r = braid_adjacent(sigma, &mul_tensor(h, &x, 1), 0);
        // (id⊗μ)σ1σ2 = σ(μ⊗id)
        let l2 = mul_tensor(h, &braid_steps(sigma, &x, &[1, 0]), 1);
        let r2 = braid_adjacent(sigma, &mul_tensor(h, &x, 0), 0);
        differ(&format!("(μ⊗id)σ2σ1 on {}⊗{}⊗{}", v[0], v[1], v[2]), &l, &r)
            .or_else(|| differ(&format!("(id⊗μ)σ1σ2 on {}⊗{}⊗{}", v[0], v[1], v[2]), &l2, &r2))
    });
    report.check("braided-algebra-ba2", pairs.iter().filter(|v| v[0].is_unit() || v[1].is_unit()), |v| {
        let x = tensor_basis(&[&v[0], &v[1]]);
        let swapped = tensor_basis(&[&v[1], &v[0]]);
        differ(&format!("σ({}⊗{})", v[0], v[1]), &braid_adjacent(sigma, &x, 0), &swapped)
    });
}
