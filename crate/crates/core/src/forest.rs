//! The braided Hopf algebra R(V) of decorated planar rooted forests, and the
//! isomorphism Θ from Y(V).

use num_bigint::BigInt;

use crate::braid::Braiding;
use crate::dendriform::{dend_star, generator_decomposition, BTElement, DendriformHopf, BT};
use crate::hopf::{
    basis_by_degree, check_bialgebra, coproduct_of_product_rhs, cut_coproduct, tuples, Caches, Element, TreeHopf,
};
use crate::linear::{LinComb, Letter};
use crate::report::{differ, Report};
use crate::tensor::{braid_objects, braid_steps, collapse, tensor_lin, Tensor};
use crate::trees::lush::catalan_numbers;
use crate::trees::{graft_binary, BinaryTree, Decorated, Forest, Shape};

pub type RF = Decorated<Forest>;
pub type RFElement = Element<Forest>;

pub struct ForestHopf {
    sigma: Braiding,
    caches: Caches<Forest>,
}

impl ForestHopf {
    pub fn new(sigma: Braiding) -> Self {
        ForestHopf {
            sigma,
            caches: Caches::default(),
        }
    }

    /// The cut formula applied to the whole forest at once.
    pub fn coproduct_cuts(&self, x: &RFElement) -> LinComb<Tensor<Forest>> {
        x.map(|d| cut_coproduct(self, d))
    }
}

impl TreeHopf for ForestHopf {
    type S = Forest;

    fn braiding(&self) -> &Braiding {
        &self.sigma
    }

    fn caches(&self) -> &Caches<Forest> {
        &self.caches
    }

    fn mul(&self, a: &RF, b: &RF) -> RFElement {
        LinComb::basis(a.concat(b))
    }

    fn coproduct_raw(&self, f: &RF) -> LinComb<Tensor<Forest>> {
        let trees = f.trees();
        match trees.len() {
            0 => LinComb::basis(Tensor::pair(f, f)),
            1 => cut_coproduct(self, f),
            _ => {
                let rest = trees[1..].iter().fold(RF::unit(), |acc, t| acc.concat(t));
                coproduct_of_product_rhs(self, &self.coproduct_basis(&trees[0]), &self.coproduct_basis(&rest))
            }
        }
    }
}

fn b_plus_lin(v: Letter, f: &RFElement) -> RFElement {
    f.map(|x| LinComb::basis(RF::b_plus(v, x)))
}

fn concat_lin(a: &RFElement, b: &RFElement) -> RFElement {
    let mut out = LinComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term(x.concat(y), c * d);
        }
    }
    out
}

/// `Θ(|) = 1`, `Θ(| ∨_v Y) = B⁺_v(Θ(Y))`, extended multiplicatively through
/// the generator decomposition.
pub fn theta(x: &BTElement) -> RFElement {
    x.map(theta_basis)
}

fn theta_basis(y: &BT) -> RFElement {
    if y.is_unit() {
        return LinComb::basis(RF::unit());
    }
    generator_decomposition(y).map(|m| {
        m.0.iter().fold(LinComb::basis(RF::unit()), |acc, g| {
            let (_, v, rest) = g.split().expect("generator");
            concat_lin(&acc, &b_plus_lin(v, &theta_basis(&rest)))
        })
    })
}

/// `Θ⁻¹(1) = |`, `Θ⁻¹(B⁺_v(F)) = | ∨_v Θ⁻¹(F)`, products to `*`.
pub fn theta_inverse(x: &RFElement) -> BTElement {
    x.map(theta_inverse_basis)
}

fn theta_inverse_basis(f: &RF) -> BTElement {
    f.trees().iter().fold(LinComb::basis(BT::unit()), |acc, t| {
        let (v, children) = t.root_split().expect("single tree");
        let inner = theta_inverse_basis(&children);
        let g = inner.map(|y| LinComb::basis(graft_binary(&BT::unit(), v, y)));
        dend_star(&acc, &g)
    })
}

fn theta_tensor(x: &LinComb<Tensor<BinaryTree>>) -> LinComb<Tensor<Forest>> {
    x.map(|t| tensor_lin(&theta_basis(&t.part(0)), &theta_basis(&t.part(1))))
}

/// Coalgebra, bialgebra and antipode identities; agreement of the recursive
/// coproduct with the cut formula on forests; the twisted 1-cocycle property
/// of B⁺ and its compatibility with the braiding.
pub fn check_hopf_rt_suite(h: &ForestHopf, max: usize) -> Report {
    let mut r = Report::new("hopf-rt");
    check_bialgebra(h, max, &mut r);
    let singles: Vec<RF> = basis_by_degree(h, max).into_iter().flatten().collect();
    r.check("recursion-vs-cut-formula", singles.iter(), |x| {
        differ(&format!("Δ({x})"), &h.coproduct_basis(x), &cut_coproduct(h, x))
    });
    check_cocycle(h, max, &mut r);
    r
}

/// `ΔB⁺ = B⁺⊗1 + (id⊗B⁺)(σ_{V,R})_1(id⊗Δ)` and the two braiding
/// compatibilities of B⁺, on all forests of degree below `max`.
pub fn check_cocycle(h: &ForestHopf, max: usize, r: &mut Report) {
    let sigma = h.braiding();
    let by = basis_by_degree(h, max.saturating_sub(1));
    let mut singles = Vec::new();
    for f in by.iter().flatten() {
        for v in 0..sigma.dim() {
            singles.push((f.clone(), v));
        }
    }
    let bplus = |m: &Tensor<Forest>| LinComb::basis(RF::b_plus(m.letter(0), &m.part(1)));
    r.check("cocycle", singles.iter(), |(f, v)| {
        let t = RF::b_plus(*v, f);
        let lhs = h.coproduct_basis(&t);
        let with_v = h.coproduct_basis(f).map(|x| LinComb::basis(x.insert_letter(0, *v)));
        let mut rhs = collapse(&braid_steps(sigma, &with_v, &[0]), 1, 2, bplus);
        rhs.add_term(Tensor::pair(&t, &RF::unit()), num_traits::One::one());
        differ(&format!("Δ(B⁺_e{}({f}))", v + 1), &lhs, &rhs)
    });
    let mut pairs = Vec::new();
    for p in tuples(&by, 2, max.saturating_sub(1)) {
        for v in 0..sigma.dim() {
            pairs.push((p.clone(), v));
        }
    }
    r.check("fv1", pairs.iter(), |(p, v)| {
        let lhs = braid_objects(sigma, &LinComb::basis(RF::b_plus(*v, &p[0])), &LinComb::basis(p[1].clone()));
        let x = LinComb::basis(Tensor::of(&[&p[0], &p[1]]).insert_letter(0, *v));
        let rhs = collapse(&braid_steps(sigma, &x, &[1, 0]), 1, 2, bplus);
        differ(&format!("σ(B⁺_e{}({})⊗{})", v + 1, p[0], p[1]), &lhs, &rhs)
    });
    r.check("fv2", pairs.iter(), |(p, v)| {
        let lhs = braid_objects(sigma, &LinComb::basis(p[0].clone()), &LinComb::basis(RF::b_plus(*v, &p[1])));
        let x = LinComb::basis(Tensor::of(&[&p[0], &p[1]]).insert_letter(1, *v));
        let rhs = collapse(&braid_steps(sigma, &x, &[0, 1]), 0, 2, bplus);
        differ(&format!("σ({}⊗B⁺_e{}({}))", p[0], v + 1, p[1]), &lhs, &rhs)
    });
}

/// Θ is a graded bijection compatible with products, coproducts and
/// braidings, and keeps decoration words in place.
pub fn check_theta_iso(sigma: &Braiding, max: usize) -> Report {
    let mut r = Report::new("theta");
    let bt = DendriformHopf::new(sigma.clone());
    let rt = ForestHopf::new(sigma.clone());
    let ys: Vec<BT> = basis_by_degree(&bt, max).into_iter().flatten().collect();
    let fs: Vec<RF> = basis_by_degree(&rt, max).into_iter().flatten().collect();
    let both = ys.iter().map(Ok).chain(fs.iter().map(Err));
    r.check("bijectivity", both, |side| match side {
        Ok(y) => {
            let x = LinComb::basis((*y).clone());
            differ(&format!("Θ⁻¹Θ({y})"), &theta_inverse(&theta(&x)), &x)
        }
        Err(f) => {
            let x = LinComb::basis((*f).clone());
            differ(&format!("ΘΘ⁻¹({f})"), &theta(&theta_inverse(&x)), &x)
        }
    });
    let pairs = tuples(&basis_by_degree(&bt, max), 2, max);
    r.check("algebra-morphism", pairs.iter(), |p| {
        let lhs = theta(&bt.mul(&p[0], &p[1]));
        let rhs = concat_lin(&theta_basis(&p[0]), &theta_basis(&p[1]));
        differ(&format!("Θ({}*{})", p[0], p[1]), &lhs, &rhs)
    });
    r.check("coalgebra-morphism", ys.iter(), |y| {
        let lhs = theta_tensor(&bt.coproduct_basis(y));
        let rhs = rt.coproduct(&theta_basis(y));
        differ(&format!("(Θ⊗Θ)Δ({y})"), &lhs, &rhs)
    });
    r.check("braiding", pairs.iter(), |p| {
        let lhs = theta_tensor(&bt.braid(&LinComb::basis(p[0].clone()), &LinComb::basis(p[1].clone())));
        let rhs = rt.braid(&theta_basis(&p[0]), &theta_basis(&p[1]));
        differ(&format!("(Θ⊗Θ)σ({}⊗{})", p[0], p[1]), &lhs, &rhs)
    });
    r.check("grading", ys.iter(), |y| {
        theta_basis(y)
            .keys()
            .find(|f| f.degree() != y.degree())
            .map(|f| format!("Θ({y}) has the term {f} of another degree"))
    });
    r.check("canonical-order", ys.iter(), |y| {
        theta_basis(y)
            .keys()
            .find(|f| f.word != y.word)
            .map(|f| format!("Θ({y}) has the term {f} with a permuted word"))
    });
    let cat = catalan_numbers(6);
    r.check("dimension", 0..=6usize, |&n| {
        let d = BigInt::from(sigma.dim()).pow(n as u32);
        let yb = BigInt::from(BinaryTree::enumerate(n).len()) * &d;
        let fr = BigInt::from(Forest::enumerate(n).len()) * &d;
        let want = &cat[n] * &d;
        (yb != want || fr != want).then(|| format!("degree {n}: {yb} binary, {fr} forest, expected {want}"))
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::counit;
    use crate::linear::int;

    fn f(s: &str) -> RF {
        RF::parse(s).unwrap()
    }

    #[test]
    fn concat_and_unit() {
        let h = ForestHopf::new(Braiding::flip(2));
        assert_eq!(h.mul(&RF::unit(), &f("e1(e2)")), LinComb::basis(f("e1(e2)")));
        assert_eq!(h.mul(&f("e1"), &f("e2")), LinComb::basis(f("e1 e2")));
    }

    #[test]
    fn small_coproducts() {
        let h = ForestHopf::new(Braiding::flip(2));
        let u = RF::unit();
        assert_eq!(h.coproduct_basis(&u), LinComb::basis(Tensor::pair(&u, &u)));
        let v = f("e2");
        assert_eq!(
            h.coproduct_basis(&v),
            &LinComb::basis(Tensor::pair(&v, &u)) + &LinComb::basis(Tensor::pair(&u, &v))
        );
        assert_eq!(counit(&LinComb::scaled(u, int(5))), int(5));
        assert_eq!(h.antipode(&LinComb::basis(v.clone())), -&LinComb::basis(v));
    }

    #[test]
    fn worked_coproduct() {
        let h = ForestHopf::new(Braiding::flip(5));
        let d = h.coproduct_basis(&f("e1(e2 e3(e4 e5))"));
        let expected: LinComb<Tensor<Forest>> = [
            ("e1(e2 e3(e4 e5))", "1"),
            ("e2 e3(e4 e5)", "e1"),
            ("e3(e4 e5)", "e1(e2)"),
            ("e2 e4 e5", "e1(e3)"),
            ("e4 e5", "e1(e2 e3)"),
            ("e2 e4", "e1(e3(e5))"),
            ("e2 e5", "e1(e3(e4))"),
            ("e2", "e1(e3(e4 e5))"),
            ("e4", "e1(e2 e3(e5))"),
            ("e5", "e1(e2 e3(e4))"),
            ("1", "e1(e2 e3(e4 e5))"),
        ]
        .iter()
        .map(|(a, b)| (Tensor::pair(&f(a), &f(b)), int(1)))
        .collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn theta_worked_example() {
        let y = BT::parse("((| e1 (| e2 |)) e3 |)").unwrap();
        let t = theta(&LinComb::basis(y));
        assert_eq!(t, &LinComb::basis(f("e1(e2) e3")) - &LinComb::basis(f("e1(e2 e3)")));
        assert_eq!(theta(&LinComb::basis(BT::y(1))), LinComb::basis(f("e2")));
        assert_eq!(theta(&LinComb::basis(BT::unit())), LinComb::basis(RF::unit()));
    }

    #[test]
    fn suites_small() {
        for sigma in [Braiding::flip(2), Braiding::uniform_diagonal(1, int(2))] {
            let h = ForestHopf::new(sigma.clone());
            let r = check_hopf_rt_suite(&h, 3);
            assert!(r.all_pass(), "{}", r.to_plain());
            let r = check_theta_iso(&sigma, 3);
            assert!(r.all_pass(), "{}", r.to_plain());
        }
    }
}
