//! Randomized invariants at degrees past the exhaustive checks.

use proptest::prelude::*;

use braidtrees::braid::Braiding;
use braidtrees::dendriform::{dend_star, DendriformHopf, BT};
use braidtrees::forest::{theta, theta_inverse, ForestHopf, RF};
use braidtrees::hopf::{coproduct_of_product_rhs, TreeHopf};
use braidtrees::linear::int;
use braidtrees::trees::{AngularTree, BinaryTree, Decorated, Forest, Shape};
use braidtrees::tridendriform::{AngularProducts, TridendriformHopf, AT};
use braidtrees::LinComb;

fn pick<S: Shape>(n: usize, k: usize) -> Decorated<S> {
    let all = Decorated::all(&S::enumerate(n), 2);
    all[k % all.len()].clone()
}

fn braiding(diag: bool) -> Braiding {
    if diag {
        Braiding::uniform_diagonal(2, int(-3))
    } else {
        Braiding::flip(2)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn notation_round_trips(n in 0usize..6, k in any::<usize>()) {
        let b: BT = pick::<BinaryTree>(n, k);
        prop_assert_eq!(BT::parse(&b.to_string()).unwrap(), b);
        let f: RF = pick::<Forest>(n, k);
        prop_assert_eq!(RF::parse(&f.to_string()).unwrap(), f);
        let a: AT = pick::<AngularTree>(n, k);
        prop_assert_eq!(AT::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn angular_star_is_associative(
        d in prop::array::uniform3(1usize..4),
        k in prop::array::uniform3(any::<usize>()),
    ) {
        let p = AngularProducts::plain();
        let [x, y, z]: [LinComb<AT>; 3] = [0, 1, 2].map(|i| LinComb::basis(pick::<AngularTree>(d[i], k[i])));
        prop_assert_eq!(p.star(&p.star(&x, &y), &z), p.star(&x, &p.star(&y, &z)));
    }

    #[test]
    fn binary_star_is_associative(
        d in prop::array::uniform3(1usize..5),
        k in prop::array::uniform3(any::<usize>()),
    ) {
        let [x, y, z]: [LinComb<BT>; 3] = [0, 1, 2].map(|i| LinComb::basis(pick::<BinaryTree>(d[i], k[i])));
        prop_assert_eq!(dend_star(&dend_star(&x, &y), &z), dend_star(&x, &dend_star(&y, &z)));
    }

    #[test]
    fn coproducts_are_multiplicative(
        diag in any::<bool>(),
        d in prop::array::uniform2(1usize..4),
        k in prop::array::uniform2(any::<usize>()),
    ) {
        let h = DendriformHopf::new(braiding(diag));
        let (a, b) = (pick::<BinaryTree>(d[0], k[0]), pick::<BinaryTree>(d[1], k[1]));
        let lhs = h.coproduct(&h.mul(&a, &b));
        prop_assert_eq!(lhs, coproduct_of_product_rhs(&h, &h.coproduct_basis(&a), &h.coproduct_basis(&b)));

        let h = TridendriformHopf::new(braiding(diag));
        let (a, b) = (pick::<AngularTree>(d[0], k[0]), pick::<AngularTree>(d[1], k[1]));
        let lhs = h.coproduct(&h.mul(&a, &b));
        prop_assert_eq!(lhs, coproduct_of_product_rhs(&h, &h.coproduct_basis(&a), &h.coproduct_basis(&b)));

        let h = ForestHopf::new(braiding(diag));
        let (a, b) = (pick::<Forest>(d[0], k[0]), pick::<Forest>(d[1], k[1]));
        let lhs = h.coproduct(&h.mul(&a, &b));
        prop_assert_eq!(lhs, coproduct_of_product_rhs(&h, &h.coproduct_basis(&a), &h.coproduct_basis(&b)));
    }

    #[test]
    fn recursive_and_cut_coproducts_agree(diag in any::<bool>(), n in 4usize..6, k in any::<usize>()) {
        let h = DendriformHopf::new(braiding(diag));
        let x = LinComb::basis(pick::<BinaryTree>(n, k));
        prop_assert_eq!(h.coproduct(&x), h.coproduct_subforest(&x));
        let h = TridendriformHopf::new(braiding(diag));
        let x = LinComb::basis(pick::<AngularTree>(n, k));
        prop_assert_eq!(h.coproduct(&x), h.coproduct_subforest(&x));
    }

    #[test]
    fn theta_is_invertible(n in 0usize..7, k in any::<usize>()) {
        let y = LinComb::basis(pick::<BinaryTree>(n, k));
        prop_assert_eq!(theta_inverse(&theta(&y)), y);
        let f = LinComb::basis(pick::<Forest>(n, k));
        prop_assert_eq!(theta(&theta_inverse(&f)), f);
    }

    #[test]
    fn antipode_is_an_inverse(diag in any::<bool>(), n in 1usize..5, k in any::<usize>()) {
        let h = TridendriformHopf::new(braiding(diag));
        let x = pick::<AngularTree>(n, k);
        let mut total = LinComb::zero();
        for (t, c) in h.coproduct_basis(&x).iter() {
            total.add_scaled(&h.mul_lin(&h.antipode_basis(&t.left()), &LinComb::basis(t.right())), c);
        }
        prop_assert!(total.is_zero(), "{}", total);
    }
}
