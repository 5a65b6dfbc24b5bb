use braidtrees::braid::Braiding;
use braidtrees::hopf::TreeHopf;
use braidtrees::linear::int;
use braidtrees::tensor::Tensor;
use braidtrees::tridendriform::{
    check_lush_suite, check_tridendriform_suite, AlgebraFile, AngularProducts, BraidedAlgebraSpec, LushQuotient,
    TridendriformHopf, AT,
};
use braidtrees::{Error, LinComb};

fn e(s: &str) -> LinComb<AT> {
    LinComb::basis(AT::parse(s).unwrap())
}

/// `e1 e1 = e2`, `e1 e2 = e2 e1 = e2 e2 = 0`.
fn nilpotent() -> BraidedAlgebraSpec {
    let q = vec![vec![int(-1), int(1)], vec![int(1), int(1)]];
    BraidedAlgebraSpec::new(Braiding::diagonal(&q).unwrap(), &[(0, 0, 1, int(1))]).unwrap()
}

#[test]
fn dot_of_generators_is_the_corolla() {
    let p = AngularProducts::plain();
    assert_eq!(p.dot(&e("[| e1 |]"), &e("[| e2 |]")).unwrap(), e("[| e1 | e2 |]"));
}

#[test]
fn unit_laws() {
    let p = AngularProducts::plain();
    for t in ["[| e1 |]", "[[| e2 |] e1 |]", "[| e1 | e2 [| e1 |]]"] {
        assert_eq!(p.prec(&e(t), &e("|")).unwrap(), e(t));
        assert_eq!(p.succ(&e("|"), &e(t)).unwrap(), e(t));
        assert!(p.prec(&e("|"), &e(t)).unwrap().is_zero());
        assert!(p.succ(&e(t), &e("|")).unwrap().is_zero());
    }
    for op in [AngularProducts::prec, AngularProducts::succ, AngularProducts::dot] {
        assert!(matches!(op(&p, &e("|"), &e("|")), Err(Error::UnitProduct(_))));
    }
}

#[test]
fn star_of_generators_has_three_terms() {
    let z = AngularProducts::plain().star(&e("[| e1 |]"), &e("[| e2 |]"));
    let want = &(&e("[| e1 [| e2 |]]") + &e("[[| e1 |] e2 |]")) + &e("[| e1 | e2 |]");
    assert_eq!(z, want);
}

#[test]
fn lush_dot() {
    let q = LushQuotient::new(nilpotent());
    assert_eq!(q.dot(&e("[| e1 |]"), &e("[| e1 |]")).unwrap(), e("[| e2 |]"));
    assert!(q.dot(&e("[| e2 |]"), &e("[| e1 |]")).unwrap().is_zero());
    assert!(q.dot(&e("[[| e1 |] e1 |]"), &e("[| e2 [| e1 |]]")).unwrap().is_zero());
    // no shared leaf: the plain product
    let (a, b) = (e("[| e1 [| e1 |]]"), e("[| e2 [| e1 |]]"));
    assert_eq!(q.dot(&a, &b).unwrap(), AngularProducts::plain().dot(&a, &b).unwrap());
    let t = LushQuotient::new(BraidedAlgebraSpec::trivial());
    assert_eq!(t.dot(&e("[| e1 |]"), &e("[| e1 |]")).unwrap(), e("[| e1 |]"));
    assert!(matches!(t.dot(&e("[| e1 | e1 |]"), &e("[| e1 |]")), Err(Error::NotLush(_))));
}

#[test]
fn coproduct_examples() {
    let h = TridendriformHopf::new(Braiding::flip(2));
    let u = AT::unit();
    assert_eq!(h.coproduct(&e("|")), LinComb::basis(Tensor::pair(&u, &u)));
    for v in ["[| e1 |]", "[| e2 |]", "[| e1 | e2 |]", "[| e2 | e1 | e1 |]"] {
        let t = AT::parse(v).unwrap();
        let want = &LinComb::basis(Tensor::pair(&t, &u)) + &LinComb::basis(Tensor::pair(&u, &t));
        assert_eq!(h.coproduct(&e(v)), want, "{v}");
        assert_eq!(h.coproduct_subforest(&e(v)), want, "{v}");
    }
    let t = AT::parse("[[| e1 |] e2 [| e1 |]]").unwrap();
    // both subtrees cut off together give the three terms of their star
    assert_eq!(h.coproduct(&e("[[| e1 |] e2 [| e1 |]]")).len(), 7);
    assert_eq!(h.coproduct(&e("[[| e1 |] e2 [| e1 |]]")), h.coproduct_subforest(&LinComb::basis(t)));
}

#[test]
fn diagonal_coproduct_picks_up_scalars() {
    let h = TridendriformHopf::new(Braiding::uniform_diagonal(1, int(3)));
    let d = h.coproduct(&e("[| e1 [| e1 |]]"));
    let (a, b) = (AT::parse("[| e1 |]").unwrap(), AT::parse("[| e1 |]").unwrap());
    assert_eq!(d.coeff(&Tensor::pair(&a, &b)), int(3));
}

#[test]
fn antipode_examples() {
    let h = TridendriformHopf::new(Braiding::flip(2));
    assert_eq!(h.antipode(&e("|")), e("|"));
    assert_eq!(h.antipode(&e("[| e1 |]")), -&e("[| e1 |]"));
}

#[test]
fn reduction() {
    let q = LushQuotient::new(nilpotent());
    assert_eq!(q.reduce(&e("[| e1 | e1 |]")), e("[| e2 |]"));
    for (_, g) in q.generators() {
        assert!(q.reduce(&g).is_zero());
    }
    for t in ["[| e1 |]", "[[| e1 |] e2 |]", "[[| e1 |] e2 [| e1 |]]", "[| e1 [| e1 |] e2 |]"] {
        assert_eq!(q.reduce(&e(t)), e(t), "{t}");
    }
    let t = LushQuotient::new(BraidedAlgebraSpec::trivial());
    let dims: Vec<usize> = (1..=3).map(|n| t.ideal_dimension(n)).collect();
    assert_eq!(dims, [0, 1, 5]);
}

#[test]
fn algebra_files() {
    let ok = r#"{"dim":2,"mult":[{"i":1,"j":1,"k":2,"c":"1/1"}],
        "braiding":{"dim":2,"kind":"diagonal","q":[["-1","1"],["1","1"]]}}"#;
    let a = AlgebraFile::from_json(ok).unwrap().build(true).unwrap();
    assert_eq!(a.product(0, 0), &[(1, int(1))]);
    let bad = r#"{"dim":1,"mult":[{"i":1,"j":1,"k":1,"c":1}],"braiding":{"dim":1,"kind":"diagonal","q":[["2"]]}}"#;
    assert!(matches!(AlgebraFile::from_json(bad).unwrap().build(true), Err(Error::BadAlgebra(_))));
}

#[test]
fn suites_at_degree_three() {
    let r = check_tridendriform_suite(&TridendriformHopf::new(Braiding::flip(2)), 3);
    assert!(r.all_pass(), "{}", r.to_plain());
    let r = check_lush_suite(&LushQuotient::new(nilpotent()), 3);
    assert!(r.all_pass(), "{}", r.to_plain());
}

#[test]
fn broken_braiding_is_caught() {
    let mut es = Braiding::flip(2).entries();
    es.push((0, 1, 0, 1, int(1)));
    let sigma = Braiding::explicit_unchecked(2, &es).unwrap();
    let r = check_tridendriform_suite(&TridendriformHopf::new(sigma), 2);
    assert!(!r.get("braid-relation").unwrap().passed);
}
