//! Identity checks shared by the dendriform and tridendriform suites:
//! splitting axioms, compatibility of a product with the braiding, and the
//! compatibility of grafting with the braiding.

use crate::braid::Braiding;
use crate::error::Result;
use crate::hopf::Element;
use crate::linear::LinComb;
use crate::report::{differ, Report};
use crate::tensor::{braid_adjacent, braid_steps, try_collapse, Tensor};
use crate::trees::{Decorated, Shape};

pub type Op<'a, S> = &'a dyn Fn(&Element<S>, &Element<S>) -> Result<Element<S>>;

fn basis<S: Shape>(d: &Decorated<S>) -> Element<S> {
    LinComb::basis(d.clone())
}

/// Applies a binary operation to factors `i, i+1`.
pub fn op_at<S: Shape>(x: &LinComb<Tensor<S>>, i: usize, op: Op<S>) -> Result<LinComb<Tensor<S>>> {
    try_collapse(x, i, 2, |t| op(&basis(&t.part(0)), &basis(&t.part(1))))
}

fn show<T: std::fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn compare<T: PartialEq + std::fmt::Display>(what: &str, l: Result<T>, r: Result<T>) -> Option<String> {
    match (&l, &r) {
        (Ok(a), Ok(b)) => differ(what, a, b),
        _ => Some(format!("{what}: {} vs {}", show(l), show(r))),
    }
}

/// An identity `lhs(x,y,z) = rhs(x,y,z)` between trilinear expressions.
pub fn check_ternary<S: Shape>(
    report: &mut Report,
    name: &str,
    label: &str,
    triples: &[Vec<Decorated<S>>],
    lhs: impl Fn(&Element<S>, &Element<S>, &Element<S>) -> Result<Element<S>>,
    rhs: impl Fn(&Element<S>, &Element<S>, &Element<S>) -> Result<Element<S>>,
) {
    report.check(name, triples.iter(), |v| {
        let (x, y, z) = (basis(&v[0]), basis(&v[1]), basis(&v[2]));
        compare(
            &format!("{label} at x={}, y={}, z={}", v[0], v[1], v[2]),
            lhs(&x, &y, &z),
            rhs(&x, &y, &z),
        )
    });
}

/// `σ(id⊗op) = (op⊗id)σ2σ1` and `σ(op⊗id) = (id⊗op)σ1σ2`.
pub fn check_op_braiding<S: Shape>(
    report: &mut Report,
    name: &str,
    sigma: &Braiding,
    triples: &[Vec<Decorated<S>>],
    op: Op<S>,
) {
    report.check(name, triples.iter(), |v| {
        let x = LinComb::basis(Tensor::of(&[&v[0], &v[1], &v[2]]));
        let at = format!("{}⊗{}⊗{}", v[0], v[1], v[2]);
        let l = op_at(&x, 1, op).map(|t| braid_adjacent(sigma, &t, 0));
        let r = op_at(&braid_steps(sigma, &x, &[0, 1]), 0, op);
        let l2 = op_at(&x, 0, op).map(|t| braid_adjacent(sigma, &t, 0));
        let r2 = op_at(&braid_steps(sigma, &x, &[1, 0]), 1, op);
        compare(&format!("σ(id⊗op) on {at}"), l, r).or_else(|| compare(&format!("σ(op⊗id) on {at}"), l2, r2))
    });
}

/// The braid relation of σ on V⊗V⊗V.
pub fn check_braid_relation(report: &mut Report, sigma: &Braiding) {
    let d = sigma.dim();
    let failure = sigma.check_yang_baxter().err().map(|w| w.to_string());
    report.record("braid-relation", d * d * d, failure);
}

/// Unit rules for a family of splitting products: `x ≺ 1 = x`, `1 ≺ x = 0`
/// and so on, and that the products are undefined on `1 ⊗ 1`.
pub fn check_unit_rules<S: Shape>(
    report: &mut Report,
    singles: &[Decorated<S>],
    ops: &[(&str, Op<S>, bool, bool)],
) {
    let unit = basis(&Decorated::<S>::unit());
    report.check("unit-rules", singles.iter().filter(|x| !x.is_unit()), |x| {
        let e = basis(x);
        for (name, op, keeps_left, keeps_right) in ops {
            let want = |keep: &bool| if *keep { e.clone() } else { LinComb::zero() };
            if let Some(m) = compare(&format!("{x} {name} 1"), op(&e, &unit), Ok(want(keeps_left))) {
                return Some(m);
            }
            if let Some(m) = compare(&format!("1 {name} {x}"), op(&unit, &e), Ok(want(keeps_right))) {
                return Some(m);
            }
        }
        None
    });
    let undefined = ops.iter().find(|(_, op, _, _)| op(&unit, &unit).is_ok());
    if let Some((name, _, _, _)) = undefined {
        report.record("unit-rules-undefined", ops.len(), Some(format!("1 {name} 1 returned a value")));
    } else {
        report.record("unit-rules-undefined", ops.len(), None);
    }
}
