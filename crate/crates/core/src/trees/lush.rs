//! Lush trees (a leaf branch only in extremal position) and the integer
//! sequences attached to the tree families.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::{sort_by_notation, AngularTree, Shape};
use crate::error::{Error, Result};
use crate::linear::Rational;

pub fn is_lush(t: &AngularTree) -> bool {
    match t {
        AngularTree::Leaf => true,
        AngularTree::Node(bs) => {
            let k = bs.len();
            bs.iter().enumerate().all(|(i, b)| {
                let interior = i > 0 && i + 1 < k;
                !(interior && *b == AngularTree::Leaf) && is_lush(b)
            })
        }
    }
}

/// Lush shapes of leaf degree `n`, sorted by notation.
pub fn enumerate_lush(n: usize) -> Vec<AngularTree> {
    sort_by_notation(lush_all(n))
}

fn lush_all(n: usize) -> Vec<AngularTree> {
    if n == 0 {
        return vec![AngularTree::Leaf];
    }
    let mut out = Vec::new();
    // Branch degrees d_0..d_k, Σ d_i = n - k, interior d_i ≥ 1.
    for k in 1..=n {
        let mut seqs: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..=k {
            let min = if i == 0 || i == k { 0 } else { 1 };
            let mut next = Vec::new();
            for s in &seqs {
                let used: usize = s.iter().sum();
                for d in min..=(n - k).saturating_sub(used) {
                    let mut t = s.clone();
                    t.push(d);
                    next.push(t);
                }
            }
            seqs = next;
        }
        for s in seqs.into_iter().filter(|s| s.iter().sum::<usize>() == n - k) {
            let mut acc: Vec<Vec<AngularTree>> = vec![vec![]];
            for &d in &s {
                let opts = lush_all(d);
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

/// Depth in the layered construction: leaves have depth 0 and grafting a lush
/// forest raises the maximal branch depth by one.
pub fn depth(t: &AngularTree) -> Result<usize> {
    if !is_lush(t) {
        return Err(Error::NotLush(t.bare()));
    }
    Ok(depth_unchecked(t))
}

fn depth_unchecked(t: &AngularTree) -> usize {
    match t {
        AngularTree::Leaf => 0,
        AngularTree::Node(bs) => 1 + bs.iter().map(depth_unchecked).max().unwrap_or(0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Recursion,
    ClosedForm,
    Enumerate,
}

impl std::str::FromStr for CountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(CountMethod::Recursion),
            "closed-form" | "closed_form" => Ok(CountMethod::ClosedForm),
            "enumerate" => Ok(CountMethod::Enumerate),
            _ => Err(Error::KindMismatch(format!("unknown method {s:?}"))),
        }
    }
}

pub fn lush_count(n: usize, method: CountMethod) -> BigInt {
    match method {
        CountMethod::Recursion => lush_counts_recursive(n).pop().unwrap(),
        CountMethod::ClosedForm => lush_count_closed(n),
        CountMethod::Enumerate => BigInt::from(lush_all(n).len()),
    }
}

/// All compositions of `n` (ordered sequences of positive parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// g_0..g_n by summing over compositions of n+1 with r > 1 parts, where a
/// part equal to 1 may only come first or last.
pub fn lush_counts_recursive(n: usize) -> Vec<BigInt> {
    let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m <= 1 {
            g.push(BigInt::one());
            continue;
        }
        let mut total = BigInt::zero();
        for c in compositions(m + 1) {
            let r = c.len();
            if r < 2 {
                continue;
            }
            if c.iter().enumerate().any(|(i, &k)| k == 1 && i != 0 && i != r - 1) {
                continue;
            }
            let mut p = BigInt::one();
            for &k in &c {
                p *= &g[k - 1];
            }
            total += p;
        }
        g.push(total);
    }
    g
}

fn double_factorial_odd(m: i64) -> BigInt {
    // (2r-3)!! with the convention (-1)!! = 1
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// g_n = Σ_{r=2}^{n+1} 2^{r-2} (2r-3)!! / r! · C(r, n+1-r) for n ≥ 2.
pub fn lush_count_closed(n: usize) -> BigInt {
    if n <= 1 {
        return BigInt::one();
    }
    let mut sum = Rational::zero();
    for r in 2..=n + 1 {
        if n + 1 - r > r {
            continue;
        }
        let num = (BigInt::one() << (r - 2))
            * double_factorial_odd(2 * r as i64 - 3)
            * binomial(BigInt::from(r), BigInt::from(n + 1 - r));
        sum += Rational::new(num, factorial(r));
    }
    assert!(sum.is_integer());
    sum.to_integer()
}

/// a_1..a_m of the comparison sequence a_m = Σ_r a_r Σ_{(i_1..i_2r) ⊨ m} Π a_{i_j}.
pub fn a141200_terms(m: usize) -> Vec<BigInt> {
    // a[0] unused
    let mut a = vec![BigInt::zero(), BigInt::one()];
    for s in 2..=m {
        // parts[j][t] = Σ over compositions of t into j parts of Π a
        let mut total = BigInt::zero();
        let mut parts: Vec<BigInt> = (0..=s).map(|t| if t == 0 { BigInt::one() } else { BigInt::zero() }).collect();
        for j in 1..=s {
            let mut next = vec![BigInt::zero(); s + 1];
            for t in 1..=s {
                for last in 1..=t.min(s - 1) {
                    if !parts[t - last].is_zero() {
                        next[t] += &parts[t - last] * &a[last];
                    }
                }
            }
            parts = next;
            if j % 2 == 0 && j / 2 < s {
                total += &a[j / 2] * &parts[s];
            }
        }
        a.push(total);
    }
    a.into_iter().skip(1).take(m).collect()
}

pub fn a141200(m: usize) -> BigInt {
    assert!(m >= 1, "the comparison sequence starts at index 1");
    a141200_terms(m).pop().unwrap()
}

/// Coefficients of x^0..x^max in `2G² - (2x+1)G + x + x²`, where
/// `G = Σ_{k≥1} g_{k-1} x^k`; all zero when the counts are right.
pub fn generating_function_residual(max: usize) -> Vec<BigInt> {
    let g = lush_counts_recursive(max);
    let mut big_g = vec![BigInt::zero(); max + 1];
    big_g[1..].clone_from_slice(&g[..max]);
    let mut out = vec![BigInt::zero(); max + 1];
    for i in 0..=max {
        for j in 0..=max - i {
            out[i + j] += 2 * &big_g[i] * &big_g[j];
        }
        out[i] -= &big_g[i];
        if i < max {
            out[i + 1] -= 2 * &big_g[i];
        }
    }
    for k in [1, 2] {
        if k <= max {
            out[k] += 1;
        }
    }
    out
}

/// C_0..C_n
pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 0..n {
        let next = &c[k] * (2 * (2 * k + 1)) / (k + 2);
        c.push(next);
    }
    c
}

/// Little Schröder numbers s_1..s_n (1, 1, 3, 11, 45, ...).
pub fn little_schroeder_numbers(n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(), BigInt::one(), BigInt::one()];
    for k in 3..=n {
        let a = BigInt::from(3 * (2 * k as i64 - 3)) * &s[k - 1];
        let b = BigInt::from(k as i64 - 3) * &s[k - 2];
        s.push((a - b) / k);
    }
    s.into_iter().skip(1).take(n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_shape;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    const G: [i64; 9] = [1, 1, 2, 6, 20, 72, 272, 1064, 4272];

    #[test]
    fn lush_predicate_examples() {
        let p = |s: &str| is_lush(&parse_shape::<AngularTree>(s).unwrap());
        assert!(p("[| * |]"));
        assert!(!p("[| * | * |]"));
        assert!(p("[[| * |] * |]"));
        assert!(p("[| * [| * |] * |]"));
    }

    #[test]
    fn lush_sequence_three_ways() {
        assert_eq!(lush_counts_recursive(8), big(&G));
        for (n, &g) in G.iter().enumerate() {
            assert_eq!(lush_count_closed(n), BigInt::from(g), "closed form at {n}");
            assert_eq!(lush_count(n, CountMethod::Enumerate), BigInt::from(g));
        }
    }

    #[test]
    fn direct_generation_matches_filter() {
        for n in 0..7 {
            let filtered: Vec<_> = AngularTree::enumerate(n).into_iter().filter(is_lush).collect();
            assert_eq!(enumerate_lush(n), filtered);
        }
    }

    #[test]
    fn comparison_sequence() {
        assert_eq!(
            a141200_terms(9),
            big(&[1, 1, 2, 6, 20, 72, 272, 1065, 4282])
        );
        assert_eq!(a141200(1), BigInt::one());
        let g = lush_counts_recursive(8);
        for n in 0..=6 {
            assert_eq!(g[n], a141200(n + 1));
        }
        assert_ne!(g[7], a141200(8));
    }

    #[test]
    fn catalan_and_schroeder() {
        assert_eq!(catalan_numbers(5), big(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(little_schroeder_numbers(7), big(&[1, 1, 3, 11, 45, 197, 903]));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&AngularTree::Leaf).unwrap(), 0);
        assert_eq!(depth(&AngularTree::corolla(1)).unwrap(), 1);
        assert!(depth(&AngularTree::corolla(2)).is_err());
        for t in enumerate_lush(3) {
            assert!(depth(&t).unwrap() <= 3);
        }
    }

    /// Builds the layers by grafting lush forests, bounded by leaf degree,
    /// and checks that the predicate and the minimal layer agree.
    #[test]
    fn depth_matches_layer_construction() {
        let max = 5;
        let mut layers: Vec<Vec<AngularTree>> = vec![vec![AngularTree::Leaf]];
        let mut seen: std::collections::BTreeMap<AngularTree, usize> = Default::default();
        seen.insert(AngularTree::Leaf, 0);
        for n in 0..max {
            let pool: Vec<AngularTree> = layers.iter().skip(1).flatten().cloned().collect();
            // forests: nonempty sequences from the pool, optional end leaves; plus `| |`
            let mut forests: Vec<Vec<AngularTree>> = vec![vec![AngularTree::Leaf, AngularTree::Leaf]];
            let mut seqs: Vec<Vec<AngularTree>> = pool.iter().map(|t| vec![t.clone()]).collect();
            let deg = |f: &[AngularTree]| f.iter().map(|t| t.degree()).sum::<usize>() + f.len() - 1;
            while !seqs.is_empty() {
                let mut next = Vec::new();
                for s in &seqs {
                    for (l, r) in [(false, false), (true, false), (false, true), (true, true)] {
                        let mut f = Vec::new();
                        if l {
                            f.push(AngularTree::Leaf);
                        }
                        f.extend(s.iter().cloned());
                        if r {
                            f.push(AngularTree::Leaf);
                        }
                        if f.len() >= 2 && deg(&f) <= max {
                            forests.push(f);
                        }
                    }
                    for t in &pool {
                        let mut x = s.clone();
                        x.push(t.clone());
                        if deg(&x) <= max {
                            next.push(x);
                        }
                    }
                }
                seqs = next;
            }
            let mut layer = Vec::new();
            for f in forests {
                let t = AngularTree::Node(f);
                seen.entry(t.clone()).or_insert(n + 1);
                layer.push(t);
            }
            layer.sort();
            layer.dedup();
            layers.push(layer);
        }
        for d in 0..=max {
            let lush = enumerate_lush(d);
            let members: Vec<_> = AngularTree::enumerate(d)
                .into_iter()
                .filter(|t| seen.contains_key(t))
                .collect();
            assert_eq!(sort_by_notation(members), lush);
            for t in &lush {
                assert_eq!(depth(t).unwrap(), seen[t]);
            }
        }
    }
}
