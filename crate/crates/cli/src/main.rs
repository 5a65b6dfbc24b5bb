mod expr;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidtrees::braid::{Braiding, BraidingFile};
use braidtrees::dendriform::{
    check_dendriform_suite, check_hopf_bt_suite, dend_op, DendOp, DendriformHopf,
};
use braidtrees::forest::{check_hopf_rt_suite, check_theta_iso, theta, theta_inverse, ForestHopf};
use braidtrees::hopf::{counit, TreeHopf};
use braidtrees::linear::{format_rational, parse_rational, Canonical};
use braidtrees::report::Report;
use braidtrees::tensor::braid_objects;
use braidtrees::trees::lush::{
    a141200_terms, catalan_numbers, little_schroeder_numbers, lush_count, CountMethod,
};
use braidtrees::trees::{enumerate_shapes, AngularTree, BinaryTree, Decorated, Forest, Shape, TreeKind};
use braidtrees::tridendriform::{
    check_hopf_at_suite, check_lush_suite, check_tridendriform_suite, AlgebraFile, BraidedAlgebraSpec,
    LushQuotient, TridendriformHopf, TriOp,
};
use braidtrees::LinComb;

use expr::{BinOp, BinopFn, Elem, Evaluator};

/// Default suite degrees; larger `--max-degree` values print a warning.
const BINARY_CAP: usize = 5;
const ANGULAR_CAP: usize = 4;
const DEFAULT_MAX_TERMS: usize = 1_000_000;

#[derive(Parser)]
#[command(name = "braidtrees", version, about = "Braided dendriform and tridendriform algebras on planar trees")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the shapes of one grade.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Run an identity suite.
    Check(CheckArgs),
    /// Evaluate an operation on tree expressions.
    Compute(ComputeArgs),
    /// Print an integer sequence.
    Sequence {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
        /// Largest accepted `--upto`.
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Binary,
    Forest,
    Angular,
    Lush,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    YangBaxter,
    Dendriform,
    HopfBt,
    HopfRt,
    Tridendriform,
    HopfAt,
    Theta,
    LushQuotient,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Alg {
    Bt,
    Rt,
    At,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Eval,
    Prec,
    Succ,
    Dot,
    Star,
    Product,
    Coproduct,
    CoproductCuts,
    Antipode,
    Counit,
    Braid,
    Theta,
    ThetaInverse,
    Reduce,
    LushDot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Lush,
    Catalan,
    Schroeder,
    A141200,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    ClosedForm,
    Enumerate,
    All,
}

#[derive(Args)]
struct BraidingArgs {
    /// `flip`, `diag:<q>` or `file:<path>`.
    #[arg(long, default_value = "flip")]
    braiding: String,
    /// Dimension of V for `flip` and `diag:<q>`.
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[command(flatten)]
    braiding: BraidingArgs,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Algebra file for `lush-quotient`; the one-dimensional `e1e1 = e1` by default.
    #[arg(long)]
    algebra: Option<String>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long, value_enum)]
    alg: Alg,
    #[command(flatten)]
    braiding: BraidingArgs,
    /// Algebra file for `reduce` and `lush-dot`.
    #[arg(long)]
    algebra: Option<String>,
    #[arg(required = true)]
    exprs: Vec<String>,
}

enum Fail {
    /// Exit 1: an identity or comparison failed; the output is still printed.
    Identity(String),
    /// Exit 2.
    Input(String),
}

type Run = Result<String, Fail>;

fn input<E: std::fmt::Display>(e: E) -> Fail {
    Fail::Input(e.to_string())
}

fn render(plain: bool, json: Value, text: impl FnOnce() -> String) -> String {
    if plain {
        text()
    } else {
        serde_json::to_string_pretty(&json).expect("serializable")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Cmd::Enumerate { kind, n, count_only } => enumerate(cli.plain, *kind, *n, *count_only),
        Cmd::Check(a) => check(cli.plain, a),
        Cmd::Compute(a) => compute(cli.plain, a),
        Cmd::Sequence { name, upto, method, cap } => sequence(cli.plain, *name, *upto, *method, *cap),
    };
    let print = |s: &str| {
        // a closed pipe is not an error here
        let _ = writeln!(std::io::stdout().lock(), "{}", s.trim_end());
    };
    match out {
        Ok(s) => {
            print(&s);
            ExitCode::SUCCESS
        }
        Err(Fail::Identity(s)) => {
            print(&s);
            ExitCode::from(1)
        }
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn max_terms() -> Result<usize, Fail> {
    match std::env::var("BRAIDTREES_MAX_TERMS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Fail::Input(format!("BRAIDTREES_MAX_TERMS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_TERMS),
    }
}

fn guard_size(n: usize, cap: usize) -> Result<(), String> {
    if n > cap {
        Err(format!("expansion has {n} terms, above the BRAIDTREES_MAX_TERMS cap of {cap}"))
    } else {
        Ok(())
    }
}

fn enumerate(plain: bool, kind: Kind, n: usize, count_only: bool) -> Run {
    let (tk, name) = match kind {
        Kind::Binary => (TreeKind::Binary, "binary"),
        Kind::Forest => (TreeKind::Forest, "forest"),
        Kind::Angular => (TreeKind::Angular, "angular"),
        Kind::Lush => (TreeKind::Lush, "lush"),
    };
    if n > 12 {
        return Err(Fail::Input(format!("--n {n} is above the enumeration limit of 12")));
    }
    let shapes = enumerate_shapes(tk, n);
    if !count_only {
        guard_size(shapes.len(), max_terms()?).map_err(Fail::Input)?;
    }
    let count = shapes.len();
    Ok(if count_only {
        render(plain, json!({"kind": name, "n": n, "count": count}), || count.to_string())
    } else {
        render(plain, json!({"kind": name, "n": n, "count": count, "shapes": shapes}), || shapes.join("\n"))
    })
}

fn braiding_from(args: &BraidingArgs, validate: bool, fallback_dim: usize) -> Result<Braiding, Fail> {
    let spec = args.braiding.trim();
    let dim = args.dim.unwrap_or(fallback_dim);
    if spec == "flip" {
        return Ok(Braiding::flip(dim));
    }
    if let Some(q) = spec.strip_prefix("diag:").or_else(|| spec.strip_prefix("diagonal:")) {
        let q = parse_rational(q).map_err(input)?;
        return Ok(Braiding::uniform_diagonal(dim, q));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| Fail::Input(format!("{path}: {e}")))?;
        let file = BraidingFile::from_json(&text).map_err(input)?;
        let b = file.build(validate).map_err(input)?;
        if let Some(d) = args.dim {
            if d != b.dim() {
                return Err(Fail::Input(format!("--dim {d} differs from the file's dimension {}", b.dim())));
            }
        }
        return Ok(b);
    }
    Err(Fail::Input(format!("unknown braiding {spec:?}; use flip, diag:<q> or file:<path>")))
}

fn algebra_from(path: &Option<String>) -> Result<BraidedAlgebraSpec, Fail> {
    match path {
        None => Ok(BraidedAlgebraSpec::trivial()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Fail::Input(format!("{p}: {e}")))?;
            AlgebraFile::from_json(&text).map_err(input)?.build(true).map_err(input)
        }
    }
}

fn report_out(plain: bool, r: &Report, extra: Value) -> Run {
    let mut j = r.to_json();
    if let (Value::Object(m), Value::Object(e)) = (&mut j, extra) {
        m.extend(e);
    }
    let s = render(plain, j, || r.to_plain());
    if r.all_pass() {
        Ok(s)
    } else {
        Err(Fail::Identity(s))
    }
}

fn check(plain: bool, a: &CheckArgs) -> Run {
    let angular = matches!(a.suite, Suite::Tridendriform | Suite::HopfAt | Suite::LushQuotient);
    let cap = if angular { ANGULAR_CAP } else { BINARY_CAP };
    let max = a.max_degree.unwrap_or(cap);
    if max > cap {
        eprintln!("warning: degree {max} is above the suggested cap of {cap}; running time grows very fast");
    }
    let meta = |dim: usize| json!({"braiding": a.braiding.braiding, "dim": dim, "max_degree": max});
    if a.suite == Suite::YangBaxter {
        let sigma = braiding_from(&a.braiding, false, 2)?;
        let mut r = Report::new("yang-baxter");
        braidtrees::axioms::check_braid_relation(&mut r, &sigma);
        return report_out(plain, &r, meta(sigma.dim()));
    }
    if a.suite == Suite::LushQuotient {
        let alg = algebra_from(&a.algebra)?;
        let d = alg.dim();
        let r = check_lush_suite(&LushQuotient::new(alg), max);
        return report_out(plain, &r, json!({"algebra": a.algebra, "dim": d, "max_degree": max}));
    }
    let sigma = braiding_from(&a.braiding, true, 2)?;
    let d = sigma.dim();
    let r = match a.suite {
        Suite::Dendriform => check_dendriform_suite(&DendriformHopf::new(sigma), max),
        Suite::HopfBt => check_hopf_bt_suite(&DendriformHopf::new(sigma), max),
        Suite::HopfRt => check_hopf_rt_suite(&ForestHopf::new(sigma), max),
        Suite::Theta => check_theta_iso(&sigma, max),
        Suite::Tridendriform => check_tridendriform_suite(&TridendriformHopf::new(sigma), max),
        Suite::HopfAt => check_hopf_at_suite(&TridendriformHopf::new(sigma), max),
        Suite::YangBaxter | Suite::LushQuotient => unreachable!(),
    };
    report_out(plain, &r, meta(d))
}

fn lin_out<K: Ord + Clone + Canonical>(plain: bool, x: &LinComb<K>, cap: usize) -> Run {
    guard_size(x.len(), cap).map_err(Fail::Input)?;
    Ok(render(plain, x.to_json(), || x.to_string()))
}

/// Largest letter index used in the expressions, plus one.
fn letters_needed(exprs: &[String]) -> usize {
    let mut best = 1;
    for e in exprs {
        let b = e.as_bytes();
        for (i, &c) in b.iter().enumerate() {
            if c == b'e' {
                let digits: String = e[i + 1..].chars().take_while(|c| c.is_ascii_digit()).collect();
                if let Ok(k) = digits.parse::<usize>() {
                    best = best.max(k);
                }
            }
        }
    }
    best
}

fn check_letters<S: Shape>(xs: &[Elem<S>], dim: usize) -> Result<(), Fail> {
    for x in xs {
        for t in x.keys() {
            if let Some(&l) = t.word.iter().find(|&&l| l >= dim) {
                return Err(Fail::Input(format!("{t} uses e{} but the braiding has dimension {dim}", l + 1)));
            }
        }
    }
    Ok(())
}

fn arity(op: Op, n: usize) -> Result<(), Fail> {
    let want = match op {
        Op::Eval => return Ok(()),
        Op::Prec | Op::Succ | Op::Dot | Op::Star | Op::Product | Op::Braid | Op::LushDot => 2,
        _ => 1,
    };
    if n == want {
        Ok(())
    } else {
        Err(Fail::Input(format!("this operation takes {want} expression(s), got {n}")))
    }
}

fn parse_all<S: Shape>(
    exprs: &[String],
    binop: BinopFn<S>,
    cap: usize,
) -> Result<Vec<Elem<S>>, Fail> {
    let guard = |x: &Elem<S>| guard_size(x.len(), cap);
    let ev = Evaluator { binop, guard: &guard };
    exprs.iter().map(|e| ev.eval(e).map_err(Fail::Input)).collect()
}

fn eval_out<S: Shape>(plain: bool, xs: &[Elem<S>], cap: usize) -> Run
where
    Decorated<S>: Canonical,
{
    if xs.len() == 1 {
        return lin_out(plain, &xs[0], cap);
    }
    let j = Value::Array(xs.iter().map(|x| x.to_json()).collect());
    Ok(render(plain, j, || xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n")))
}

fn unsupported(op: Op, alg: &str) -> Fail {
    let name = op.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Fail::Input(format!("--op {name} is not available for --alg {alg}"))
}

fn compute(plain: bool, a: &ComputeArgs) -> Run {
    let cap = max_terms()?;
    arity(a.op, a.exprs.len())?;
    let need = letters_needed(&a.exprs);
    match a.alg {
        Alg::Bt => {
            let sigma = braiding_from(&a.braiding, true, need)?;
            let h = DendriformHopf::new(sigma);
            let binop = |op: BinOp, x: &Elem<BinaryTree>, y: &Elem<BinaryTree>| {
                let d = match op {
                    BinOp::Prec => DendOp::Prec,
                    BinOp::Succ => DendOp::Succ,
                    BinOp::Star => DendOp::Star,
                    BinOp::Dot => return Err("`.` is not defined on binary trees".to_string()),
                };
                dend_op(d, x, y).map_err(|e| e.to_string())
            };
            let xs: Vec<Elem<BinaryTree>> = parse_all(&a.exprs, &binop, cap)?;
            check_letters(&xs, h.braiding().dim())?;
            match a.op {
                Op::Eval => eval_out(plain, &xs, cap),
                Op::Prec => lin_out(plain, &binop(BinOp::Prec, &xs[0], &xs[1]).map_err(input)?, cap),
                Op::Succ => lin_out(plain, &binop(BinOp::Succ, &xs[0], &xs[1]).map_err(input)?, cap),
                Op::Star | Op::Product => lin_out(plain, &h.mul_lin(&xs[0], &xs[1]), cap),
                Op::Coproduct => lin_out(plain, &h.coproduct(&xs[0]), cap),
                Op::CoproductCuts => lin_out(plain, &h.coproduct_subforest(&xs[0]), cap),
                Op::Antipode => lin_out(plain, &h.antipode(&xs[0]), cap),
                Op::Counit => scalar_out(plain, &counit(&xs[0])),
                Op::Braid => lin_out(plain, &braid_objects(h.braiding(), &xs[0], &xs[1]), cap),
                Op::Theta => lin_out(plain, &theta(&xs[0]), cap),
                _ => Err(unsupported(a.op, "bt")),
            }
        }
        Alg::Rt => {
            let sigma = braiding_from(&a.braiding, true, need)?;
            let h = ForestHopf::new(sigma);
            let binop = |op: BinOp, x: &Elem<Forest>, y: &Elem<Forest>| match op {
                BinOp::Star => Ok(h.mul_lin(x, y)),
                _ => Err("only `*` (concatenation) is defined on forests".to_string()),
            };
            let xs: Vec<Elem<Forest>> = parse_all(&a.exprs, &binop, cap)?;
            check_letters(&xs, h.braiding().dim())?;
            match a.op {
                Op::Eval => eval_out(plain, &xs, cap),
                Op::Star | Op::Product => lin_out(plain, &h.mul_lin(&xs[0], &xs[1]), cap),
                Op::Coproduct => lin_out(plain, &h.coproduct(&xs[0]), cap),
                Op::CoproductCuts => lin_out(plain, &h.coproduct_cuts(&xs[0]), cap),
                Op::Antipode => lin_out(plain, &h.antipode(&xs[0]), cap),
                Op::Counit => scalar_out(plain, &counit(&xs[0])),
                Op::Braid => lin_out(plain, &braid_objects(h.braiding(), &xs[0], &xs[1]), cap),
                Op::ThetaInverse => lin_out(plain, &theta_inverse(&xs[0]), cap),
                _ => Err(unsupported(a.op, "rt")),
            }
        }
        Alg::At => compute_angular(plain, a, cap, need),
    }
}

fn compute_angular(plain: bool, a: &ComputeArgs, cap: usize, need: usize) -> Run {
    let lush = matches!(a.op, Op::Reduce | Op::LushDot);
    let (h, quotient) = if lush {
        let alg = algebra_from(&a.algebra)?;
        (TridendriformHopf::new(alg.braiding().clone()), Some(LushQuotient::new(alg)))
    } else {
        (TridendriformHopf::new(braiding_from(&a.braiding, true, need)?), None)
    };
    let ops = h.ops();
    let binop = |op: BinOp, x: &Elem<AngularTree>, y: &Elem<AngularTree>| {
        let t = match op {
            BinOp::Prec => TriOp::Prec,
            BinOp::Succ => TriOp::Succ,
            BinOp::Dot => TriOp::Dot,
            BinOp::Star => TriOp::Star,
        };
        ops.op(t, x, y).map_err(|e| e.to_string())
    };
    let xs: Vec<Elem<AngularTree>> = parse_all(&a.exprs, &binop, cap)?;
    check_letters(&xs, h.braiding().dim())?;
    let tri = |t: TriOp| ops.op(t, &xs[0], &xs[1]).map_err(input);
    match a.op {
        Op::Eval => eval_out(plain, &xs, cap),
        Op::Prec => lin_out(plain, &tri(TriOp::Prec)?, cap),
        Op::Succ => lin_out(plain, &tri(TriOp::Succ)?, cap),
        Op::Dot => lin_out(plain, &tri(TriOp::Dot)?, cap),
        Op::Star | Op::Product => lin_out(plain, &tri(TriOp::Star)?, cap),
        Op::Coproduct => lin_out(plain, &h.coproduct(&xs[0]), cap),
        Op::CoproductCuts => lin_out(plain, &h.coproduct_subforest(&xs[0]), cap),
        Op::Antipode => lin_out(plain, &h.antipode(&xs[0]), cap),
        Op::Counit => scalar_out(plain, &counit(&xs[0])),
        Op::Braid => lin_out(plain, &braid_objects(h.braiding(), &xs[0], &xs[1]), cap),
        Op::Reduce => lin_out(plain, &quotient.expect("lush").reduce(&xs[0]), cap),
        Op::LushDot => lin_out(plain, &quotient.expect("lush").dot(&xs[0], &xs[1]).map_err(input)?, cap),
        _ => Err(unsupported(a.op, "at")),
    }
}

fn scalar_out(plain: bool, c: &braidtrees::Rational) -> Run {
    Ok(render(plain, json!(format_rational(c)), || c.to_string()))
}

fn sequence(plain: bool, name: SeqName, upto: usize, method: Method, cap: usize) -> Run {
    if upto > cap {
        return Err(Fail::Input(format!("--upto {upto} is above --cap {cap}")));
    }
    if matches!(method, Method::Enumerate | Method::All) && upto > 10 {
        return Err(Fail::Input("enumeration is limited to --upto 10".into()));
    }
    let label = name.to_possible_value().expect("named").get_name().to_string();
    // (n, [values by method])
    let (columns, rows): (Vec<&str>, Vec<(usize, Vec<String>)>) = match name {
        SeqName::Lush => {
            let methods: Vec<(&str, CountMethod)> = match method {
                Method::Recursion => vec![("recursion", CountMethod::Recursion)],
                Method::ClosedForm => vec![("closed-form", CountMethod::ClosedForm)],
                Method::Enumerate => vec![("enumerate", CountMethod::Enumerate)],
                Method::All => vec![
                    ("recursion", CountMethod::Recursion),
                    ("closed-form", CountMethod::ClosedForm),
                    ("enumerate", CountMethod::Enumerate),
                ],
            };
            let rows = (0..=upto)
                .map(|n| (n, methods.iter().map(|(_, m)| lush_count(n, *m).to_string()).collect()))
                .collect();
            (methods.iter().map(|m| m.0).collect(), rows)
        }
        SeqName::Catalan | SeqName::Schroeder => {
            if method == Method::ClosedForm {
                return Err(Fail::Input("use --method recursion, enumerate or all for this sequence".into()));
            }
            let rec: Vec<String> = match name {
                SeqName::Catalan => catalan_numbers(upto).iter().map(|c| c.to_string()).collect(),
                // s[i] holds s_{i+1}, the number of angular trees of degree i
                _ => little_schroeder_numbers(upto + 1).iter().take(upto + 1).map(|c| c.to_string()).collect(),
            };
            let kind = if matches!(name, SeqName::Catalan) { TreeKind::Binary } else { TreeKind::Angular };
            let counted = |n: usize| enumerate_shapes(kind, n).len().to_string();
            let (cols, rows): (Vec<&str>, Vec<(usize, Vec<String>)>) = match method {
                Method::Recursion => (vec!["recursion"], (0..=upto).map(|n| (n, vec![rec[n].clone()])).collect()),
                Method::Enumerate => (vec!["enumerate"], (0..=upto).map(|n| (n, vec![counted(n)])).collect()),
                _ => (
                    vec!["recursion", "enumerate"],
                    (0..=upto).map(|n| (n, vec![rec[n].clone(), counted(n)])).collect(),
                ),
            };
            (cols, rows)
        }
        SeqName::A141200 => {
            if method != Method::Recursion {
                return Err(Fail::Input("this sequence only has --method recursion".into()));
            }
            if upto == 0 {
                return Err(Fail::Input("this sequence starts at index 1".into()));
            }
            let rows = a141200_terms(upto).iter().enumerate().map(|(i, v)| (i + 1, vec![v.to_string()])).collect();
            (vec!["recursion"], rows)
        }
    };
    let agree = rows.iter().all(|(_, v)| v.iter().all(|x| x == &v[0]));
    let j = json!({
        "name": label,
        "methods": columns,
        "agree": agree,
        "values": rows.iter().map(|(n, v)| {
            let mut o = serde_json::Map::new();
            o.insert("n".into(), json!(n));
            for (c, x) in columns.iter().zip(v) {
                o.insert((*c).into(), json!(x));
            }
            Value::Object(o)
        }).collect::<Vec<_>>(),
    });
    let text = || {
        let mut s = format!("n\t{}\n", columns.join("\t"));
        for (n, v) in &rows {
            s.push_str(&format!("{n}\t{}\n", v.join("\t")));
        }
        s
    };
    let out = render(plain, j, text);
    if agree {
        Ok(out)
    } else {
        Err(Fail::Identity(out))
    }
}
