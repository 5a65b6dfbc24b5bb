//! Expressions over tree literals:
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := [rational] product
//! product := atom (('<:' | ':>' | '.' | '*') atom)*     left to right
//! atom    := '{' expr '}' | tree literal
//! ```
//!
//! `<:` is ≺, `:>` is ≻, `.` is the middle product and `*` the associative
//! product. Braces group, since parentheses belong to binary-tree notation.

use braidtrees::linear::{parse_rational, Rational};
use braidtrees::trees::{Decorated, Shape};
use braidtrees::LinComb;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Prec,
    Succ,
    Dot,
    Star,
}

pub type Elem<S> = LinComb<Decorated<S>>;
pub type BinopFn<'a, S> = &'a dyn Fn(BinOp, &Elem<S>, &Elem<S>) -> Result<Elem<S>, String>;

pub struct Evaluator<'a, S: Shape> {
    pub binop: BinopFn<'a, S>,
    /// Called on every intermediate value.
    pub guard: &'a dyn Fn(&Elem<S>) -> Result<(), String>,
}

struct Lexer<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Lexer<'s> {
    fn rest(&self) -> &'s str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn at_operator(&mut self) -> bool {
        self.skip_ws();
        let r = self.rest();
        r.is_empty() || ["+", "-", "*", "<:", ":>", ".", "}"].iter().any(|t| r.starts_with(t))
    }

    fn err(&self, msg: &str) -> String {
        format!("expression error at byte {}: {msg}", self.pos)
    }

    /// A leading rational followed by something other than an operator.
    fn coefficient(&mut self) -> Result<Option<Rational>, String> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let len = r.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(r.len());
        if len == 0 || !r.as_bytes()[0].is_ascii_digit() {
            return Ok(None);
        }
        self.pos += len;
        if self.at_operator() {
            self.pos = start;
            return Ok(None);
        }
        parse_rational(&r[..len]).map(Some).map_err(|e| self.err(&e.to_string()))
    }

    /// Text up to the next operator outside brackets.
    fn literal(&mut self) -> Result<&'s str, String> {
        self.skip_ws();
        let r = self.rest();
        let mut depth = 0i32;
        let mut end = r.len();
        let bytes = r.as_bytes();
        for (i, ch) in r.char_indices() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '+' | '-' | '*' | '.' | '}' if depth == 0 => {
                    end = i;
                    break;
                }
                '<' | ':' if depth == 0 && (bytes.get(i + 1) == Some(&b':') || bytes.get(i + 1) == Some(&b'>')) => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        let lit = r[..end].trim_end();
        if lit.is_empty() {
            return Err(self.err("expected a tree"));
        }
        self.pos += end;
        Ok(lit)
    }
}

impl<S: Shape> Evaluator<'_, S> {
    pub fn eval(&self, src: &str) -> Result<Elem<S>, String> {
        let mut lx = Lexer { src, pos: 0 };
        let v = self.sum(&mut lx)?;
        lx.skip_ws();
        if !lx.rest().is_empty() {
            return Err(lx.err("trailing input"));
        }
        Ok(v)
    }

    fn sum(&self, lx: &mut Lexer) -> Result<Elem<S>, String> {
        let mut sign = if lx.eat("-") { -1 } else { 1 };
        let mut acc = LinComb::zero();
        loop {
            let t = self.term(lx)?;
            acc.add_scaled(&t, &Rational::from_integer(sign.into()));
            (self.guard)(&acc)?;
            if lx.eat("+") {
                sign = 1;
            } else if lx.eat("-") {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, lx: &mut Lexer) -> Result<Elem<S>, String> {
        let c = lx.coefficient()?;
        let mut acc = self.atom(lx)?;
        loop {
            let op = if lx.eat("<:") {
                BinOp::Prec
            } else if lx.eat(":>") {
                BinOp::Succ
            } else if lx.eat(".") {
                BinOp::Dot
            } else if lx.eat("*") {
                BinOp::Star
            } else {
                break;
            };
            let rhs = self.atom(lx)?;
            acc = (self.binop)(op, &acc, &rhs)?;
            (self.guard)(&acc)?;
        }
        Ok(match c {
            Some(c) => acc.scale(&c),
            None => acc,
        })
    }

    fn atom(&self, lx: &mut Lexer) -> Result<Elem<S>, String> {
        if lx.eat("{") {
            let v = self.sum(lx)?;
            if !lx.eat("}") {
                return Err(lx.err("expected `}`"));
            }
            return Ok(v);
        }
        let start = lx.pos;
        let lit = lx.literal()?;
        Decorated::<S>::parse(lit)
            .map(LinComb::basis)
            .map_err(|e| format!("in tree {lit:?} at byte {start}: {e}"))
    }
}
