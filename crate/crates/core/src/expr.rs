//! Shared expression grammar for coefficients, PBW elements and free-algebra words.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`X1^2 X4`) is multiplication. What a symbol means is decided
//! by the [`Interp`] the tree is evaluated with.

use num_bigint::BigInt;

use crate::coeff::RatF;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Evaluation target for [`Expr`] trees.
pub trait Interp {
    type Value;
    fn int(&self, n: &BigInt) -> Result<Self::Value>;
    fn sym(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value>;
    fn pow(&self, a: Self::Value, n: i64) -> Result<Self::Value>;
    /// The value as a coefficient, if it is one.
    fn scalar(&self, v: &Self::Value) -> Option<RatF>;
    /// Multiplication by a coefficient; used for division by scalars.
    fn scale(&self, a: Self::Value, k: &RatF) -> Result<Self::Value> {
        let _ = (a, k);
        Err(Error::Other("scaling unsupported".into()))
    }

    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value> {
        match self.scalar(&b) {
            Some(k) => {
                let inv = k.inv()?;
                self.scale(a, &inv)
            }
            None => Err(Error::Other("division by a non-scalar".into())),
        }
    }
}

pub fn eval<I: Interp>(e: &Expr, it: &I) -> Result<I::Value> {
    match e {
        Expr::Int(n) => it.int(n),
        Expr::Sym(s) => it.sym(s),
        Expr::Neg(a) => {
            let v = eval(a, it)?;
            it.neg(v)
        }
        Expr::Add(a, b) => {
            let x = eval(a, it)?;
            let y = eval(b, it)?;
            it.add(x, y)
        }
        Expr::Sub(a, b) => {
            let x = eval(a, it)?;
            let y = eval(b, it)?;
            let y = it.neg(y)?;
            it.add(x, y)
        }
        Expr::Mul(a, b) => {
            let x = eval(a, it)?;
            let y = eval(b, it)?;
            it.mul(x, y)
        }
        Expr::Div(a, b) => {
            let x = eval(a, it)?;
            let y = eval(b, it)?;
            it.div(x, y)
        }
        Expr::Pow(a, n) => {
            let x = eval(a, it)?;
            it.pow(x, *n)
        }
    }
}

/// All symbol names occurring in the tree.
pub fn symbols(e: &Expr) -> Vec<String> {
    fn walk(e: &Expr, out: &mut Vec<String>) {
        match e {
            Expr::Int(_) => {}
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => walk(a, out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(e, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat('-') {
                let rhs = self.term()?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            } else if self.eat('/') {
                let rhs = self.unary()?;
                lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
            } else if matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                let rhs = self.power()?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let n = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let n = match self.peek() {
            Some(Tok::Int(n)) => {
                let v: i64 = n.try_into().map_err(|_| Error::Parse { pos: self.offset(), msg: "exponent out of range".into() })?;
                self.pos += 1;
                v
            }
            _ => return self.err("expected integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len() };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("-r^2 + 3*s/2").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                Box::new(Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Sym("r".into())), 2)))),
                Box::new(Expr::Div(Box::new(Expr::Mul(Box::new(Expr::Int(3.into())), Box::new(Expr::Sym("s".into())))), Box::new(Expr::Int(2.into()))))
            )
        );
    }

    #[test]
    fn juxtaposition_and_negative_exponents() {
        let e = parse("(s^-2) * X1^2 X4^(-1)").unwrap();
        assert_eq!(symbols(&e), vec!["s", "X1", "X4"]);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse("r + * s") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse("r $ s").is_err());
        assert!(parse("").is_err());
        assert!(parse("(r").is_err());
    }
}
