//! Expression grammar shared by [`LaurentQ`], [`AlgebraElement`] and
//! [`CommPoly`]:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor (('*'|'/')? factor)*
//! factor   := '-' factor | atom ['^' exponent]
//! atom     := integer | 'q' | ('E'|'Q') ['[' int (',' int)* ']'] | '(' expr ')'
//! exponent := '{' ['+'|'-'] int ['/' int] '}' | ['-'] int
//! ```
//!
//! Juxtaposition is multiplication, so `Q[1,0]E[0,-1]` and `E*Q` both parse.
//! Bare `E`/`Q` are accepted for rank-one algebras.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qlaurent::{Exponent, LaurentQ, Rational};
use crate::qweyl_algebra::{AlgebraElement, CommPoly};
use crate::rootdata::RootData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    E,
    Q,
}

#[derive(Clone, Debug)]
enum Node {
    Num(BigInt),
    SmallQ,
    Gen(Gen, Option<Vec<i64>>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
}

#[derive(Clone, Debug)]
struct Expr {
    node: Node,
    pos: usize,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let pos = self.pos;
        let v = self.unsigned()?;
        let v: i64 = v
            .try_into()
            .map_err(|_| Error::parse(pos, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn parse(mut self) -> Result<Expr> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let mut lhs = if self.eat(b'-') {
            let t = self.term()?;
            Expr {
                node: Node::Neg(Box::new(t)),
                pos,
            }
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            let pos = {
                self.skip_ws();
                self.pos
            };
            if self.eat(b'+') {
                let rhs = self.term()?;
                lhs = Expr {
                    node: Node::Add(Box::new(lhs), Box::new(rhs)),
                    pos,
                };
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                lhs = Expr {
                    node: Node::Sub(Box::new(lhs), Box::new(rhs)),
                    pos,
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, b'q' | b'E' | b'Q' | b'('))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let pos = {
                self.skip_ws();
                self.pos
            };
            if self.eat(b'*') {
                let rhs = self.factor()?;
                lhs = Expr {
                    node: Node::Mul(Box::new(lhs), Box::new(rhs)),
                    pos,
                };
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                lhs = Expr {
                    node: Node::Div(Box::new(lhs), Box::new(rhs)),
                    pos,
                };
            } else if self.starts_atom() {
                let rhs = self.factor()?;
                lhs = Expr {
                    node: Node::Mul(Box::new(lhs), Box::new(rhs)),
                    pos,
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        if self.eat(b'-') {
            let inner = self.factor()?;
            return Ok(Expr {
                node: Node::Neg(Box::new(inner)),
                pos,
            });
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(Expr {
                node: Node::Pow(Box::new(base), e),
                pos,
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat(b'{') {
            let num = self.small_int()?;
            let den = if self.eat(b'/') {
                let pos = self.pos;
                let d = self.small_int()?;
                if d <= 0 {
                    return Err(Error::parse(pos, "exponent denominator must be positive"));
                }
                d
            } else {
                1
            };
            self.expect(b'}')?;
            Ok(Exponent::new(num, den))
        } else {
            Ok(Exponent::from_integer(self.small_int()?))
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let node = match self.peek() {
            Some(c) if c.is_ascii_digit() => Node::Num(self.unsigned()?),
            Some(b'q') => {
                self.pos += 1;
                Node::SmallQ
            }
            Some(c @ (b'E' | b'Q')) => {
                self.pos += 1;
                let g = if c == b'E' { Gen::E } else { Gen::Q };
                let w = if self.eat(b'[') {
                    let mut v = vec![self.small_int()?];
                    while self.eat(b',') {
                        v.push(self.small_int()?);
                    }
                    self.expect(b']')?;
                    Some(v)
                } else {
                    None
                };
                Node::Gen(g, w)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                return Ok(e);
            }
            Some(c) => return Err(self.error(format!("unexpected `{}`", c as char))),
            None => return Err(self.error("unexpected end of input")),
        };
        Ok(Expr { node, pos })
    }
}

fn eval_laurent(e: &Expr) -> Result<LaurentQ> {
    Ok(match &e.node {
        Node::Num(n) => LaurentQ::from_rational(Rational::from_integer(n.clone())),
        Node::SmallQ => LaurentQ::q_pow(Exponent::one()),
        Node::Gen(..) => {
            return Err(Error::parse(e.pos, "E and Q are not allowed in a scalar"))
        }
        Node::Neg(a) => -eval_laurent(a)?,
        Node::Add(a, b) => eval_laurent(a)? + eval_laurent(b)?,
        Node::Sub(a, b) => eval_laurent(a)? - eval_laurent(b)?,
        Node::Mul(a, b) => eval_laurent(a)? * eval_laurent(b)?,
        Node::Div(a, b) => {
            let d = eval_laurent(b)?;
            let inv = d
                .pow(-1)
                .ok_or_else(|| Error::parse(b.pos, "can only divide by a monomial"))?;
            eval_laurent(a)? * inv
        }
        Node::Pow(a, ex) => {
            let base = eval_laurent(a)?;
            if ex.is_integer() {
                base.pow(*ex.numer())
                    .ok_or_else(|| Error::parse(e.pos, "negative power of a non-monomial"))?
            } else {
                match base.as_monomial() {
                    Some((be, c)) if c.is_one() => LaurentQ::q_pow(be * ex),
                    _ => {
                        return Err(Error::parse(
                            e.pos,
                            "fractional powers are only defined for powers of q",
                        ))
                    }
                }
            }
        }
    })
}

fn generator(rd: &Arc<RootData>, g: Gen, w: &Option<Vec<i64>>, pos: usize) -> Result<AlgebraElement> {
    let weight = match w {
        Some(v) => rd.weight(v).map_err(|e| Error::parse(pos, e.to_string()))?,
        None if rd.rank() == 1 => rd.basis_weight(0),
        None => {
            return Err(Error::parse(
                pos,
                "bare E/Q needs a rank-one algebra; write E[...] with a weight",
            ))
        }
    };
    Ok(match g {
        Gen::E => AlgebraElement::e(rd, &weight),
        Gen::Q => AlgebraElement::q(rd, &weight),
    })
}

fn eval_algebra(e: &Expr, rd: &Arc<RootData>) -> Result<AlgebraElement> {
    let scalar = |x: LaurentQ| AlgebraElement::scalar(rd, x);
    Ok(match &e.node {
        Node::Num(_) | Node::SmallQ => scalar(eval_laurent(e)?),
        Node::Gen(g, w) => generator(rd, *g, w, e.pos)?,
        Node::Neg(a) => -&eval_algebra(a, rd)?,
        Node::Add(a, b) => &eval_algebra(a, rd)? + &eval_algebra(b, rd)?,
        Node::Sub(a, b) => &eval_algebra(a, rd)? - &eval_algebra(b, rd)?,
        Node::Mul(a, b) => &eval_algebra(a, rd)? * &eval_algebra(b, rd)?,
        Node::Div(a, b) => {
            let d = eval_laurent(b).map_err(|_| Error::parse(b.pos, "can only divide by a scalar"))?;
            let inv = d
                .pow(-1)
                .ok_or_else(|| Error::parse(b.pos, "can only divide by a monomial"))?;
            eval_algebra(a, rd)?.scale(&inv)
        }
        Node::Pow(a, ex) => {
            let base = eval_algebra(a, rd)?;
            if !ex.is_integer() {
                // only scalars q^{a/b}
                return Ok(scalar(eval_laurent(e)?));
            }
            let k = *ex.numer();
            if k >= 0 {
                base.pow(k as u32)
            } else {
                base.inverse()
                    .ok_or_else(|| Error::parse(e.pos, "negative power of a non-monomial"))?
                    .pow((-k) as u32)
            }
        }
    })
}

pub fn parse_laurent(s: &str) -> Result<LaurentQ> {
    eval_laurent(&Parser::new(s).parse()?)
}

pub fn parse_algebra(s: &str, rd: &Arc<RootData>) -> Result<AlgebraElement> {
    eval_algebra(&Parser::new(s).parse()?, rd)
}

/// Parses a commutative polynomial; any `q` is evaluated at 1.
pub fn parse_comm(s: &str, rd: &Arc<RootData>) -> Result<CommPoly> {
    Ok(parse_algebra(s, rd)?.epsilon())
}

/// Parses a weight written `3` (rank one) or `1,0,-1` / `[1,0,-1]`.
pub fn parse_weight(s: &str, rd: &RootData) -> Result<crate::rootdata::Weight> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords: Vec<i64> = t
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(0, format!("bad weight `{s}`")))?;
    if coords.len() == 1 && rd.rank() == 1 && rd.num_coords() != 1 {
        return Ok(rd.scale(coords[0], &rd.basis_weight(0)));
    }
    rd.weight(&coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{int, quantum_integer};

    #[test]
    fn laurent_grammar() {
        let x = parse_laurent("q^{1/2} + q^{-1/2}").unwrap();
        assert_eq!(x, quantum_integer(2));
        let y = parse_laurent("(q^{1/2}+q^{-1/2})^2 - 1").unwrap();
        assert_eq!(y, quantum_integer(3));
        assert_eq!(parse_laurent("3/2 q^2").unwrap().coeff(Exponent::from_integer(2)), crate::qlaurent::rat(3, 2));
        assert_eq!(parse_laurent("-2*-q").unwrap(), LaurentQ::monomial(Exponent::one(), int(2)));
        assert_eq!(parse_laurent("q^-2").unwrap(), LaurentQ::q_pow(Exponent::from_integer(-2)));
        assert_eq!(parse_laurent("q^{5/4}/q^{1/4}").unwrap(), LaurentQ::q_pow(Exponent::one()));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_laurent("q + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_laurent("(q + 1").is_err());
        assert!(parse_laurent("E + 1").is_err());
        assert!(parse_laurent("(q+1)^{1/2}").is_err());
        assert!(parse_laurent("1/(q+1)").is_err());
        assert!(parse_laurent("").is_err());
    }

    #[test]
    fn weights() {
        let sl2: RootData = "sl2".parse().unwrap();
        let w = parse_weight("3", &sl2).unwrap();
        assert_eq!(sl2.sl2_index(&w), Some(3));
        let w = parse_weight("-2", &sl2).unwrap();
        assert_eq!(sl2.sl2_index(&w), Some(-2));
        let sl3: RootData = "sl3".parse().unwrap();
        assert_eq!(parse_weight("[1,0,0]", &sl3).unwrap(), sl3.basis_weight(0));
        assert!(parse_weight("1,0", &sl3).is_err());
    }
}
