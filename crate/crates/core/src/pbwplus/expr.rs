//! A small expression language for identities in U⁺, e.g.
//! `[E_{2}, E_{233}] = r(r-s)E_{23}^2`.
//!
//! `E_{w}` is the root vector with Lyndon word `w`; `[x, y]` is the bracket
//! `xy − ⟨ω'_{deg y}, ω_{deg x}⟩ yx` of homogeneous elements; juxtaposition is
//! multiplication; `^n` allows negative exponents on scalars only.

use super::tree::{expand_to_free, free_multiply, FreeElem, Word};
use super::{PbwAlgebra, PbwElem, ONE};
use crate::coeff::CoeffRing;
use crate::lincomb::LinComb;
use crate::rootdata;
use crate::rootdata::LatticeVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown root vector E_{{{0}}}")]
    UnknownRoot(String),
    #[error("bracket of inhomogeneous elements")]
    Inhomogeneous,
    #[error("negative power of a non-scalar or zero element")]
    BadInverse,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Root(String),
    R,
    S,
    Int(i64),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        match c {
            ' ' | '\t' | '\n' => k += 1,
            'E' => {
                let start = k;
                k += 1;
                if k < b.len() && b[k] == b'_' {
                    k += 1;
                }
                let braced = k < b.len() && b[k] == b'{';
                if braced {
                    k += 1;
                }
                let ws = k;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                let word = src[ws..k].to_string();
                if braced {
                    if k >= b.len() || b[k] != b'}' {
                        return Err(ExprError::Parse {
                            pos: k,
                            msg: "expected '}'".into(),
                        });
                    }
                    k += 1;
                }
                if word.is_empty() {
                    return Err(ExprError::Parse {
                        pos: start,
                        msg: "empty root word".into(),
                    });
                }
                out.push((start, Tok::Root(word)));
            }
            'r' => {
                out.push((k, Tok::R));
                k += 1;
            }
            's' => {
                out.push((k, Tok::S));
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                let n = src[start..k].parse().map_err(|_| ExprError::Parse {
                    pos: start,
                    msg: "integer".into(),
                })?;
                out.push((start, Tok::Int(n)));
            }
            '+' | '-' | '(' | ')' | '[' | ']' | '{' | '}' | ',' | '^' | '=' => {
                out.push((k, Tok::Op(c)));
                k += 1;
            }
            _ => {
                return Err(ExprError::Parse {
                    pos: k,
                    msg: format!("unexpected character {:?}", c),
                })
            }
        }
    }
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Root(usize),
    R,
    S,
    Int(i64),
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c))
        }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            neg = true;
        } else if self.peek() == Some(&Tok::Op('+')) {
            self.pos += 1;
        }
        loop {
            terms.push((neg, self.product()?));
            match self.peek() {
                Some(Tok::Op('+')) => neg = false,
                Some(Tok::Op('-')) => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr::Sum(terms))
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Root(_) | Tok::R | Tok::S | Tok::Int(_) | Tok::Op('(') | Tok::Op('['))
        )
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut fs = vec![self.power()?];
        while self.starts_factor() {
            fs.push(self.power()?);
        }
        Ok(if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            Expr::Product(fs)
        })
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        let braced = self.peek() == Some(&Tok::Op('{'));
        if braced {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Op('-'));
        if neg {
            self.pos += 1;
        }
        let n = match self.peek() {
            Some(Tok::Int(n)) => *n,
            _ => return self.err("expected exponent"),
        };
        self.pos += 1;
        if braced {
            self.expect('}')?;
        }
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(Expr::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Root(w) => rootdata::index_of_word(&w)
                .map(Expr::Root)
                .ok_or(ExprError::UnknownRoot(w)),
            Tok::R => Ok(Expr::R),
            Tok::S => Ok(Expr::S),
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Op('(') => {
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Op('[') => {
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            _ => {
                self.pos -= 1;
                self.err("unexpected token")
            }
        }
    }
}

/// Parses `lhs = rhs = …` into its sides.
pub fn parse_chain(src: &str) -> Result<Vec<Expr>, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let mut sides = vec![p.sum()?];
    while p.peek() == Some(&Tok::Op('=')) {
        p.pos += 1;
        sides.push(p.sum()?);
    }
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(sides)
}

pub fn parse_expr(src: &str) -> Result<Expr, ExprError> {
    let mut sides = parse_chain(src)?;
    if sides.len() != 1 {
        return Err(ExprError::Parse {
            pos: 0,
            msg: "unexpected '='".into(),
        });
    }
    Ok(sides.pop().unwrap())
}

/// An algebra in which expressions can be evaluated.
pub trait ExprTarget<R: CoeffRing> {
    type Key: Ord + Clone;
    fn ring(&self) -> &R;
    fn root(&self, i: usize) -> LinComb<Self::Key, R::Elem>;
    fn unit_key(&self) -> Self::Key;
    fn key_degree(&self, k: &Self::Key) -> LatticeVec;
    fn mul(
        &self,
        a: &LinComb<Self::Key, R::Elem>,
        b: &LinComb<Self::Key, R::Elem>,
    ) -> LinComb<Self::Key, R::Elem>;

    fn scalar(&self, c: R::Elem) -> LinComb<Self::Key, R::Elem> {
        LinComb::term(self.ring(), self.unit_key(), c)
    }
}

impl<R: CoeffRing> ExprTarget<R> for PbwAlgebra<R> {
    type Key = super::PbwMono;
    fn ring(&self) -> &R {
        PbwAlgebra::ring(self)
    }
    fn root(&self, i: usize) -> PbwElem<R::Elem> {
        PbwAlgebra::root(self, i)
    }
    fn unit_key(&self) -> super::PbwMono {
        ONE
    }
    fn key_degree(&self, k: &super::PbwMono) -> LatticeVec {
        super::mono_degree(k)
    }
    fn mul(&self, a: &PbwElem<R::Elem>, b: &PbwElem<R::Elem>) -> PbwElem<R::Elem> {
        self.multiply(a, b)
    }
}

/// The free algebra on `E_1..E_4`, root vectors given by their bracket polynomials.
pub struct FreeTarget<R: CoeffRing> {
    ring: R,
    roots: Vec<FreeElem<R::Elem>>,
}

impl<R: CoeffRing> FreeTarget<R> {
    pub fn new(ring: R) -> Self {
        let roots = (1..=rootdata::NROOTS)
            .map(|i| expand_to_free(&ring, i))
            .collect();
        FreeTarget { ring, roots }
    }
}

impl<R: CoeffRing> ExprTarget<R> for FreeTarget<R> {
    type Key = Word;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn root(&self, i: usize) -> FreeElem<R::Elem> {
        self.roots[i - 1].clone()
    }
    fn unit_key(&self) -> Word {
        Vec::new()
    }
    fn key_degree(&self, k: &Word) -> LatticeVec {
        super::word_degree(k)
    }
    fn mul(&self, a: &FreeElem<R::Elem>, b: &FreeElem<R::Elem>) -> FreeElem<R::Elem> {
        free_multiply(&self.ring, a, b)
    }
}

type Val<R, T> = LinComb<<T as ExprTarget<R>>::Key, <R as CoeffRing>::Elem>;

fn degree_of<R: CoeffRing, T: ExprTarget<R>>(t: &T, x: &Val<R, T>) -> Option<LatticeVec> {
    let mut it = x.keys().map(|k| t.key_degree(k));
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

/// Value of an expression.
pub fn eval_expr<R: CoeffRing, T: ExprTarget<R>>(t: &T, e: &Expr) -> Result<Val<R, T>, ExprError> {
    let ring = t.ring();
    Ok(match e {
        Expr::Root(i) => t.root(*i),
        Expr::R => t.scalar(ring.rs_monomial(1, 0)),
        Expr::S => t.scalar(ring.rs_monomial(0, 1)),
        Expr::Int(n) => t.scalar(ring.from_i64(*n)),
        Expr::Sum(ts) => {
            let mut out = LinComb::zero();
            for (neg, x) in ts {
                let v = eval_expr(t, x)?;
                if *neg {
                    out = out.sub(ring, &v);
                } else {
                    out.add_assign(ring, &v);
                }
            }
            out
        }
        Expr::Product(fs) => {
            let mut out = t.scalar(ring.one());
            for f in fs {
                out = t.mul(&out, &eval_expr(t, f)?);
            }
            out
        }
        Expr::Power(b, n) => {
            let v = eval_expr(t, b)?;
            if *n >= 0 {
                (0..*n).fold(t.scalar(ring.one()), |acc, _| t.mul(&acc, &v))
            } else {
                let c = match (v.len(), v.coeff(&t.unit_key())) {
                    (1, Some(c)) => c.clone(),
                    _ => return Err(ExprError::BadInverse),
                };
                let inv = ring.inv(&c).map_err(|_| ExprError::BadInverse)?;
                t.scalar(ring.pow(&inv, -n).map_err(|_| ExprError::BadInverse)?)
            }
        }
        Expr::Bracket(a, b) => {
            let x = eval_expr(t, a)?;
            let y = eval_expr(t, b)?;
            bracket(t, &x, &y)?
        }
    })
}

/// `xy − ⟨ω'_{deg y}, ω_{deg x}⟩ yx`; zero if either side is zero.
pub fn bracket<R: CoeffRing, T: ExprTarget<R>>(
    t: &T,
    x: &Val<R, T>,
    y: &Val<R, T>,
) -> Result<Val<R, T>, ExprError> {
    if x.is_zero() || y.is_zero() {
        return Ok(LinComb::zero());
    }
    let dx = degree_of(t, x).ok_or(ExprError::Inhomogeneous)?;
    let dy = degree_of(t, y).ok_or(ExprError::Inhomogeneous)?;
    let (a, b) = rootdata::pairing_exps(&dy, &dx);
    let ring = t.ring();
    let mut out = t.mul(x, y);
    out.add_scaled(ring, &t.mul(y, x), &ring.neg(&ring.rs_monomial(a, b)));
    Ok(out)
}

/// Evaluates every side of a chain.
pub fn eval_chain<R: CoeffRing, T: ExprTarget<R>>(
    t: &T,
    src: &str,
) -> Result<Vec<Val<R, T>>, ExprError> {
    parse_chain(src)?.iter().map(|e| eval_expr(t, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested() {
        let sides = parse_chain(
            "[E_{12}, E_{233}] = r^2s^2E_{12332} + r(r-s)(E_{123}E_{23} + s^2E_{23}E_{123})",
        )
        .unwrap();
        assert_eq!(sides.len(), 2);
        assert!(matches!(sides[0], Expr::Bracket(..)));
        assert_eq!(
            parse_expr("(r+s)^{-1}").unwrap(),
            Expr::Power(
                Box::new(Expr::Sum(vec![(false, Expr::R), (false, Expr::S)])),
                -1
            )
        );
        assert_eq!(
            parse_expr("-E_3").unwrap(),
            Expr::Sum(vec![(true, Expr::Root(22))])
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_chain("[E_1, ").is_err());
        assert!(matches!(
            parse_chain("E_{13}"),
            Err(ExprError::UnknownRoot(_))
        ));
        assert!(parse_chain("E_1 x").is_err());
    }
}
