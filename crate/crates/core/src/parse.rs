//! Text syntax for elements of the supported algebras.
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" ["-"] integer)?
//! atom   := integer ["/" integer] | "q" | "X[" i "," j "]" | "y[" i "]" | "z[" j "]" | "(" expr ")"
//! ```
//!
//! Negative exponents are accepted only on invertible scalars such as `q`.
//! Positions in errors are character offsets into the input.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Generator, NCPoly, Word};
use crate::scalar::{LaurentScalar, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Sym(char),
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if matches!(c, 'q' | 'X' | 'y' | 'z') {
            out.push((i, Tok::Ident(c)));
            i += 1;
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, message: format!("unexpected character {c:?}") });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    algebra: &'a Arc<Algebra>,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax { pos, message: message.into() }
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {c:?}")))
        }
    }

    fn index(&mut self) -> Result<usize> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(v) => v.to_usize().ok_or_else(|| syntax(pos, "index too large")),
            _ => Err(syntax(pos, "expected an index")),
        }
    }

    fn expr(&mut self) -> Result<NCPoly> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let negative = self.eat('-');
        let Tok::Int(e) = self.bump() else {
            return Err(syntax(pos, "expected an integer exponent"));
        };
        let e = e.to_u32().ok_or_else(|| syntax(pos, "exponent too large"))?;
        let scalar = if base.is_zero() {
            Some(LaurentScalar::zero())
        } else if base.len() == 1 && base.degree() == Some(0) {
            Some(base.coeff(&Word::empty()))
        } else {
            None
        };
        match (scalar, negative) {
            (Some(c), false) => Ok(NCPoly::constant(self.algebra, c.pow(e))),
            (Some(c), true) => {
                let inv = c.unit_inverse().ok_or_else(|| syntax(pos, format!("{c} is not invertible")))?;
                Ok(NCPoly::constant(self.algebra, inv.pow(e)))
            }
            (None, true) => Err(syntax(pos, "negative exponent on a non-scalar")),
            (None, false) => {
                let mut acc = NCPoly::one(self.algebra);
                for _ in 0..e {
                    acc = acc.try_mul(&base)?;
                }
                Ok(acc)
            }
        }
    }

    fn generator(&mut self, name: char, pos: usize) -> Result<NCPoly> {
        self.expect('[')?;
        let a = self.index()?;
        let g = match name {
            'X' => {
                self.expect(',')?;
                let b = self.index()?;
                self.expect(']')?;
                if self.algebra.matrix_dims().is_none() {
                    return Err(syntax(pos, "X[i,j] is only valid in a quantum matrix algebra"));
                }
                Generator::Entry { row: a, col: b }
            }
            _ => {
                self.expect(']')?;
                let Some((m, n)) = self.algebra.tensor_dims() else {
                    return Err(syntax(pos, format!("{name}[i] is only valid in the tensor product")));
                };
                let (offset, bound) = if name == 'y' { (0, m) } else { (m, n) };
                if a == 0 || a > bound {
                    return Err(Error::IndexOutOfRange(format!("{name}[{a}]")));
                }
                Generator::Affine(offset + a)
            }
        };
        NCPoly::generator(self.algebra, g)
    }

    fn atom(&mut self) -> Result<NCPoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(a) => {
                let value = if self.eat('/') {
                    let dpos = self.pos();
                    let Tok::Int(b) = self.bump() else {
                        return Err(syntax(dpos, "expected a denominator"));
                    };
                    if b.is_zero() {
                        return Err(syntax(dpos, "zero denominator"));
                    }
                    Rational::new(a, b)
                } else {
                    Rational::from_integer(a)
                };
                Ok(NCPoly::constant(self.algebra, LaurentScalar::constant(value)))
            }
            Tok::Ident('q') => Ok(NCPoly::constant(self.algebra, LaurentScalar::q())),
            Tok::Ident(c) => self.generator(c, pos),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            Tok::Sym(c) => Err(syntax(pos, format!("unexpected {c:?}"))),
        }
    }
}

/// Parses `text` as an element of `algebra`, in normal form.
pub fn parse(text: &str, algebra: &Arc<Algebra>) -> Result<NCPoly> {
    let mut p = Parser { toks: lex(text)?, at: 0, algebra };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a rational number `a`, `-a` or `a/b`.
pub fn parse_q_value(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let v = crate::scalar::parse_rational(body).filter(|_| !body.starts_with('-') && !body.starts_with('+'));
    match v {
        Some(v) if neg => Ok(-v),
        Some(v) => Ok(v),
        None => Err(Error::InvalidScalar(text.to_string())),
    }
}

/// Whether `r` is `0` or `+-1`, the values at which the relations degenerate.
pub fn is_degenerate_q(r: &Rational) -> bool {
    r.is_zero() || r.abs() == Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detid::quantum_determinant;

    fn m22() -> Arc<Algebra> {
        Algebra::quantum_matrix(2, 2).unwrap()
    }

    #[test]
    fn determinant_text() {
        let a = m22();
        assert_eq!(parse("X[1,1]*X[2,2] - q*X[1,2]*X[2,1]", &a).unwrap(), quantum_determinant(&a).unwrap());
    }

    #[test]
    fn tensor_reordering() {
        let t = Algebra::affine_tensor(2, 2).unwrap();
        let p = parse("q^-1 * y[2]*y[1]", &t).unwrap();
        let want = NCPoly::monomial(&t, &[Generator::Affine(1), Generator::Affine(2)]).unwrap().scale(&LaurentScalar::q_pow(-2));
        assert_eq!(p, want);
    }

    #[test]
    fn constants_and_powers() {
        let a = m22();
        assert_eq!(parse("1", &a).unwrap(), NCPoly::one(&a));
        assert_eq!(parse("(q - q^-1)^2", &a).unwrap(), parse("q^2 - 2 + q^-2", &a).unwrap());
        assert_eq!(parse("X[1,1]^2", &a).unwrap(), parse("X[1,1]*X[1,1]", &a).unwrap());
        assert_eq!(parse("X[1,1]^0", &a).unwrap(), NCPoly::one(&a));
        assert_eq!(parse("-3/4*X[2,1]", &a).unwrap().to_string(), "-3/4*X[2,1]");
        assert_eq!(parse("(2)^-1", &a).unwrap(), parse("1/2", &a).unwrap());
    }

    #[test]
    fn errors() {
        let a = m22();
        assert!(matches!(parse("X[1,1] +", &a), Err(Error::Syntax { pos: 8, .. })));
        assert!(matches!(parse("X[3,1]", &a), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse("y[1]", &a), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("X[1,1]^-1", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(q-1)^-1", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse("1/0", &a), Err(Error::Syntax { .. })));
        assert!(matches!(parse("X[1,1] X[2,2]", &a), Err(Error::Syntax { pos: 7, .. })));
        assert!(matches!(parse("X[1,1] & 2", &a), Err(Error::Syntax { pos: 7, .. })));
        let t = Algebra::affine_tensor(2, 3).unwrap();
        assert!(matches!(parse("z[4]", &t), Err(Error::IndexOutOfRange(_))));
        assert!(parse("z[3]*y[2]", &t).is_ok());
    }

    #[test]
    fn printed_forms_parse_back() {
        let a = m22();
        for text in ["(1*q^1 - 1*q^-1)*X[1,1]*X[2,2]", "1/2*q^2*X[1,2] - q^-1", "-q*X[2,1] + 7"] {
            let p = parse(text, &a).unwrap();
            assert_eq!(parse(&p.to_string(), &a).unwrap(), p);
        }
    }

    #[test]
    fn q_values() {
        assert_eq!(parse_q_value("-3/2").unwrap(), crate::scalar::rational(-3, 2));
        assert!(parse_q_value("1/0").is_err());
        assert!(parse_q_value("--1").is_err());
        assert!(is_degenerate_q(&crate::scalar::rational(-1, 1)));
    }
}
