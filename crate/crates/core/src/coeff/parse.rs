//! Parser for the scalar text format produced by `Display`.

use super::cyclotomic::Cyclotomic;
use super::poly::{x, y, L, U, V, Z};
use super::rational::Q;
use super::scalar::Scalar;
use super::CoeffError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, CoeffError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let n = s[start..i]
                .parse::<i64>()
                .map_err(|_| CoeffError::Parse { pos: start, msg: "integer too large".into() })?;
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(CoeffError::Parse { pos: i, msg: format!("unexpected character '{}'", c) });
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
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T, CoeffError> {
        Err(CoeffError::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, CoeffError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, CoeffError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let at = self.here();
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| CoeffError::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, CoeffError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, CoeffError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let at = self.here();
            let e = match self.peek() {
                Some(Tok::Num(n)) => *n,
                _ => return self.err("expected integer exponent"),
            };
            self.pos += 1;
            let e = i32::try_from(e).map_err(|_| CoeffError::Parse { pos: at, msg: "exponent too large".into() })?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| CoeffError::Parse { pos: at, msg: "zero to a negative power".into() });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, CoeffError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Scalar::rational(Q::int(n)))
            }
            Some(Tok::Ident(id)) => {
                let at = self.here();
                self.pos += 1;
                ident(&id).ok_or(CoeffError::Parse { pos: at, msg: format!("unknown identifier '{}'", id) })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

fn ident(id: &str) -> Option<Scalar> {
    match id {
        "u" => return Some(Scalar::var(U)),
        "v" => return Some(Scalar::var(V)),
        "z" => return Some(Scalar::var(Z)),
        "l" => return Some(Scalar::var(L)),
        _ => {}
    }
    let (head, tail) = id.split_at(1);
    let k: usize = tail.parse().ok()?;
    match head {
        "x" => Some(Scalar::var(x(k))),
        "y" => Some(Scalar::var(y(k))),
        "z" if k >= 1 => Some(Scalar::cyclotomic(Cyclotomic::zeta_pow(k as u32, 1))),
        _ => None,
    }
}

/// Parses a scalar expression such as `(u^2 + 1)/(u*z)`.
pub fn parse_scalar(s: &str) -> Result<Scalar, CoeffError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["(u^2 + 1)/(u*z)", "-1/2*x1 + y0", "(1 + z3)*u^-2", "3", "(u - 1/u)/(v^2 + 1)"] {
            let a = parse_scalar(s).unwrap();
            let b = parse_scalar(&a.to_string()).unwrap();
            assert!(a.equals(&b), "{} -> {}", s, a);
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse_scalar("u + * v") {
            Err(CoeffError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {:?}", other),
        }
        assert!(parse_scalar("u/0").is_err());
        assert!(parse_scalar("q").is_err());
    }
}
