//! Canonical text form for coefficients: `3*r^2*s^-1 - 2`, `(r - s) / (r + s)`.

use super::ratfunc::RatFunc2;
use super::zpoly::ZPoly2;
use super::CoeffError;
use num_bigint::BigInt;
use num_traits::{One, Signed};

pub fn render_poly(p: &ZPoly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if *e == (0, 0) || !a.is_one() {
            factors.push(a.to_string());
        }
        for (name, x) in [("r", e.0), ("s", e.1)] {
            match x {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{x}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn render_ratfunc(f: &RatFunc2) -> String {
    let num = render_poly(f.num_z());
    if f.den_z().is_one() {
        return num;
    }
    let wrap = |p: &ZPoly2, s: String| {
        if p.terms().len() > 1 {
            format!("({s})")
        } else {
            s
        }
    };
    format!(
        "{} / {}",
        wrap(f.num_z(), num),
        wrap(f.den_z(), render_poly(f.den_z()))
    )
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> CoeffError {
        CoeffError::Parse(format!(
            "{msg} at byte {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn integer(&mut self) -> Result<BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<BigInt>()
            .map_err(|_| self.err("expected integer"))
    }
}

fn parse_term(c: &mut Cursor) -> Result<((i32, i32), BigInt), CoeffError> {
    let mut coeff = BigInt::one();
    let mut e = (0i32, 0i32);
    loop {
        match c.peek() {
            Some(b) if b.is_ascii_digit() => coeff *= c.integer()?,
            Some(b'r') | Some(b's') => {
                let var = c.peek().unwrap();
                c.pos += 1;
                let mut x = 1i32;
                if c.eat(b'^') {
                    let v = c.integer()?;
                    x = i32::try_from(v).map_err(|_| c.err("exponent out of range"))?;
                }
                if var == b'r' {
                    e.0 += x;
                } else {
                    e.1 += x;
                }
            }
            _ => return Err(c.err("expected factor")),
        }
        if !c.eat(b'*') {
            return Ok((e, coeff));
        }
    }
}

fn parse_poly(c: &mut Cursor) -> Result<ZPoly2, CoeffError> {
    if c.eat(b'(') {
        let p = parse_poly(c)?;
        if !c.eat(b')') {
            return Err(c.err("expected ')'"));
        }
        return Ok(p);
    }
    let mut raw = Vec::new();
    let mut sign = BigInt::one();
    if c.eat(b'-') {
        sign = -sign;
    }
    loop {
        let (e, k) = parse_term(c)?;
        raw.push((e, k * &sign));
        match c.peek() {
            Some(b'+') => {
                c.pos += 1;
                sign = BigInt::one();
            }
            Some(b'-') => {
                c.pos += 1;
                sign = -BigInt::one();
            }
            _ => break,
        }
    }
    Ok(ZPoly2::from_terms(raw))
}

/// Parses the canonical text form (any equivalent spelling is accepted and
/// normalized).
pub fn parse_ratfunc(text: &str) -> Result<RatFunc2, CoeffError> {
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let num = parse_poly(&mut c)?;
    let den = if c.eat(b'/') {
        parse_poly(&mut c)?
    } else {
        ZPoly2::one()
    };
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    if den.is_zero() {
        return Err(CoeffError::DivisionByZero);
    }
    RatFunc2::from_zpolys(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_laurent_example() {
        let f = RatFunc2::monomial(3, 2, -1).sub(&RatFunc2::from_int(2));
        assert_eq!(f.to_string(), "3*r^2*s^-1 - 2");
        assert_eq!(parse_ratfunc("3*r^2*s^-1 - 2").unwrap(), f);
    }

    #[test]
    fn renders_fraction() {
        let f = RatFunc2::r()
            .sub(&RatFunc2::s())
            .div(&RatFunc2::r().add(&RatFunc2::s()))
            .unwrap();
        let t = f.to_string();
        assert_eq!(t, "(r - s) / (r + s)");
        assert_eq!(parse_ratfunc(&t).unwrap(), f);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("r +").is_err());
        assert!(parse_ratfunc("1 / 0").is_err());
        assert!(parse_ratfunc("x").is_err());
    }

    #[test]
    fn negative_leading_and_constant() {
        for t in ["-r*s + 1", "-7", "0", "1 / 2", "-3 / (r^2 + r*s + s^2)"] {
            let f = parse_ratfunc(t).unwrap();
            assert_eq!(f.to_string(), t);
        }
    }
}
