//! Text form of polynomials and rational functions.
//!
//! Printing produces `(num)/(den)` or just `num`, with `*` products and `^`
//! powers; [`parse_rational`] reads that form (and ordinary infix input) back.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::space::VariableSpace;

fn write_monomial(out: &mut String, space: &VariableSpace, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(space.name(i));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = if negative { -c } else { c.clone() };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            write_monomial(&mut out, p.space(), m);
        }
    }
    out
}

pub fn format_rational(f: &RationalFunction) -> String {
    if f.is_polynomial() {
        format_polynomial(f.numerator())
    } else {
        format!(
            "({})/({})",
            format_polynomial(f.numerator()),
            format_polynomial(f.denominator())
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(self))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self))
    }
}

/// Parses infix text over the given variables.
pub fn parse_rational(space: &VariableSpace, field: Field, text: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        space,
        field,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(
            p.pos,
            format!("unexpected `{}`", p.src[p.pos] as char),
        ));
    }
    Ok(v)
}

/// Like [`parse_rational`] but rejects proper fractions.
pub fn parse_polynomial(space: &VariableSpace, field: Field, text: &str) -> Result<Polynomial> {
    let f = parse_rational(space, field, text)?;
    if !f.is_polynomial() {
        return Err(Error::parse(0, "expected a polynomial"));
    }
    Ok(f.into_parts().0)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    space: &'a VariableSpace,
    field: Field,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.try_div(&rhs)
                    .map_err(|_| Error::parse(at, "division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let digits = self.digits();
        let e: i64 = digits
            .parse()
            .map_err(|_| Error::parse(at, "expected an exponent"))?;
        base.pow(if negative { -e } else { e })
            .map_err(|_| Error::parse(at, "zero raised to a negative power"))
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().expect("digits");
                let c: Scalar = self.field.from_bigint(&n);
                Ok(RationalFunction::constant(self.space, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .space
                    .index_of(name)
                    .ok_or_else(|| Error::parse(start, format!("unknown variable `{name}`")))?;
                Ok(RationalFunction::var(self.space, self.field, i))
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected `{}`", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_and_reparses() {
        let s = VariableSpace::indexed("x", 0, 3);
        let q = Field::rationals();
        let f = parse_rational(&s, q, "(x0^2*x1 + 3)/(x2 - 1)").unwrap();
        assert_eq!(format_rational(&f), "(x0^2*x1 + 3)/(x2 - 1)");
        let g = parse_rational(&s, q, "-1/2*x0 + x1^-1").unwrap();
        assert_eq!(parse_rational(&s, q, &g.to_string()).unwrap(), g);
        let h = parse_rational(&s, Field::new(7).unwrap(), "7*x0 + 8").unwrap();
        assert_eq!(h.to_string(), "1");
    }

    #[test]
    fn reports_positions() {
        let s = VariableSpace::indexed("x", 0, 2);
        let q = Field::rationals();
        assert_eq!(
            parse_rational(&s, q, "x0 + y"),
            Err(Error::parse(5, "unknown variable `y`"))
        );
        assert!(matches!(
            parse_rational(&s, q, "x0/(x1 - x1)"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_rational(&s, q, "(x0"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }
}
