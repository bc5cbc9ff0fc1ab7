//! Parser for scalar literals such as `1/2*z^3 - 2`.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int ['/' int] | 'z' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Parses `text` as an element of `field`.  Errors carry the 1-based column.
pub fn parse_scalar(field: &Field, text: &str) -> Result<FieldElement> {
    let chars: Vec<(usize, char)> =
        text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
    let mut p = Parser { field, chars, pos: 0, end_col: text.chars().count() + 1 };
    if p.chars.is_empty() {
        return Err(p.err("empty scalar literal"));
    }
    let v = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.err(&format!("unexpected `{}`", p.chars[p.pos].1)));
    }
    Ok(v)
}

struct Parser<'a> {
    field: &'a Field,
    chars: Vec<(usize, char)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn col(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.end_col)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { line: 1, col: self.col(), msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.field.zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FieldElement> {
        let (base, is_z) = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.int()?;
        let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
        if is_z {
            let e = if neg { -e } else { e };
            return self.field.zeta_pow(e).map_err(|_| self.err("`z` is only defined over cyclotomic fields"));
        }
        let v = base.pow(e as u64);
        if neg {
            v.inv().map_err(|_| self.err("zero raised to a negative power"))
        } else {
            Ok(v)
        }
    }

    fn atom(&mut self) -> Result<(FieldElement, bool)> {
        match self.peek() {
            Some('z') | Some('Z') => {
                let col_err = self.err("`z` is only defined over cyclotomic fields");
                self.pos += 1;
                let v = self.field.zeta_pow(1).map_err(|_| col_err)?;
                Ok((v, true))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok((v, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.int()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.err("zero denominator");
                    let den = self.int()?;
                    if den == BigInt::from(0) {
                        return Err(at);
                    }
                    q /= BigRational::from_integer(den);
                }
                let at = self.err("denominator vanishes in this field");
                let v = self.field.from_rational(&q).map_err(|_| at)?;
                Ok((v, false))
            }
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of scalar literal")),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_literal() {
        let k = Field::cyclotomic(8);
        let x = parse_scalar(&k, " 1/2 * z^3 -2").unwrap();
        let z3 = k.zeta_pow(3).unwrap();
        let half = k.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(x, &(&half * &z3) - &k.from_i64(2));
        assert_eq!(parse_scalar(&k, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn z_powers_reduce() {
        let k = Field::cyclotomic(8);
        assert_eq!(parse_scalar(&k, "z^4").unwrap(), k.from_i64(-1));
        assert_eq!(parse_scalar(&k, "z^-1").unwrap(), parse_scalar(&k, "z^7").unwrap());
        assert_eq!(parse_scalar(&k, "(1+z)^2").unwrap(), parse_scalar(&k, "1 + 2*z + z^2").unwrap());
    }

    #[test]
    fn prime_field_literals() {
        let k = Field::prime(5);
        assert_eq!(parse_scalar(&k, "1/2").unwrap().residue(), Some(3));
        assert_eq!(parse_scalar(&k, "-1").unwrap().residue(), Some(4));
        assert!(parse_scalar(&k, "z").is_err());
        assert!(parse_scalar(&k, "1/5").is_err());
    }

    #[test]
    fn errors_report_columns() {
        let k = Field::rationals();
        match parse_scalar(&k, "1 + * 2") {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar(&k, "").is_err());
        assert!(parse_scalar(&k, "1/0").is_err());
        assert!(parse_scalar(&k, "(1").is_err());
    }
}
