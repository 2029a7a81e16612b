//! Plain-text polynomial format: `coeff*var^exp*...` terms joined by `+`/`-`,
//! with ASCII aliases (`a`, `b`, `g3`, `u`, `psi<j>`, `eta`, `th`, `xi<j>`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::GradedPoly;
use super::vars::TableRef;
use super::Rational;
use crate::error::{Error, Result};

pub fn format_poly(p: &GradedPoly, display_names: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let table = p.table();
    let mut out = String::new();
    for (i, (mono, c)) in p.sorted_terms().into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        let is_const = mono.iter().all(|&e| e == 0);
        if !mag.is_one() || is_const {
            factors.push(format_rational(&mag));
        }
        for (j, &e) in mono.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = table.var(j);
            let name = if display_names { &v.name } else { &v.alias };
            if e == 1 {
                factors.push(name.clone());
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a rational such as `-3`, `7/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("invalid numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("invalid denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub fn parse_poly(input: &str, table: &TableRef) -> Result<GradedPoly> {
    Parser {
        src: input,
        bytes: input.as_bytes(),
        pos: 0,
        table,
    }
    .parse()
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    table: &'a TableRef,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn parse(mut self) -> Result<GradedPoly> {
        let mut total = GradedPoly::zero(self.table);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected `+` or `-`, found `{c}`")),
            };
            first = false;
            let term = self.term()?;
            total = if sign { &total - &term } else { &total + &term };
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<GradedPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GradedPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut q = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    q /= Rational::from_integer(den);
                }
                Ok(GradedPoly::constant(self.table, q))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                for ch in self.src[self.pos..].chars() {
                    if ch.is_alphanumeric() || ch == '_' {
                        self.pos += ch.len_utf8();
                    } else {
                        break;
                    }
                }
                let name = &self.src[start..self.pos];
                let idx = match self.table.index_of(name) {
                    Some(i) => i,
                    None => {
                        self.pos = start;
                        return self.err(format!("unknown variable `{name}`"));
                    }
                };
                let v = GradedPoly::var_at(self.table, idx);
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.digits()?;
                    let e: u32 = match u32::try_from(e) {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    Ok(v.pow(e))
                } else {
                    Ok(v)
                }
            }
            Some(c) => self.err(format!("unexpected character `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vars::VarTable;

    #[test]
    fn prints_in_graded_lex_order() {
        let t = VarTable::abc();
        let p = parse_poly("2*g3 + 2*a*b", &t).unwrap();
        assert_eq!(p.to_string(), "2*a*b + 2*g3");
        assert_eq!(p.pretty(), "2*α*β + 2*γ");
        let q = parse_poly("1/2*b + 1/2*a^2", &t).unwrap();
        assert_eq!(q.to_string(), "1/2*a^2 + 1/2*b");
    }

    #[test]
    fn signs_and_constants() {
        let t = VarTable::abcu();
        let p = parse_poly("-a - 3/4*u^2 + 5", &t).unwrap();
        assert_eq!(p.to_string(), "-3/4*u^2 - a + 5");
        assert_eq!(parse_poly(&p.to_string(), &t).unwrap(), p);
        assert_eq!(parse_poly("0", &t).unwrap().to_string(), "0");
    }

    #[test]
    fn odd_factor_order_matters() {
        let t = VarTable::symprod(2);
        let p = parse_poly("xi3*xi1", &t).unwrap();
        assert_eq!(p.to_string(), "-xi1*xi3");
        assert!(parse_poly("xi1*xi1", &t).unwrap().is_zero());
    }

    #[test]
    fn errors_report_position() {
        let t = VarTable::abc();
        match parse_poly("a + q", &t) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("a +", &t).is_err());
        assert!(parse_poly("", &t).is_err());
        assert!(parse_poly("1/0*a", &t).is_err());
        assert!(parse_poly("a b", &t).is_err());
    }
}
