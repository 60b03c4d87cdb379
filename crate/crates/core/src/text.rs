//! Canonical text form of polynomials.
//!
//! ```text
//! poly   := "0" | term (" + " term)*
//! term   := "1" | factor ("*" factor)*
//! factor := varname ("^" uint)?
//! ```
//!
//! Printing emits exactly this form (terms in descending lex, factors in
//! variable order, exponent 1 written bare). Parsing also tolerates
//! whitespace around `+`, `*` and `^`, and cancels repeated terms mod 2.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::PolyGF2;
use crate::vars::VariableTable;

pub fn print_poly(p: &PolyGF2) -> String {
    p.to_string()
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &PolyGF2) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, m) in p.terms().iter().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write_monomial(f, p.table(), m)?;
    }
    Ok(())
}

pub fn write_monomial(f: &mut dyn fmt::Write, table: &VariableTable, m: &Monomial) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(table.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub fn monomial_to_string(table: &VariableTable, m: &Monomial) -> String {
    let mut s = String::new();
    write_monomial(&mut s, table, m).expect("writing to a String");
    s
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }
}

pub fn parse_poly(text: &str, table: &Arc<VariableTable>) -> Result<PolyGF2, Error> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    let rest = cur.text[cur.pos..].trim_end();
    if rest == "0" {
        return Ok(PolyGF2::zero(table));
    }
    let mut terms: Vec<Monomial> = Vec::new();
    loop {
        terms.push(parse_term(&mut cur, table)?);
        cur.skip_ws();
        if cur.pos == cur.text.len() {
            break;
        }
        if !cur.eat('+') {
            return Err(cur.err("expected `+` or end of input"));
        }
    }
    Ok(PolyGF2::from_monomials(table, terms))
}

fn parse_term(cur: &mut Cursor<'_>, table: &VariableTable) -> Result<Monomial, Error> {
    cur.skip_ws();
    let n = table.len();
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return Ok(Monomial::one(n));
    }
    let mut exps = [0u16; MAX_VARS];
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || name.starts_with(|c: char| c.is_ascii_digit()) {
            cur.pos = start;
            return Err(cur.err("expected a variable name"));
        }
        let name = name.to_string();
        let var = table.index_of(&name).ok_or(Error::UnknownVariable(name))?;
        let mut e: u16 = 1;
        if cur.eat('^') {
            cur.skip_ws();
            let digits = cur.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(cur.err("expected an exponent"));
            }
            e = digits
                .parse()
                .map_err(|_| cur.err("exponent out of range"))?;
        }
        exps[var] = exps[var].checked_add(e).ok_or(Error::ExponentOverflow)?;
        if !cur.eat('*') {
            break;
        }
    }
    Ok(Monomial::new(&exps[..n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tbl() -> Arc<VariableTable> {
        Arc::new(VariableTable::w2_w3())
    }

    #[test]
    fn parse_examples() {
        let t = tbl();
        let p = parse_poly("w2^3 + w3^2", &t).unwrap();
        assert_eq!(p.len(), 2);
        assert!(parse_poly("0", &t).unwrap().is_zero());
        assert!(parse_poly("w2*w3 + w2*w3", &t).unwrap().is_zero());
        assert_eq!(parse_poly("  w3 ^ 2+w2 ^3 ", &t).unwrap(), p);
        assert!(parse_poly("1", &t).unwrap().is_one());
    }

    #[test]
    fn print_examples() {
        let t = tbl();
        assert_eq!(print_poly(&PolyGF2::zero(&t)), "0");
        assert_eq!(print_poly(&PolyGF2::one(&t)), "1");
        let p = parse_poly("w3^2 + w3*w2^2*w2", &t).unwrap();
        assert_eq!(print_poly(&p), "w2^3*w3 + w3^2");
    }

    #[test]
    fn parse_errors() {
        let t = tbl();
        assert_eq!(
            parse_poly("w5", &t),
            Err(Error::UnknownVariable("w5".into()))
        );
        assert!(matches!(
            parse_poly("w2 +", &t),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(parse_poly("w2^", &t), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poly("w2 w3", &t),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_poly("", &t),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("w2^99999", &t),
            Err(Error::Parse { .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip(v in proptest::collection::vec((0u16..5, 0u16..5, 0u16..5), 0..10)) {
            let t = Arc::new(VariableTable::with_a(4));
            let p = PolyGF2::from_monomials(&t, v.into_iter().map(|(a, b, c)| Monomial::new(&[a, b, c])));
            let s = print_poly(&p);
            prop_assert_eq!(parse_poly(&s, &t).unwrap(), p);
        }
    }
}
