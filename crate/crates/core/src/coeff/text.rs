//! Canonical text form of β-polynomials and fractions.
//!
//! Terms are written highest exponent first, `b` stands for β, a unit
//! coefficient is omitted (`b^2`, `-b`), and a fraction is `num / den` with
//! either side parenthesized when it has more than one term:
//! `(b^2 + 1) / 2`, `1 / (b + 2)`, `-3*b^-1 + 4`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i64, &BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (exp, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                f.write_str("-")?;
            }
        } else if neg {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        match *exp {
            0 => write!(f, "{abs}")?,
            e => {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if e == 1 {
                    f.write_str("b")?;
                } else {
                    write!(f, "b^{e}")?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    B,
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            'b' | 'β' => out.push(Tok::B),
            '^' => out.push(Tok::Caret),
            '*' => out.push(Tok::Star),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '/' => out.push(Tok::Slash),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(digits.parse().expect("ascii digits")));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

pub(crate) type TermMap = BTreeMap<i64, BigInt>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(n)) => {
                let e: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse("exponent out of range".into()))?;
                Ok(if neg { -e } else { e })
            }
            t => Err(Error::Parse(format!("expected exponent, found {t:?}"))),
        }
    }

    fn term(&mut self) -> Result<(i64, BigInt)> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    self.expect(Tok::B)?;
                    Ok((self.exponent()?, n))
                } else {
                    Ok((0, n))
                }
            }
            Some(Tok::B) => Ok((self.exponent()?, BigInt::one())),
            t => Err(Error::Parse(format!("expected term, found {t:?}"))),
        }
    }

    fn poly(&mut self) -> Result<TermMap> {
        let mut out = TermMap::new();
        let mut sign = BigInt::one();
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            sign = -sign;
        }
        loop {
            let (e, c) = self.term()?;
            let entry = out.entry(e).or_insert_with(BigInt::zero);
            *entry += sign * c;
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    sign = BigInt::one();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    sign = -BigInt::one();
                }
                _ => break,
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn group(&mut self) -> Result<TermMap> {
        if self.peek() == Some(&Tok::LParen) {
            self.bump();
            let p = self.poly()?;
            self.expect(Tok::RParen)?;
            Ok(p)
        } else {
            self.poly()
        }
    }
}

/// Parses `num` or `num / den`; each side a sum of terms.
pub(crate) fn parse_fraction(s: &str) -> Result<(TermMap, TermMap)> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let num = p.group()?;
    let den = if p.peek() == Some(&Tok::Slash) {
        p.bump();
        p.group()?
    } else {
        TermMap::from([(0, BigInt::one())])
    };
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok((num, den))
}
