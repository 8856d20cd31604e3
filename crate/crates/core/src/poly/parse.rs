//! Text syntax for polynomials: `3/2*a1^2*a6 - a2*a8`.
//! Variables match `[A-Za-z][A-Za-z0-9_]*`; coefficients are integers or
//! `p/q` fractions; `^` takes a nonnegative integer exponent. `*` between
//! factors is required, parentheses are not supported.

use super::{Mono, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num::traits::One;

#[derive(Debug, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                let n = s
                    .parse::<Int>()
                    .map_err(|_| Error::Parse(format!("bad integer {s}")))?;
                toks.push(Tok::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_')
                {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

pub fn parse(ring: &PolyRing, text: &str) -> Result<Poly> {
    let toks = lex(text)?;
    let mut terms: Vec<(Mono, Rat)> = Vec::new();
    let mut i = 0;
    let mut sign = Rat::one();
    let mut expect_term = true;
    // handle a leading sign
    while i < toks.len() {
        if expect_term {
            // optional run of signs already folded into `sign`
            match &toks[i] {
                Tok::Plus => {
                    i += 1;
                    continue;
                }
                Tok::Minus => {
                    sign = -sign;
                    i += 1;
                    continue;
                }
                _ => {}
            }
            let (mono, coef, next) = parse_term(ring, &toks, i)?;
            terms.push((mono, coef * &sign));
            sign = Rat::one();
            i = next;
            expect_term = false;
        } else {
            match &toks[i] {
                Tok::Plus => {
                    sign = Rat::one();
                    expect_term = true;
                    i += 1;
                }
                Tok::Minus => {
                    sign = -Rat::one();
                    expect_term = true;
                    i += 1;
                }
                t => return Err(Error::Parse(format!("expected + or -, got {t:?}"))),
            }
        }
    }
    if expect_term && !terms.is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    Ok(Poly::from_terms(ring, terms))
}

fn parse_term(ring: &PolyRing, toks: &[Tok], mut i: usize) -> Result<(Mono, Rat, usize)> {
    let mut coef = Rat::one();
    let mut exps = vec![0u16; ring.nvars()];
    loop {
        match toks.get(i) {
            Some(Tok::Num(n)) => {
                i += 1;
                let mut c = Rat::from_integer(n.clone());
                if let Some(Tok::Slash) = toks.get(i) {
                    match toks.get(i + 1) {
                        Some(Tok::Num(d)) => {
                            c = Rat::new(n.clone(), d.clone());
                            i += 2;
                        }
                        _ => return Err(Error::Parse("expected denominator".into())),
                    }
                }
                coef *= c;
            }
            Some(Tok::Ident(name)) => {
                let vi = ring
                    .var_index(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                i += 1;
                let mut e: u16 = 1;
                if let Some(Tok::Caret) = toks.get(i) {
                    match toks.get(i + 1) {
                        Some(Tok::Num(n)) => {
                            e = n
                                .to_string()
                                .parse::<u16>()
                                .map_err(|_| Error::Parse("exponent too large".into()))?;
                            i += 2;
                        }
                        _ => return Err(Error::Parse("expected exponent".into())),
                    }
                }
                exps[vi] = exps[vi]
                    .checked_add(e)
                    .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
            }
            _ => return Err(Error::Parse("expected a term".into())),
        }
        if let Some(Tok::Star) = toks.get(i) {
            i += 1;
            continue;
        }
        break;
    }
    Ok((Mono::new(exps), coef, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    #[test]
    fn parse_display_roundtrip() {
        let ring = PolyRing::new(
            vec!["a1".into(), "a2".into(), "a6".into(), "a8".into()],
            MonomialOrder::DegRevLex,
        );
        let f = parse(&ring, "3/2*a1^2*a6 - a2*a8").unwrap();
        let s = f.to_string_in(&ring);
        let g = parse(&ring, &s).unwrap();
        assert_eq!(f, g);
        assert_eq!(s, "3/2*a1^2*a6 - a2*a8");
    }

    #[test]
    fn rejects_unknown_variable() {
        let ring = PolyRing::new(vec!["x".into()], MonomialOrder::DegRevLex);
        assert!(parse(&ring, "x + q").is_err());
    }

    #[test]
    fn leading_minus_and_constants() {
        let ring = PolyRing::new(vec!["x".into()], MonomialOrder::DegRevLex);
        let f = parse(&ring, "-x + 5/3").unwrap();
        assert_eq!(f.terms.len(), 2);
        let g = parse(&ring, "1").unwrap();
        assert!(g.leading().unwrap().0.is_one());
    }
}
