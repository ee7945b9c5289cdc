//! Text grammar for polynomials.
//!
//! Coefficients are integers or `a/b` rationals, variables come from
//! `x0|x1|x2|x|y|t`, operators are `+ - * ^`, and implicit multiplication is
//! rejected. Example: `x^3*y - x*y^3 + 2*x^3 - y^3`.

use crate::poly::Poly;
use crate::rational::{parse_rat, Rat};
use num_traits::One;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let b: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                // optional /denominator
                if i < b.len() && b[i] == '/' {
                    let mut j = i + 1;
                    while j < b.len() && b[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == i + 1 {
                        return Err(format!("bad rational near `{}`", &s[start..]));
                    }
                    i = j;
                }
                let text: String = b[start..i].iter().collect();
                out.push(Tok::Num(parse_rat(&text)?));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == '_') {
                    i += 1;
                }
                let name: String = b[start..i].iter().collect();
                out.push(Tok::Var(name));
            }
            '.' => return Err("decimal coefficients are not accepted; use a/b".into()),
            _ => return Err(format!("unexpected character `{c}`")),
        }
    }
    Ok(out)
}

const STANDARD_VARS: [&str; 6] = ["x0", "x1", "x2", "x", "y", "t"];

/// Parse a polynomial restricted to the standard variables.
pub fn parse_poly(s: &str) -> Result<Poly, String> {
    parse_poly_with(s, &STANDARD_VARS)
}

/// Parse a polynomial over an explicit variable alphabet.
pub fn parse_poly_with(s: &str, allowed: &[&str]) -> Result<Poly, String> {
    if s.trim().is_empty() {
        return Err("empty polynomial text".into());
    }
    let toks = tokenize(s)?;
    let mut i = 0usize;
    let mut acc = Poly::zero();
    while i < toks.len() {
        let mut sign = Rat::one();
        while let Some(t) = toks.get(i) {
            match t {
                Tok::Plus => i += 1,
                Tok::Minus => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        let (term, ni) = parse_term(&toks, i, allowed)?;
        i = ni;
        acc = acc.add(&term.scale(&sign));
        match toks.get(i) {
            None => break,
            Some(Tok::Plus) | Some(Tok::Minus) => continue,
            Some(t) => return Err(format!("expected + or - between terms, found {t:?}")),
        }
    }
    Ok(acc)
}

fn parse_term(toks: &[Tok], mut i: usize, allowed: &[&str]) -> Result<(Poly, usize), String> {
    let mut factors: Vec<Poly> = Vec::new();
    loop {
        let (f, ni) = parse_factor(toks, i, allowed)?;
        factors.push(f);
        i = ni;
        if let Some(Tok::Star) = toks.get(i) {
            i += 1;
            continue;
        }
        break;
    }
    let mut out = Poly::one();
    for f in &factors {
        out = out.mul(f);
    }
    Ok((out, i))
}

fn parse_factor(toks: &[Tok], i: usize, allowed: &[&str]) -> Result<(Poly, usize), String> {
    let base = match toks.get(i) {
        Some(Tok::Num(r)) => Poly::constant(r.clone()),
        Some(Tok::Var(v)) => {
            if !allowed.contains(&v.as_str()) {
                return Err(format!("unknown variable `{v}`"));
            }
            Poly::var(v)
        }
        other => return Err(format!("expected coefficient or variable, found {other:?}")),
    };
    let mut i = i + 1;
    if let Some(Tok::Caret) = toks.get(i) {
        i += 1;
        // allow a negated exponent token so we can reject it cleanly
        let neg = matches!(toks.get(i), Some(Tok::Minus));
        if neg {
            return Err("negative exponents are not accepted".into());
        }
        match toks.get(i) {
            Some(Tok::Num(r)) if r.is_integer() && !num_traits::Signed::is_negative(r) => {
                let e: u32 = r
                    .to_integer()
                    .try_into()
                    .map_err(|_| "exponent too large".to_string())?;
                i += 1;
                Ok((base.pow(e), i))
            }
            other => Err(format!("expected nonnegative integer exponent, found {other:?}")),
        }
    } else {
        Ok((base, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert!(parse_poly("x^3*y - x*y^3 + 2*x^3 - y^3").is_ok());
        assert!(parse_poly("3/2*x + 2*y").is_ok());
        assert!(parse_poly("1 + x0*x1").is_ok());
        assert!(parse_poly("2x").is_err(), "implicit multiplication");
        assert!(parse_poly("x*z").is_err(), "unknown variable");
        assert!(parse_poly("x^-1").is_err(), "negative exponent");
        assert!(parse_poly("1.5*x").is_err(), "decimal coefficient");
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn custom_alphabet() {
        let p = parse_poly_with("b10*g01 - b01*g10", &["b10", "b01", "g10", "g01"]).unwrap();
        assert_eq!(p.vars().len(), 4);
    }

    #[test]
    fn unary_minus() {
        let p = parse_poly("-x + 1").unwrap();
        assert_eq!(p.to_string(), "-x + 1");
        let q = parse_poly("-3").unwrap();
        assert_eq!(q.to_string(), "-3");
    }
}
