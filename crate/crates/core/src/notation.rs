//! Tokenizer shared by the word, term and h-vector parsers.
//!
//! Accepted tokens: `x`, `y`, `X`, `Y` (each with optional `^n`), `A`,
//! `Ā` or `Abar` (each with optional `^n`), and `{k}`. Exponents may also be
//! written as superscripts, as in `X²`. Whitespace is ignored.

use crate::error::ParseError;
use crate::symbol::Flavor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    /// First variable of the pair (`x` or `X`).
    First(Flavor, usize),
    /// Second variable of the pair (`y` or `Y`).
    Second(Flavor, usize),
    Pad(Flavor, usize),
    Local(u32),
}

pub(crate) struct Spanned {
    pub token: Token,
    pub column: usize,
}

pub(crate) fn tokenize(input: &str, base_column: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let column = base_column + i;
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let token = match c {
            'x' | 'y' | 'X' | 'Y' => {
                i += 1;
                let flavor = if c.is_lowercase() { Flavor::Final } else { Flavor::Aux };
                let e = exponent(&chars, &mut i, base_column)?;
                if c.to_ascii_lowercase() == 'x' {
                    Token::First(flavor, e)
                } else {
                    Token::Second(flavor, e)
                }
            }
            'Ā' => {
                i += 1;
                Token::Pad(Flavor::Aux, exponent(&chars, &mut i, base_column)?)
            }
            'A' => {
                i += 1;
                let flavor = if chars[i..].starts_with(&['b', 'a', 'r']) {
                    i += 3;
                    Flavor::Aux
                } else if chars.get(i) == Some(&'\u{0304}') {
                    // combining macron
                    i += 1;
                    Flavor::Aux
                } else {
                    Flavor::Final
                };
                Token::Pad(flavor, exponent(&chars, &mut i, base_column)?)
            }
            '{' => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == '}')
                    .ok_or_else(|| ParseError::new(column, "unterminated `{`"))?;
                let body: String = chars[i + 1..i + close].iter().collect();
                let k: u32 = body
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::new(column + 1, format!("bad local index `{body}`")))?;
                if k == 0 {
                    return Err(ParseError::new(column + 1, "the local symbol {0} is not allowed"));
                }
                i += close + 1;
                Token::Local(k)
            }
            other => return Err(ParseError::new(column, format!("unexpected character `{other}`"))),
        };
        out.push(Spanned { token, column });
    }
    Ok(out)
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn exponent(chars: &[char], i: &mut usize, base_column: usize) -> Result<usize, ParseError> {
    if chars.get(*i).is_some_and(|c| SUPERSCRIPTS.contains(c)) {
        let mut e = 0usize;
        while let Some(d) = chars.get(*i).and_then(|c| SUPERSCRIPTS.iter().position(|s| s == c)) {
            e = e
                .checked_mul(10)
                .and_then(|e| e.checked_add(d))
                .ok_or_else(|| ParseError::new(base_column + *i, "exponent too large"))?;
            *i += 1;
        }
        return Ok(e);
    }
    if chars.get(*i) != Some(&'^') {
        return Ok(1);
    }
    let start = *i + 1;
    let mut end = start;
    while end < chars.len() && chars[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(ParseError::new(base_column + *i, "expected an exponent after `^`"));
    }
    let digits: String = chars[start..end].iter().collect();
    *i = end;
    digits.parse().map_err(|_| ParseError::new(base_column + start, "exponent too large"))
}
