//! Formal sums `Σ P_W · W` of bigraded polynomials times symbol words.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{AlgebraError, ParseError};
use crate::poly::BiGradedPoly;
use crate::scalar::Coeff;
use crate::symbol::{Flavor, Symbol, SymbolWord};

/// An auxiliary (`[..]`, `X`, `Y`, `Ā`) or final (`(..)`, `x`, `y`, `A`)
/// h-vector of total degree `degree`.
///
/// Terms are kept normalized: no zero polynomial is stored and no word ends
/// in a pad. Two vectors are equal exactly when their term maps are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector<T> {
    degree: usize,
    flavor: Flavor,
    terms: BTreeMap<SymbolWord, BiGradedPoly<T>>,
}

impl<T: Coeff> HVector<T> {
    pub fn zero(degree: usize, flavor: Flavor) -> Self {
        Self { degree, flavor, terms: BTreeMap::new() }
    }

    /// `[1]` (or `(1)`) on the empty word.
    pub fn unit(flavor: Flavor) -> Self {
        let mut h = Self::zero(0, flavor);
        h.add_term(SymbolWord::empty(flavor), BiGradedPoly::one());
        h
    }

    pub fn from_terms(
        degree: usize,
        flavor: Flavor,
        terms: impl IntoIterator<Item = (SymbolWord, BiGradedPoly<T>)>,
    ) -> Self {
        let mut h = Self::zero(degree, flavor);
        for (w, p) in terms {
            h.add_term(w, p);
        }
        h
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&SymbolWord, &BiGradedPoly<T>)> {
        self.terms.iter()
    }

    pub fn get(&self, word: &SymbolWord) -> Option<&BiGradedPoly<T>> {
        self.terms.get(word)
    }

    /// Coefficient of `u^i v^j W` (zero when absent).
    pub fn coefficient(&self, first: usize, second: usize, word: &SymbolWord) -> T {
        match self.terms.get(word) {
            Some(p) if p.degree() == first + second => p.coeff(second).clone(),
            _ => T::zero(),
        }
    }

    /// Accumulates `poly · word`, applying the terminator and dropping zeros.
    ///
    /// Panics when the word flavor or the total degree disagrees with the
    /// vector; those are construction bugs, not data errors.
    pub fn add_term(&mut self, word: SymbolWord, poly: BiGradedPoly<T>) {
        assert_eq!(word.flavor(), self.flavor, "word flavor differs from vector flavor");
        assert_eq!(
            poly.degree() + word.degree(),
            self.degree,
            "term {poly}{word} does not have degree {}",
            self.degree
        );
        if word.ends_with_pad() || poly.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                existing.add_assign(&poly);
                if existing.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, poly);
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.flavor != other.flavor {
            return Err(AlgebraError::FlavorMismatch);
        }
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    /// Adds `other` in place; panics on incompatible vectors.
    pub fn add_assign(&mut self, other: &Self) {
        self.check_compatible(other).expect("incompatible h-vectors");
        for (w, p) in &other.terms {
            self.add_term(w.clone(), p.clone());
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.degree, self.flavor, self.terms.iter().map(|(w, p)| (w.clone(), p.scale(c))))
    }

    pub fn neg(&self) -> Self {
        self.scale(&T::one().neg_exact())
    }

    /// Multiplies every polynomial by the first variable (`x` or `X`).
    pub fn mul_first(&self) -> Self {
        Self::from_terms(self.degree + 1, self.flavor, self.terms.iter().map(|(w, p)| (w.clone(), p.mul_first())))
    }

    /// Multiplies every polynomial by the second variable (`y` or `Y`).
    pub fn mul_second(&self) -> Self {
        Self::from_terms(self.degree + 1, self.flavor, self.terms.iter().map(|(w, p)| (w.clone(), p.mul_second())))
    }

    /// The empty-word polynomial, zero if absent.
    pub fn empty_word_part(&self) -> BiGradedPoly<T> {
        self.terms
            .get(&SymbolWord::empty(self.flavor))
            .cloned()
            .unwrap_or_else(|| BiGradedPoly::zero(self.degree))
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> HVector<U> {
        HVector::from_terms(self.degree, self.flavor, self.terms.iter().map(|(w, p)| (w.clone(), p.map(&f))))
    }

    /// `{"degree": n, "flavor": "final", "terms": [{"word": [...], "poly": [...]}]}`
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, p)| {
                let word: Vec<Value> = w
                    .symbols()
                    .iter()
                    .map(|s| match s {
                        Symbol::Pad => Value::from(self.flavor.pad_glyph()),
                        Symbol::Local(k) => json!({ "local": k.get() }),
                    })
                    .collect();
                let poly: Vec<Value> = p.coeffs().iter().map(scalar_json).collect();
                json!({ "word": word, "poly": poly })
            })
            .collect();
        json!({ "degree": self.degree, "flavor": self.flavor.name(), "terms": terms })
    }

    /// Parses the text rendering, e.g. `(12221) + (11){1} + (1)A{1}` or
    /// `[12221] + [11]{1}`. The bracket style fixes the flavor; `0` is the
    /// zero vector of the given degree.
    pub fn parse(input: &str, degree: usize) -> Result<Self, ParseError> {
        let trimmed = input.trim();
        let open = trimmed.chars().next().ok_or_else(|| ParseError::new(1, "empty input"))?;
        if trimmed == "0" {
            return Err(ParseError::new(1, "the zero vector has no flavor; use HVector::zero"));
        }
        let flavor = match open {
            '(' => Flavor::Final,
            '[' => Flavor::Aux,
            _ => return Err(ParseError::new(1, "expected `(` or `[`")),
        };
        let close = if flavor == Flavor::Final { ')' } else { ']' };
        let mut h = Self::zero(degree, flavor);
        let chars: Vec<char> = input.chars().collect();
        let mut i = 0;
        let mut sign_negative = false;
        let mut expect_term = true;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if !expect_term {
                match c {
                    '+' => sign_negative = false,
                    '-' => sign_negative = true,
                    _ => return Err(ParseError::new(i + 1, "expected `+` or `-` between terms")),
                }
                expect_term = true;
                i += 1;
                continue;
            }
            if c != open {
                return Err(ParseError::new(i + 1, format!("expected `{open}`")));
            }
            let end = chars[i..]
                .iter()
                .position(|&d| d == close)
                .map(|p| p + i)
                .ok_or_else(|| ParseError::new(i + 1, "unterminated coefficient list"))?;
            let body: String = chars[i + 1..end].iter().collect();
            let poly = BiGradedPoly::<T>::parse_coeffs(&body).map_err(|e| ParseError::new(i + 2, e.to_string()))?;
            let word_end = chars[end + 1..]
                .iter()
                .position(|&d| d == '+' || d == '-' || d == open)
                .map(|p| p + end + 1)
                .unwrap_or(chars.len());
            let word_text: String = chars[end + 1..word_end].iter().collect();
            let word = SymbolWord::parse(&word_text, flavor).map_err(|e| ParseError::new(end + 1 + e.column, e.message))?;
            if word.flavor() != flavor {
                return Err(ParseError::new(end + 2, "pad flavor does not match the bracket style"));
            }
            if poly.degree() + word.degree() != degree {
                return Err(ParseError::new(i + 1, format!("term does not have degree {degree}")));
            }
            let poly = if sign_negative { poly.neg() } else { poly };
            h.add_term(word, poly);
            expect_term = false;
            i = word_end;
        }
        if expect_term {
            return Err(ParseError::new(chars.len(), "dangling operator"));
        }
        Ok(h)
    }
}

pub(crate) fn scalar_json<T: Coeff>(c: &T) -> Value {
    let s = c.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

impl<T: Coeff> fmt::Display for HVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let (open, close) = match self.flavor {
            Flavor::Aux => ('[', ']'),
            Flavor::Final => ('(', ')'),
        };
        for (i, (w, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{open}{}{close}{w}", p.render_coeffs())?;
        }
        Ok(())
    }
}
