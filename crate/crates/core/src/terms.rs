//! Index terms `x^i y^j W`, their stratification dimension vectors, and the
//! implication order between broadly similar terms.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::ParseError;
use crate::notation::{tokenize, Token};
use crate::symbol::{Flavor, Symbol, SymbolWord};

/// `x^i y^j W` (or `X^i Y^j W` in the auxiliary flavor).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTerm {
    xexp: usize,
    yexp: usize,
    word: SymbolWord,
}

impl IndexTerm {
    pub fn new(xexp: usize, yexp: usize, word: SymbolWord) -> Self {
        assert!(!word.ends_with_pad(), "a term's word cannot end in a pad");
        Self { xexp, yexp, word }
    }

    pub fn xexp(&self) -> usize {
        self.xexp
    }

    pub fn yexp(&self) -> usize {
        self.yexp
    }

    pub fn word(&self) -> &SymbolWord {
        &self.word
    }

    pub fn flavor(&self) -> Flavor {
        self.word.flavor()
    }

    pub fn degree(&self) -> usize {
        self.xexp + self.yexp + self.word.degree()
    }

    /// Number of local symbols.
    pub fn order(&self) -> usize {
        self.word.locals().len()
    }

    /// Parses e.g. `X^2Y^3Ā^4{5}Ā^2{6}`, `X²{1}`, `xA{1}` or `1`. Variables
    /// come before the word; upper-case variables and `Ā` make an auxiliary
    /// term, lower-case and `A` a final one. A term with neither takes
    /// `default`.
    pub fn parse(input: &str, default: Flavor) -> Result<Self, ParseError> {
        let trimmed = input.trim();
        if trimmed == "1" {
            return Ok(Self::new(0, 0, SymbolWord::empty(default)));
        }
        let mut flavor: Option<Flavor> = None;
        let (mut xexp, mut yexp) = (0, 0);
        let mut symbols = Vec::new();
        let mut last_column = 1;
        for spanned in tokenize(input, 1)? {
            last_column = spanned.column;
            let f = match spanned.token {
                Token::First(f, _) | Token::Second(f, _) | Token::Pad(f, _) => Some(f),
                Token::Local(_) => None,
            };
            if let Some(f) = f {
                if flavor.is_some_and(|g| g != f) {
                    return Err(ParseError::new(spanned.column, "mixed auxiliary and final notation"));
                }
                flavor = Some(f);
            }
            match spanned.token {
                Token::First(..) | Token::Second(..) if !symbols.is_empty() => {
                    return Err(ParseError::new(spanned.column, "variables must precede the word"));
                }
                Token::First(_, e) => xexp += e,
                Token::Second(_, e) => yexp += e,
                Token::Pad(_, n) => symbols.extend(std::iter::repeat_n(Symbol::Pad, n)),
                Token::Local(k) => symbols.push(Symbol::local(k)),
            }
        }
        let word = SymbolWord::new(flavor.unwrap_or(default), symbols);
        if word.ends_with_pad() {
            return Err(ParseError::new(last_column, "a term's word cannot end in a pad"));
        }
        Ok(Self { xexp, yexp, word })
    }

    /// Same term with the other alphabet.
    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        Self { xexp: self.xexp, yexp: self.yexp, word: self.word.with_flavor(flavor) }
    }
}

impl fmt::Display for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = match self.flavor() {
            Flavor::Aux => ("X", "Y"),
            Flavor::Final => ("x", "y"),
        };
        let mut wrote = false;
        for (name, e) in [(x, self.xexp), (y, self.yexp)] {
            match e {
                0 => {}
                1 => f.write_str(name)?,
                _ => write!(f, "{name}^{e}")?,
            }
            wrote |= e > 0;
        }
        if self.word.is_empty() && !wrote {
            return f.write_str("1");
        }
        write!(f, "{}", self.word)
    }
}

/// `d_1 < … < d_{r+1}`: starting from the degree and reading the word right
/// to left, each local symbol lowers the value by its degree plus the pads
/// immediately before it.
pub fn strata_vector(t: &IndexTerm) -> Vec<usize> {
    let profile = t.word.pad_profile();
    let locals = t.word.locals();
    let mut top = t.degree();
    let mut values = vec![top];
    for j in (0..locals.len()).rev() {
        top -= 2 * locals[j] as usize + 1 + profile[j];
        values.push(top);
    }
    values.reverse();
    values
}

/// Equal degree, equal `y` exponent, equal flavor, and the same local
/// symbols in the same order.
pub fn broadly_similar(a: &IndexTerm, b: &IndexTerm) -> bool {
    a.degree() == b.degree() && a.yexp == b.yexp && a.flavor() == b.flavor() && a.word.locals() == b.word.locals()
}

/// `a ⟹ b`: broadly similar with every stratum of `a` at least as large as
/// the matching stratum of `b`.
pub fn implies(a: &IndexTerm, b: &IndexTerm) -> bool {
    broadly_similar(a, b) && strata_vector(a).iter().zip(strata_vector(b)).all(|(x, y)| *x >= y)
}

/// Sum of the strata; every move of [`downset`] lowers it.
pub fn potential(t: &IndexTerm) -> usize {
    strata_vector(t).iter().sum()
}

fn single_moves(t: &IndexTerm) -> Vec<IndexTerm> {
    let mut out = Vec::new();
    if t.xexp > 0 {
        let word = t.word.prepend_pads(1);
        if !word.ends_with_pad() {
            out.push(IndexTerm { xexp: t.xexp - 1, yexp: t.yexp, word });
        }
    }
    let symbols = t.word.symbols();
    for i in 0..symbols.len().saturating_sub(1) {
        if symbols[i].is_pad() && !symbols[i + 1].is_pad() {
            let mut s = symbols.to_vec();
            s.swap(i, i + 1);
            let word = SymbolWord::new(t.flavor(), s);
            if !word.ends_with_pad() {
                out.push(IndexTerm { xexp: t.xexp, yexp: t.yexp, word });
            }
        }
    }
    out
}

/// Closure of `t` under replacing an `X` by a pad at the front of the word
/// and sliding a pad rightwards over a local symbol, discarding anything
/// that ends in a pad. Sorted.
pub fn downset(t: &IndexTerm) -> Vec<IndexTerm> {
    let mut seen = BTreeSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(u) = queue.pop_front() {
        for v in single_moves(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Words of degree `n` in the given flavor that do not end in a pad.
pub fn enumerate_words(n: usize, flavor: Flavor) -> Vec<SymbolWord> {
    let mut table: Vec<Vec<Vec<Symbol>>> = vec![vec![Vec::new()]];
    for d in 1..=n {
        let mut words = Vec::new();
        for w in table[d - 1].iter().filter(|w| !w.is_empty()) {
            let mut v = vec![Symbol::Pad];
            v.extend_from_slice(w);
            words.push(v);
        }
        for k in 1..=((d - 1) / 2) {
            for w in &table[d - 2 * k - 1] {
                let mut v = vec![Symbol::local(k as u32)];
                v.extend_from_slice(w);
                words.push(v);
            }
        }
        table.push(words);
    }
    let mut out: Vec<SymbolWord> = table.swap_remove(n).into_iter().map(|s| SymbolWord::new(flavor, s)).collect();
    out.sort();
    out
}

/// All final terms `x^i y^j W` of degree `n`, grouped by word, with the
/// power of `y` increasing within each group.
pub fn enumerate_terms(n: usize) -> Vec<IndexTerm> {
    enumerate_terms_in(n, Flavor::Final)
}

pub fn enumerate_terms_in(n: usize, flavor: Flavor) -> Vec<IndexTerm> {
    let mut out = Vec::new();
    for d in 0..=n {
        for word in enumerate_words(d, flavor) {
            for yexp in 0..=(n - d) {
                out.push(IndexTerm::new(n - d - yexp, yexp, word.clone()));
            }
        }
    }
    out.sort_by(|a, b| (a.word(), a.yexp()).cmp(&(b.word(), b.yexp())));
    out
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a.checked_add(b).expect("Fibonacci overflow"));
    }
    a
}
