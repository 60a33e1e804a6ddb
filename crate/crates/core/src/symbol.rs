//! Symbol words and the pad-sliding rewrite system.
//!
//! A word is a sequence of pad symbols (degree 1) and local symbols `{k}`
//! (degree `2k + 1`, `k >= 1`). Auxiliary words use the sliding pad `Ā`,
//! final words the frozen pad `A`. Every word is implicitly followed by a
//! terminator that annihilates a trailing pad, so a normalized word never
//! ends in a pad.
//!
//! Rewrite rules for a sliding pad, applied until none remains:
//!
//! ```text
//! Ā{k} -> A{k} + {k}Ā
//! ĀA   -> AA
//! Ā·   -> 0
//! ```

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::num::NonZeroU32;

use crate::error::ParseError;
use crate::notation::{tokenize, Token};

/// Which alphabet a word or vector lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// `X`, `Y`, `Ā`: before the change of variables.
    Aux,
    /// `x`, `y`, `A`.
    Final,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Aux => "aux",
            Flavor::Final => "final",
        }
    }

    pub fn pad_glyph(self) -> &'static str {
        match self {
            Flavor::Aux => "Ā",
            Flavor::Final => "A",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Pad,
    Local(NonZeroU32),
}

impl Symbol {
    /// Panics when `k == 0`.
    pub fn local(k: u32) -> Self {
        Symbol::Local(NonZeroU32::new(k).expect("local symbols start at {1}"))
    }

    pub fn degree(self) -> usize {
        match self {
            Symbol::Pad => 1,
            Symbol::Local(k) => 2 * k.get() as usize + 1,
        }
    }

    pub fn is_pad(self) -> bool {
        matches!(self, Symbol::Pad)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolWord {
    flavor: Flavor,
    symbols: Vec<Symbol>,
}

impl SymbolWord {
    pub fn empty(flavor: Flavor) -> Self {
        Self { flavor, symbols: Vec::new() }
    }

    pub fn new(flavor: Flavor, symbols: Vec<Symbol>) -> Self {
        Self { flavor, symbols }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.symbols.iter().map(|s| s.degree()).sum()
    }

    /// Whether the terminator kills this word.
    pub fn ends_with_pad(&self) -> bool {
        self.symbols.last().is_some_and(|s| s.is_pad())
    }

    /// The local indices in order, pads erased.
    pub fn locals(&self) -> Vec<u32> {
        self.symbols
            .iter()
            .filter_map(|s| match s {
                Symbol::Local(k) => Some(k.get()),
                Symbol::Pad => None,
            })
            .collect()
    }

    /// Number of pads before each local symbol, followed by the number of
    /// trailing pads.
    pub fn pad_profile(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut run = 0;
        for s in &self.symbols {
            match s {
                Symbol::Pad => run += 1,
                Symbol::Local(_) => {
                    out.push(run);
                    run = 0;
                }
            }
        }
        out.push(run);
        out
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        Self { flavor, symbols: self.symbols.clone() }
    }

    /// `pad^count · self`.
    pub fn prepend_pads(&self, count: usize) -> Self {
        let mut symbols = vec![Symbol::Pad; count];
        symbols.extend_from_slice(&self.symbols);
        Self { flavor: self.flavor, symbols }
    }

    pub fn prepend(&self, symbol: Symbol) -> Self {
        let mut symbols = Vec::with_capacity(self.symbols.len() + 1);
        symbols.push(symbol);
        symbols.extend_from_slice(&self.symbols);
        Self { flavor: self.flavor, symbols }
    }

    /// Parses a bare word such as `A{1}{2}` or `Ā²{1}` written as `Ā^2{1}`.
    /// A word without pads takes `default` as its flavor.
    pub fn parse(input: &str, default: Flavor) -> Result<Self, ParseError> {
        let mut flavor = None;
        let mut symbols = Vec::new();
        for spanned in tokenize(input, 1)? {
            match spanned.token {
                Token::Pad(f, n) => {
                    if flavor.is_some_and(|g| g != f) {
                        return Err(ParseError::new(spanned.column, "mixed pad flavors in one word"));
                    }
                    flavor = Some(f);
                    symbols.extend(std::iter::repeat_n(Symbol::Pad, n));
                }
                Token::Local(k) => symbols.push(Symbol::local(k)),
                Token::First(..) | Token::Second(..) => {
                    return Err(ParseError::new(spanned.column, "variables are not allowed inside a word"))
                }
            }
        }
        Ok(Self { flavor: flavor.unwrap_or(default), symbols })
    }

    fn sort_key(&self) -> (usize, Vec<u32>, Reverse<Vec<usize>>, Flavor) {
        (self.degree(), self.locals(), Reverse(self.pad_profile()), self.flavor)
    }
}

/// Canonical display order: by degree, then local subsequence, then with
/// pads as far left as possible first.
impl Ord for SymbolWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for SymbolWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            match s {
                Symbol::Pad => f.write_str(self.flavor.pad_glyph())?,
                Symbol::Local(k) => write!(f, "{{{k}}}")?,
            }
        }
        Ok(())
    }
}

/// One sliding pad in front of a normalized final word.
fn push_one(word: &[Symbol]) -> Vec<Vec<Symbol>> {
    match word.first() {
        None => Vec::new(),
        Some(Symbol::Pad) => {
            let mut w = vec![Symbol::Pad];
            w.extend_from_slice(word);
            vec![w]
        }
        Some(&local @ Symbol::Local(_)) => {
            let mut frozen = vec![Symbol::Pad];
            frozen.extend_from_slice(word);
            let mut out = vec![frozen];
            for mut rest in push_one(&word[1..]) {
                rest.insert(0, local);
                out.push(rest);
            }
            out
        }
    }
}

/// Normal form of `Ā^count · word` for a final word: a multiset of final
/// words, each of degree `count + degree(word)`.
pub fn push_pads(count: usize, word: &SymbolWord) -> Vec<SymbolWord> {
    assert_eq!(word.flavor(), Flavor::Final, "push_pads expects a final word");
    let mut current = vec![word.symbols().to_vec()];
    for _ in 0..count {
        current = current.iter().flat_map(|w| push_one(w)).collect();
    }
    current.into_iter().map(|s| SymbolWord::new(Flavor::Final, s)).collect()
}

/// Rewrites every sliding pad of an auxiliary word, giving the multiset of
/// final words it stands for.
pub fn normalize_aux_word(word: &SymbolWord) -> Vec<SymbolWord> {
    let mut acc: Vec<Vec<Symbol>> = vec![Vec::new()];
    for &s in word.symbols().iter().rev() {
        acc = match s {
            Symbol::Local(_) => acc
                .into_iter()
                .map(|mut w| {
                    w.insert(0, s);
                    w
                })
                .collect(),
            Symbol::Pad => acc.iter().flat_map(|w| push_one(w)).collect(),
        };
    }
    acc.into_iter().map(|s| SymbolWord::new(Flavor::Final, s)).collect()
}
