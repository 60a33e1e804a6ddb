//! Generator words: programs of polytope constructors applied to the point.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// `C`: pyramid.
    Cone,
    /// `I`: prism.
    Cylinder,
    /// `B`: bipyramid.
    Bipyramid,
}

impl Op {
    pub fn letter(self) -> char {
        match self {
            Op::Cone => 'C',
            Op::Cylinder => 'I',
            Op::Bipyramid => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'C' => Some(Op::Cone),
            'I' => Some(Op::Cylinder),
            'B' => Some(Op::Bipyramid),
            _ => None,
        }
    }
}

/// A word such as `CICIC·`, read right to left: the rightmost operator is
/// applied to the point first. The empty word is the point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorWord {
    ops: Vec<Op>,
}

impl GeneratorWord {
    pub fn point() -> Self {
        Self::default()
    }

    /// Operators in written order (outermost first).
    pub fn new(ops: Vec<Op>) -> Self {
        Self { ops }
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    /// Operators in application order (innermost first).
    pub fn application_order(&self) -> impl Iterator<Item = Op> + '_ {
        self.ops.iter().rev().copied()
    }

    pub fn contains_bipyramid(&self) -> bool {
        self.ops.contains(&Op::Bipyramid)
    }

    /// `op · self`.
    pub fn apply(&self, op: Op) -> Self {
        let mut ops = Vec::with_capacity(self.ops.len() + 1);
        ops.push(op);
        ops.extend_from_slice(&self.ops);
        Self { ops }
    }

    /// `prefix · self`, with `prefix` written outermost first.
    pub fn prefixed(&self, prefix: &[Op]) -> Self {
        let mut ops = prefix.to_vec();
        ops.extend_from_slice(&self.ops);
        Self { ops }
    }

    /// Every word of length `dim` over `alphabet`, in lexicographic order of
    /// the alphabet as given.
    pub fn all(dim: usize, alphabet: &[Op]) -> Vec<Self> {
        let mut out = vec![Self::point()];
        for _ in 0..dim {
            out = out
                .iter()
                .flat_map(|w| alphabet.iter().map(move |&op| {
                    let mut ops = w.ops.clone();
                    ops.push(op);
                    Self { ops }
                }))
                .collect();
        }
        out
    }

    /// Words over `{C, I}`.
    pub fn all_ic(dim: usize) -> Vec<Self> {
        Self::all(dim, &[Op::Cone, Op::Cylinder])
    }

    /// Words over `{C, I, B}`.
    pub fn all_icb(dim: usize) -> Vec<Self> {
        Self::all(dim, &[Op::Cone, Op::Cylinder, Op::Bipyramid])
    }

    /// Same word with the middle-dot terminator `·`.
    pub fn display_dot(&self) -> String {
        let mut s: String = self.ops.iter().map(|o| o.letter()).collect();
        s.push('·');
        s
    }

    /// Grammar: `(I|C|B)* ("." | "·")?`, whitespace ignored. An input with
    /// no operators needs the terminator.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut ops = Vec::new();
        let mut terminated = false;
        for (i, c) in input.chars().enumerate() {
            let column = i + 1;
            if c.is_whitespace() {
                continue;
            }
            if terminated {
                return Err(ParseError::new(column, format!("unexpected `{c}` after the terminator")));
            }
            match c {
                '.' | '·' => terminated = true,
                _ => match Op::from_letter(c) {
                    Some(op) => ops.push(op),
                    None => return Err(ParseError::new(column, format!("unknown operator `{c}`"))),
                },
            }
        }
        if ops.is_empty() && !terminated {
            return Err(ParseError::new(1, "empty word; write `.` for the point"));
        }
        Ok(Self { ops })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            write!(f, "{}", op.letter())?;
        }
        f.write_str(".")
    }
}

impl FromStr for GeneratorWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Op::*;

    #[test]
    fn parses_examples() {
        assert_eq!(GeneratorWord::parse("CICIC.").unwrap().ops(), [Cone, Cylinder, Cone, Cylinder, Cone]);
        assert_eq!(GeneratorWord::parse("BICCC·").unwrap().ops(), [Bipyramid, Cylinder, Cone, Cone, Cone]);
        assert_eq!(GeneratorWord::parse(" C I C ").unwrap().dim(), 3);
        assert_eq!(GeneratorWord::parse(".").unwrap(), GeneratorWord::point());
        assert_eq!(GeneratorWord::parse("·").unwrap(), GeneratorWord::point());
    }

    #[test]
    fn parse_errors_carry_columns() {
        let err = GeneratorWord::parse("CXC.").unwrap_err();
        assert_eq!(err.column, 2);
        assert!(GeneratorWord::parse("").is_err());
        assert!(GeneratorWord::parse("   ").is_err());
        assert!(GeneratorWord::parse("cic.").is_err());
        assert_eq!(GeneratorWord::parse("C.C").unwrap_err().column, 3);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(GeneratorWord::all_ic(4).len(), 16);
        assert_eq!(GeneratorWord::all_icb(3).len(), 27);
        let words: Vec<String> = GeneratorWord::all_ic(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["CC.", "CI.", "IC.", "II."]);
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(ops in prop::collection::vec(prop::sample::select(vec![Cone, Cylinder, Bipyramid]), 0..=10)) {
            let w = GeneratorWord::new(ops);
            prop_assert_eq!(GeneratorWord::parse(&w.to_string()).unwrap(), w.clone());
            prop_assert_eq!(GeneratorWord::parse(&w.display_dot()).unwrap(), w);
        }
    }
}
