//! Flag vectors indexed by dimension sets.

use std::fmt;

use serde_json::{json, Value};

/// Flag counts `f_S` for every `S ⊆ {0, …, n−1}`, stored densely with `S`
/// encoded as a bit mask (bit `s` set when `s ∈ S`).
///
/// Dimension `-1` is the empty polytope: a single entry `f_∅`. Entries are
/// integers but may be negative or zero when the vector is a formal
/// combination rather than a polytope's.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagVector {
    dim: i32,
    entries: Vec<i64>,
}

pub(crate) fn table_len(dim: i32) -> usize {
    1usize << dim.max(0)
}

impl FlagVector {
    pub fn new(dim: i32, entries: Vec<i64>) -> Self {
        assert!(dim >= -1, "dimension below -1");
        assert_eq!(entries.len(), table_len(dim), "a dimension-{dim} flag vector has {} entries", table_len(dim));
        Self { dim, entries }
    }

    pub fn zero(dim: i32) -> Self {
        Self::new(dim, vec![0; table_len(dim)])
    }

    /// The empty polytope: dimension −1, `f_∅ = 1`.
    pub fn empty_polytope() -> Self {
        Self::new(-1, vec![1])
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get_mask(&self, mask: usize) -> i64 {
        self.entries[mask]
    }

    /// `f_S` for `S` given as a list of dimensions.
    pub fn get(&self, set: &[usize]) -> i64 {
        self.entries[set_to_mask(set)]
    }

    /// Number of `i`-faces.
    pub fn face_count(&self, i: usize) -> i64 {
        self.entries[1 << i]
    }

    /// `[f_0, …, f_{n−1}]`.
    pub fn face_vector(&self) -> Vec<i64> {
        (0..self.dim.max(0) as usize).map(|i| self.face_count(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "flag vector dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.checked_add(*b).expect("flag count overflow"))
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.checked_mul(c).expect("flag count overflow")).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Sum of the link flag vectors over all `i`-faces, read off from the
    /// flags that start with an `i`-face: `L_S = f_{{i} ∪ (S + i + 1)}`.
    pub fn link_sum(&self, i: usize) -> Self {
        let n = self.dim;
        assert!((i as i32) < n, "no {i}-faces are proper in dimension {n}");
        let link_dim = n - i as i32 - 1;
        let entries = (0..table_len(link_dim)).map(|s| self.entries[(1 << i) | (s << (i + 1))]).collect();
        Self::new(link_dim, entries)
    }

    /// `(S, f_S)` pairs in mask order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
        self.entries.iter().enumerate().map(|(m, &c)| (mask_to_set(m), c))
    }

    /// `{"dim": n, "entries": [{"set": [..], "count": c}, …]}`
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.iter().map(|(s, c)| json!({ "set": s, "count": c })).collect();
        json!({ "dim": self.dim, "entries": entries })
    }
}

pub fn set_to_mask(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &s| m | (1 << s))
}

pub fn mask_to_set(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&s| mask & (1 << s) != 0).collect()
}

/// `{}`, `{0}`, `{0,2}`.
pub fn render_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for FlagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "f{}={c}", render_set(&s))?;
        }
        Ok(())
    }
}
