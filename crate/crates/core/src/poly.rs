//! Homogeneous polynomials in a commuting pair of variables.

use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::Coeff;

/// A homogeneous polynomial `a_0 u^m + a_1 u^{m-1} v + ... + a_m v^m` stored
/// as its coefficient list.
///
/// The pair `(u, v)` is `(x, y)` for final h-vectors and `(X, Y)` for
/// auxiliary ones; the polynomial itself does not know which. The degree is
/// structural: the zero polynomial of degree `m` has `m + 1` zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiGradedPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> BiGradedPoly<T> {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![T::zero(); degree + 1] }
    }

    pub fn constant(c: T) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The monomial `u^(degree - index) v^index`.
    pub fn monomial(degree: usize, index: usize, c: T) -> Self {
        assert!(index <= degree);
        let mut p = Self::zero(degree);
        p.coeffs[index] = c;
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &T {
        &self.coeffs[index]
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_exact(b)).collect(),
        })
    }

    /// In-place accumulate; panics on a degree mismatch.
    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.degree(), other.degree(), "polynomial degree mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.add_exact(b);
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul_exact(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.neg_exact()).collect() }
    }

    /// Full product; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] = out.coeffs[i + j].add_exact(&a.mul_exact(b));
            }
        }
        out
    }

    /// Multiplies by `u + v`: `[a_0, a_0 + a_1, ..., a_{m-1} + a_m, a_m]`.
    pub fn mul_linear(&self) -> Self {
        let m = self.degree();
        let mut coeffs = Vec::with_capacity(m + 2);
        coeffs.push(self.coeffs[0].clone());
        for w in self.coeffs.windows(2) {
            coeffs.push(w[0].add_exact(&w[1]));
        }
        coeffs.push(self.coeffs[m].clone());
        Self { coeffs }
    }

    /// Multiplies by the first variable.
    pub fn mul_first(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(T::zero());
        Self { coeffs }
    }

    /// Multiplies by the second variable.
    pub fn mul_second(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Duplicates the middle coefficient, or the one just before the middle
    /// when there is no exact middle.
    pub fn repeat_middle(&self) -> Self {
        let mid = self.degree() / 2;
        let mut coeffs = self.coeffs.clone();
        coeffs.insert(mid + 1, self.coeffs[mid].clone());
        Self { coeffs }
    }

    /// Invariance under swapping the two variables.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `a_0 <= a_1 <= ...` up to the middle.
    pub fn is_unimodal(&self) -> bool {
        let half = self.degree() / 2;
        self.coeffs[..=half].windows(2).all(|w| w[0] <= w[1])
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> BiGradedPoly<U> {
        BiGradedPoly { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Coefficient list without delimiters: `13431` when every entry is a
    /// single digit, otherwise comma separated.
    pub fn render_coeffs(&self) -> String {
        if self.coeffs.iter().all(|c| c.is_single_digit()) {
            self.coeffs.iter().map(|c| c.to_string()).collect()
        } else if self.coeffs.len() == 1 && self.coeffs[0].to_string().bytes().all(|b| b.is_ascii_digit()) {
            // a lone multi-digit entry would read back as several digits
            format!("{},", self.coeffs[0])
        } else {
            self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Parses the inside of `(...)` or `[...]`.
    pub fn parse_coeffs(s: &str) -> Result<Self, AlgebraError> {
        let s = s.trim();
        let parts: Vec<&str> = if s.contains(',') {
            let mut parts: Vec<&str> = s.split(',').map(str::trim).collect();
            if parts.len() > 1 && parts.last() == Some(&"") {
                parts.pop();
            }
            parts
        } else if !s.bytes().all(|b| b.is_ascii_digit() || b.is_ascii_whitespace()) {
            vec![s]
        } else {
            s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).filter(|t| !t.trim().is_empty()).collect()
        };
        if parts.is_empty() {
            return Err(AlgebraError::BadCoefficient(s.to_string()));
        }
        let coeffs = parts
            .into_iter()
            .map(|p| T::from_str_radix(p, 10).map_err(|_| AlgebraError::BadCoefficient(p.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }
}

impl<T: Coeff> fmt::Display for BiGradedPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render_coeffs())
    }
}
