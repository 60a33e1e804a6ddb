//! Exact linear algebra over flag vectors: the IC basis, coordinates in it,
//! and the linear extensions of `h` and the pseudo h-vector.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::engine::{extended_hvector, pseudo_h};
use crate::error::LinearError;
use crate::flag::{table_len, FlagVector};
use crate::hvector::HVector;
use crate::lattice::FaceLattice;
use crate::poly::BiGradedPoly;
use crate::scalar::Field;
use crate::word::{GeneratorWord, Op};
use crate::{BigRational, Flavor};

pub const MAX_DIM: i32 = 8;

/// Brings `rows` to reduced row echelon form in place, taking the first
/// nonzero entry of each column as pivot. Returns the pivot columns.
pub fn row_reduce<T: Field>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one().div_exact(&rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = x.mul_exact(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub_exact(&factor.mul_exact(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<T: Field>(mut rows: Vec<Vec<T>>) -> usize {
    row_reduce(&mut rows).len()
}

fn to_rational_rows(vectors: &[FlagVector]) -> Vec<Vec<BigRational>> {
    vectors.iter().map(|f| f.entries().iter().map(|&e| BigRational::from_integer(e.into())).collect()).collect()
}

/// Exact rank of a family of flag vectors of one dimension.
pub fn span_rank(vectors: &[FlagVector]) -> Result<usize, LinearError> {
    if let Some(first) = vectors.first() {
        if let Some(bad) = vectors.iter().find(|f| f.dim() != first.dim()) {
            return Err(LinearError::DimensionMismatch { expected: first.dim(), found: bad.dim() });
        }
    }
    Ok(rank(to_rational_rows(vectors)))
}

/// `{I, C}`-words of length `n` with no `II` and not ending in `I`, in
/// lexicographic order with `C < I`.
pub fn ic_basis(n: usize) -> Vec<GeneratorWord> {
    GeneratorWord::all_ic(n)
        .into_iter()
        .filter(|w| {
            let ops = w.ops();
            ops.last() != Some(&Op::Cylinder) && !ops.windows(2).any(|p| p == [Op::Cylinder, Op::Cylinder])
        })
        .collect()
}

/// The IC basis of one dimension together with a square system for
/// coordinates: `rows` picks equations on which the basis vectors are
/// independent, and `inverse` inverts that square block.
#[derive(Debug)]
pub struct FlagBasis {
    dim: i32,
    words: Vec<GeneratorWord>,
    vectors: Vec<FlagVector>,
    rows: Vec<usize>,
    inverse: Vec<Vec<BigRational>>,
}

impl FlagBasis {
    fn compute(dim: i32) -> Self {
        let words = ic_basis(dim as usize);
        let vectors: Vec<FlagVector> = words.iter().map(|w| FaceLattice::build(w).flag_vector()).collect();
        let k = words.len();
        // rows of the transpose are the flag entries; pivots pick independent ones
        let mut transposed: Vec<Vec<BigRational>> = to_rational_rows(&vectors);
        let rows = row_reduce(&mut transposed);
        assert_eq!(rows.len(), k, "IC basis flag vectors must be independent");
        // augment the square block with the identity and reduce
        let mut block: Vec<Vec<BigRational>> = rows
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let mut row: Vec<BigRational> = vectors.iter().map(|v| BigRational::from_integer(v.get_mask(r).into())).collect();
                row.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        row_reduce(&mut block);
        let inverse = block.into_iter().map(|row| row[k..].to_vec()).collect();
        Self { dim, words, vectors, rows, inverse }
    }

    /// The cached basis for dimension `n`, `0 ≤ n ≤ 8`.
    pub fn get(dim: i32) -> Result<Arc<Self>, LinearError> {
        if !(0..=MAX_DIM).contains(&dim) {
            return Err(LinearError::UnsupportedDimension(dim));
        }
        static CACHE: OnceLock<Mutex<HashMap<i32, Arc<FlagBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.lock().expect("basis cache").get(&dim) {
            return Ok(b.clone());
        }
        let basis = Arc::new(Self::compute(dim));
        Ok(cache.lock().expect("basis cache").entry(dim).or_insert(basis).clone())
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn words(&self) -> &[GeneratorWord] {
        &self.words
    }

    pub fn vectors(&self) -> &[FlagVector] {
        &self.vectors
    }

    /// Coordinates `c` with `f = Σ c_w f(w)`.
    pub fn express(&self, f: &FlagVector) -> Result<Vec<BigRational>, LinearError> {
        if f.dim() != self.dim {
            return Err(LinearError::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        let rhs: Vec<BigRational> = self.rows.iter().map(|&r| BigRational::from_integer(f.get_mask(r).into())).collect();
        let coeffs: Vec<BigRational> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        let residual: Vec<BigRational> = (0..table_len(self.dim))
            .map(|m| {
                let combined = self
                    .vectors
                    .iter()
                    .zip(&coeffs)
                    .fold(BigRational::zero(), |acc, (v, c)| acc + c * BigRational::from_integer(v.get_mask(m).into()));
                BigRational::from_integer(f.get_mask(m).into()) - combined
            })
            .collect();
        if residual.iter().any(|r| !r.is_zero()) {
            return Err(LinearError::NotInSpan { residual: residual.iter().map(|r| r.to_string()).collect() });
        }
        Ok(coeffs)
    }
}

/// Coordinates of `f` in the IC basis of its dimension.
pub fn express_in_basis(f: &FlagVector) -> Result<Vec<BigRational>, LinearError> {
    FlagBasis::get(f.dim())?.express(f)
}

fn to_rational(c: &i64) -> BigRational {
    BigRational::from_integer((*c).into())
}

/// The extended h-vector extended linearly from the IC basis.
pub fn linear_h(f: &FlagVector) -> Result<HVector<BigRational>, LinearError> {
    let basis = FlagBasis::get(f.dim())?;
    let coeffs = basis.express(f)?;
    let mut h = HVector::zero(f.dim() as usize, Flavor::Final);
    for (w, c) in basis.words().iter().zip(&coeffs) {
        if !c.is_zero() {
            let hw = extended_hvector::<i64>(w).expect("basis words avoid B").map(to_rational);
            h.add_assign(&hw.scale(c));
        }
    }
    Ok(h)
}

/// The pseudo h-vector extended linearly from the IC basis.
pub fn linear_pseudo_h(f: &FlagVector) -> Result<BiGradedPoly<BigRational>, LinearError> {
    let basis = FlagBasis::get(f.dim())?;
    let coeffs = basis.express(f)?;
    let mut h = BiGradedPoly::zero(f.dim() as usize);
    for (w, c) in basis.words().iter().zip(&coeffs) {
        let hw = pseudo_h::<i64>(w).expect("basis words avoid B").map(to_rational);
        h.add_assign(&hw.scale(c));
    }
    Ok(h)
}

/// Flag vector of the pyramid over a polytope with flag vector `f`.
///
/// A chain in the pyramid is a chain of base faces followed by cones over a
/// chain of base faces. The last base face may coincide with the first
/// coned face's base, which the set union absorbs. Dimension `n` (the base
/// itself) and `−1` (the apex as a cone over the empty face) drop out.
pub fn cone_flag_vector(f: &FlagVector) -> FlagVector {
    let n = f.dim();
    if n < 0 {
        return FlagVector::new(0, vec![f.get_mask(0)]);
    }
    let n = n as usize;
    let entries = (0..table_len(n as i32 + 1))
        .map(|mask| {
            let t: Vec<usize> = (0..=n).filter(|s| mask & (1 << s) != 0).collect();
            (0..=t.len())
                .map(|p| {
                    let mut m = 0usize;
                    for &s in &t[..p] {
                        if s < n {
                            m |= 1 << s;
                        }
                    }
                    for &s in &t[p..] {
                        if s > 0 {
                            m |= 1 << (s - 1);
                        }
                    }
                    f.get_mask(m)
                })
                .sum()
        })
        .collect();
    FlagVector::new(n as i32 + 1, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::extended_hvector;

    fn w(s: &str) -> GeneratorWord {
        GeneratorWord::parse(s).unwrap()
    }

    fn fv(s: &str) -> FlagVector {
        FaceLattice::build(&w(s)).flag_vector()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn fib(n: usize) -> usize {
        let (mut a, mut b) = (0, 1);
        for _ in 0..n {
            (a, b) = (b, a + b);
        }
        a
    }

    #[test]
    fn basis_words() {
        let names: Vec<String> = ic_basis(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["CCC.", "CIC.", "ICC."]);
        assert_eq!(ic_basis(0), vec![GeneratorWord::point()]);
        for n in 0..=10 {
            assert_eq!(ic_basis(n).len(), fib(n + 1));
        }
        let five: Vec<String> = ic_basis(5).iter().map(|w| w.to_string()).collect();
        assert_eq!(five, ["CCCCC.", "CCCIC.", "CCICC.", "CICCC.", "CICIC.", "ICCCC.", "ICCIC.", "ICICC."]);
    }

    #[test]
    fn row_reduction_over_rationals() {
        let rows = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)], vec![q(0, 1), q(1, 3)]];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank::<BigRational>(vec![]), 0);
    }

    #[test]
    fn coordinates_recombine() {
        assert_eq!(express_in_basis(&fv("CCC.")).unwrap(), [q(1, 1), q(0, 1), q(0, 1)]);
        for word in GeneratorWord::all_icb(4) {
            let f = fv(&word.to_string());
            let c = express_in_basis(&f).unwrap();
            let basis = FlagBasis::get(4).unwrap();
            for m in 0..16 {
                let sum = basis.vectors().iter().zip(&c).fold(q(0, 1), |acc, (v, c)| acc + c * q(v.get_mask(m), 1));
                assert_eq!(sum, q(f.get_mask(m), 1), "{word}");
            }
        }
    }

    #[test]
    fn octahedron_coordinates() {
        assert_eq!(express_in_basis(&fv("BIC.")).unwrap(), [q(-3, 1), q(6, 1), q(-2, 1)]);
    }

    #[test]
    fn out_of_span_and_bad_dimension() {
        let bogus = FlagVector::new(2, vec![1, 4, 5, 8]);
        match express_in_basis(&bogus) {
            Err(LinearError::NotInSpan { residual }) => assert!(residual.iter().any(|r| r != "0")),
            other => panic!("expected not-in-span, got {other:?}"),
        }
        assert_eq!(express_in_basis(&FlagVector::zero(9)), Err(LinearError::UnsupportedDimension(9)));
        assert!(span_rank(&[fv("C."), fv("CC.")]).is_err());
    }

    #[test]
    fn linear_h_on_ic_words() {
        for n in 0..=4 {
            for word in GeneratorWord::all_ic(n) {
                let direct = extended_hvector::<i64>(&word).unwrap().map(to_rational);
                assert_eq!(linear_h(&fv(&word.to_string())).unwrap(), direct, "{word}");
            }
        }
    }

    #[test]
    fn octahedron_pseudo_h() {
        let h = linear_pseudo_h(&fv("BIC.")).unwrap();
        assert_eq!(h, BiGradedPoly::from_ints(&[1, -1, 5, 1]).map(to_rational));
    }

    #[test]
    fn cone_formula_against_pyramids() {
        assert_eq!(cone_flag_vector(&FlagVector::empty_polytope()), fv("."));
        assert_eq!(cone_flag_vector(&fv(".")), fv("C."));
        assert_eq!(cone_flag_vector(&fv("C.")).get(&[0, 1]), 6);
        let pyr = cone_flag_vector(&fv("IC."));
        assert_eq!(pyr.face_vector(), [5, 8, 5]);
        assert_eq!(pyr.get(&[0, 1]), 16);
        assert_eq!(pyr.get(&[0, 2]), 16);
        assert_eq!(pyr.get(&[1, 2]), 16);
        assert_eq!(pyr.get(&[0, 1, 2]), 32);
        for n in 0..=4 {
            for word in GeneratorWord::all_icb(n) {
                let l = FaceLattice::build(&word);
                assert_eq!(cone_flag_vector(&l.flag_vector()), l.pyramid().flag_vector(), "{word}");
            }
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(span_rank(&[fv("C.")]).unwrap(), 1);
        let ic3: Vec<FlagVector> = GeneratorWord::all_ic(3).iter().map(|w| FaceLattice::build(w).flag_vector()).collect();
        assert_eq!(span_rank(&ic3).unwrap(), 3);
        let icb4: Vec<FlagVector> = GeneratorWord::all_icb(4).iter().map(|w| FaceLattice::build(w).flag_vector()).collect();
        assert_eq!(span_rank(&icb4).unwrap(), 5);
    }
}
