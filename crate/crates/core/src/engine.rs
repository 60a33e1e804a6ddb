//! The cone/cylinder calculus on auxiliary vectors and the change of
//! variables to the extended h-vector.
//!
//! On an auxiliary term `[a_0 … a_m]·W` the cylinder multiplies by `X + Y`
//! and the cone produces three parts:
//!
//! 1. `[a_0 … a_mid a_mid … a_m]·W` with `mid = ⌊m/2⌋`;
//! 2. `[a_k − a_{k−1}]·Ā^{m−2k}{k}W` for `k = 1 … ⌊m/2⌋`;
//! 3. `−[a_0]·Ā^{m+1}W`.
//!
//! The point has value `[1]`, and a word ending in `Ā` is zero.

use crate::error::EngineError;
use crate::hvector::HVector;
use crate::poly::BiGradedPoly;
use crate::scalar::Coeff;
use crate::symbol::{normalize_aux_word, push_pads, Flavor, Symbol, SymbolWord};
use crate::word::{GeneratorWord, Op};

fn assert_aux<T: Coeff>(h: &HVector<T>) {
    assert_eq!(h.flavor(), Flavor::Aux, "expected an auxiliary vector");
}

/// Cylinder rule: multiply every polynomial by `X + Y`.
pub fn apply_cylinder<T: Coeff>(h: &HVector<T>) -> HVector<T> {
    assert_aux(h);
    HVector::from_terms(h.degree() + 1, Flavor::Aux, h.terms().map(|(w, p)| (w.clone(), p.mul_linear())))
}

/// Cone rule, term by term.
pub fn apply_cone<T: Coeff>(h: &HVector<T>) -> HVector<T> {
    assert_aux(h);
    let mut out = HVector::zero(h.degree() + 1, Flavor::Aux);
    for (word, poly) in h.terms() {
        let m = poly.degree();
        let a = poly.coeffs();
        out.add_term(word.clone(), poly.repeat_middle());
        for k in 1..=m / 2 {
            let coprimitives = a[k].sub_exact(&a[k - 1]);
            if coprimitives.is_zero() {
                continue;
            }
            let w = word.prepend(Symbol::local(k as u32)).prepend_pads(m - 2 * k);
            out.add_term(w, BiGradedPoly::constant(coprimitives));
        }
        out.add_term(word.prepend_pads(m + 1), BiGradedPoly::constant(a[0].neg_exact()));
    }
    out
}

/// Folds the cone and cylinder rules over a bipyramid-free word, starting
/// from `[1]` on the point.
pub fn aux_hvector<T: Coeff>(word: &GeneratorWord) -> Result<HVector<T>, EngineError> {
    if let Some(position) = word.ops().iter().position(|&op| op == Op::Bipyramid) {
        return Err(EngineError::UnsupportedOperator { position: position + 1 });
    }
    let mut h = HVector::unit(Flavor::Aux);
    for op in word.application_order() {
        h = match op {
            Op::Cone => apply_cone(&h),
            Op::Cylinder => apply_cylinder(&h),
            Op::Bipyramid => unreachable!(),
        };
    }
    Ok(h)
}

/// Change of variables `X = x + Ā`, `Y = y`, `Āx = 0`, followed by the
/// pad-sliding normalization.
///
/// `X^p Y^q W` becomes `Σ_{j=0..p} x^{p−j} y^q · Ā^j W`, and each `Ā^j W` is
/// rewritten into final words.
pub fn to_extended<T: Coeff>(h: &HVector<T>) -> HVector<T> {
    assert_aux(h);
    let mut out = HVector::zero(h.degree(), Flavor::Final);
    for (word, poly) in h.terms() {
        let m = poly.degree();
        let bases = normalize_aux_word(word);
        for (q, c) in poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = m - q;
            for j in 0..=p {
                for base in &bases {
                    for w in push_pads(j, base) {
                        out.add_term(w, BiGradedPoly::monomial(m - j, q, c.clone()));
                    }
                }
            }
        }
    }
    out
}

pub fn extended_hvector<T: Coeff>(word: &GeneratorWord) -> Result<HVector<T>, EngineError> {
    aux_hvector(word).map(|h| to_extended(&h))
}

/// The empty-word (middle perversity) polynomial of a final vector.
pub fn mpih_part<T: Coeff>(h: &HVector<T>) -> BiGradedPoly<T> {
    assert_eq!(h.flavor(), Flavor::Final, "expected a final vector");
    h.empty_word_part()
}

/// Every polynomial is fixed by swapping the two variables.
pub fn is_palindromic<T: Coeff>(h: &HVector<T>) -> bool {
    h.terms().all(|(_, p)| p.is_palindromic())
}

/// `(I − C) C I h == I (I − C) C h` at the operator level.
pub fn check_ic_equation<T: Coeff>(h: &HVector<T>) -> bool {
    let ci = apply_cone(&apply_cylinder(h));
    let lhs = apply_cylinder(&ci).try_sub(&apply_cone(&ci)).expect("same degree");
    let c = apply_cone(h);
    let rhs = apply_cylinder(&apply_cylinder(&c)).try_sub(&apply_cylinder(&apply_cone(&c))).expect("same degree");
    lhs == rhs
}

/// Classical h-polynomial of a simple `n`-polytope from its face counts
/// `[f_0, …, f_{n−1}]` (with `f_n = 1`), so that `f_i` is the coefficient of
/// `x^{n−i} y^i` in `h(x, x + y)`.
///
/// The system is upper triangular in `h`; it is solved from `h_n` down.
pub fn classical_h_simple<T: Coeff>(faces: &[T]) -> BiGradedPoly<T> {
    let n = faces.len();
    let mut f: Vec<T> = faces.to_vec();
    f.push(T::one());
    // coefficient of x^{n−j} y^j in h(x, x+y) is Σ_{t≥j} h_t C(t, j)
    let mut h = vec![T::zero(); n + 1];
    for j in (0..=n).rev() {
        let mut acc = f[j].clone();
        for (t, ht) in h.iter().enumerate().skip(j + 1) {
            acc = acc.sub_exact(&ht.mul_exact(&T::from_int(binomial(t, j))));
        }
        h[j] = acc;
    }
    BiGradedPoly::new(h)
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Pseudo h-vector: `ĥ(I·Δ) = (X+Y)·ĥ(Δ)` and `ĥ(C·Δ) = x^{d+1} + y·ĥ(Δ)`.
pub fn pseudo_h<T: Coeff>(word: &GeneratorWord) -> Result<BiGradedPoly<T>, EngineError> {
    if let Some(position) = word.ops().iter().position(|&op| op == Op::Bipyramid) {
        return Err(EngineError::UnsupportedOperator { position: position + 1 });
    }
    let mut h = BiGradedPoly::one();
    for op in word.application_order() {
        h = match op {
            Op::Cylinder => h.mul_linear(),
            Op::Cone => {
                let mut next = h.mul_second();
                next.add_assign(&BiGradedPoly::monomial(h.degree() + 1, 0, T::one()));
                next
            }
            Op::Bipyramid => unreachable!(),
        };
    }
    Ok(h)
}

/// The symbol-free auxiliary vector `poly · ε`.
pub fn aux_polynomial<T: Coeff>(poly: BiGradedPoly<T>) -> HVector<T> {
    HVector::from_terms(poly.degree(), Flavor::Aux, [(SymbolWord::empty(Flavor::Aux), poly)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn aux(s: &str, n: usize) -> HVector<i64> {
        HVector::parse(s, n).unwrap()
    }

    fn fin(s: &str, n: usize) -> HVector<i64> {
        HVector::parse(s, n).unwrap()
    }

    fn w(s: &str) -> GeneratorWord {
        GeneratorWord::parse(s).unwrap()
    }

    fn p(c: &[i64]) -> BiGradedPoly<i64> {
        BiGradedPoly::from_ints(c)
    }

    #[test]
    fn cylinder_examples() {
        assert_eq!(apply_cylinder(&aux("[121]", 2)), aux("[1331]", 3));
        assert_eq!(apply_cylinder(&aux("[12221] + [11]{1}", 4)), aux("[134431] + [121]{1}", 5));
        assert_eq!(apply_cylinder(&aux("[1]", 0)), aux("[11]", 1));
    }

    #[test]
    fn cone_examples() {
        assert_eq!(apply_cone(&aux("[121]", 2)), aux("[1221] + [1]{1}", 3));
        assert_eq!(apply_cone(&aux("[12221] + [1]Ā{1}", 4)), aux("[122221] + [11]Ā{1}", 5));
        assert_eq!(
            apply_cone(&aux("[13431] + [11]{1}", 4)),
            aux("[134431] + [111]{1} + [1]Ā^2{1} + [1]{2}", 5)
        );
        assert_eq!(apply_cone(&aux("[1]", 0)), aux("[11]", 1));
    }

    /// The six displayed rows of the cone rule, with distinct symbolic
    /// values a..f = 1, 10, 100, ... and a nonempty tail word so that the
    /// correction term survives.
    #[test]
    fn cone_rule_rows_verbatim() {
        let tail = SymbolWord::parse("{3}", Flavor::Aux).unwrap();
        let vals = [1i64, 10, 100, 1000, 10_000, 100_000];
        for m in 0..6 {
            let a = &vals[..=m];
            let input = HVector::from_terms(m + 7, Flavor::Aux, [(tail.clone(), p(a))]);
            let mut expected = HVector::zero(m + 8, Flavor::Aux);
            let mut dup = a.to_vec();
            dup.insert(m / 2 + 1, a[m / 2]);
            expected.add_term(tail.clone(), p(&dup));
            expected.add_term(tail.prepend_pads(m + 1), p(&[-a[0]]));
            let rows: &[(usize, usize)] = match m {
                0 | 1 => &[],
                2 => &[(1, 0)],
                3 => &[(1, 1)],
                4 => &[(1, 2), (2, 0)],
                5 => &[(1, 3), (2, 1)],
                _ => unreachable!(),
            };
            for &(k, pads) in rows {
                let word = tail.prepend(Symbol::local(k as u32)).prepend_pads(pads);
                expected.add_term(word, p(&[a[k] - a[k - 1]]));
            }
            assert_eq!(apply_cone(&input), expected, "row m={m}");
        }
    }

    #[test]
    fn aux_examples() {
        assert_eq!(aux_hvector::<i64>(&w("CCIC.")).unwrap(), aux("[12221] + [11]{1}", 4));
        assert_eq!(aux_hvector::<i64>(&w("IC.")).unwrap(), aux("[121]", 2));
        assert_eq!(
            aux_hvector::<i64>(&w("CICIC.")).unwrap(),
            aux("[134431] + [111]{1} + [1]Ā^2{1} + [1]{2}", 5)
        );
        assert_eq!(aux_hvector::<i64>(&w("BC.")), Err(EngineError::UnsupportedOperator { position: 1 }));
    }

    #[test]
    fn change_of_variables() {
        assert_eq!(to_extended(&aux("[12221] + [11]{1}", 4)), fin("(12221) + (11){1} + (1)A{1}", 4));
        assert_eq!(
            to_extended(&aux("[134431] + [111]{1} + [1]Ā^2{1} + [1]{2}", 5)),
            fin("(134431) + (111){1} + (11)A{1} + (2)AA{1} + (1){2}", 5)
        );
        assert_eq!(to_extended(&aux("[1221]", 3)), fin("(1221)", 3));
    }

    #[test]
    fn extended_examples() {
        assert_eq!(
            extended_hvector::<i64>(&w("ICCIC.")).unwrap(),
            fin("(134431) + (121){1} + (12)A{1} + (1)AA{1}", 5)
        );
        assert_eq!(
            extended_hvector::<i64>(&w("CCCIC.")).unwrap(),
            fin("(122221) + (111){1} + (11)A{1} + (1)AA{1}", 5)
        );
        assert_eq!(extended_hvector::<i64>(&w("CCCCC.")).unwrap(), fin("(111111)", 5));
    }

    #[test]
    fn mpih_examples() {
        assert_eq!(mpih_part(&extended_hvector::<i64>(&w("CICIC.")).unwrap()), p(&[1, 3, 4, 4, 3, 1]));
        assert_eq!(mpih_part(&extended_hvector::<i64>(&w("CCC.")).unwrap()), p(&[1, 1, 1, 1]));
        assert_eq!(mpih_part(&extended_hvector::<i64>(&w(".")).unwrap()), p(&[1]));
    }

    #[test]
    fn palindromy_examples() {
        assert!(is_palindromic(&aux_hvector::<i64>(&w("CICIC.")).unwrap()));
        assert!(is_palindromic(&aux("[121]", 2)));
        assert!(!is_palindromic(&aux("[12]", 1)));
    }

    #[test]
    fn ic_equation_examples() {
        assert!(check_ic_equation(&aux("[14941]", 4)));
        assert!(check_ic_equation(&aux("[1]", 0)));
        assert!(check_ic_equation(&aux("[1221] + [1]{1}", 3)));
    }

    #[test]
    fn symbolic_row_identity() {
        // (Ĩ − C̃)C̃ on a bare polynomial equals multiplication by XY,
        // [0abcde0], once only the symbol-free part is compared.
        let h = aux("[14941]", 4);
        let c = apply_cone(&h);
        let diff = apply_cylinder(&c).try_sub(&apply_cone(&c)).unwrap();
        assert_eq!(diff.empty_word_part(), p(&[0, 1, 4, 9, 4, 1, 0]));
    }

    /// `h(x, y) = Σ f_i x^{n−i} (y − x)^i`, expanded directly.
    fn classical_by_expansion(faces: &[i64]) -> BiGradedPoly<i64> {
        let n = faces.len();
        let mut f = faces.to_vec();
        f.push(1);
        let mut h = vec![0i64; n + 1];
        for (i, fi) in f.iter().enumerate() {
            for j in 0..=i {
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                h[j] += fi * binomial(i, j) * sign;
            }
        }
        p(&h)
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_h_simple(&[8i64, 12, 6]), p(&[1, 3, 3, 1]));
        assert_eq!(classical_h_simple(&[4i64, 6, 4]), p(&[1, 1, 1, 1]));
        assert_eq!(classical_h_simple(&[4i64, 4]), p(&[1, 2, 1]));
        for faces in [vec![8i64, 12, 6], vec![6, 9, 5], vec![16, 32, 24, 8], vec![5, 8, 5]] {
            assert_eq!(classical_h_simple(&faces), classical_by_expansion(&faces));
        }
    }

    #[test]
    fn pseudo_examples() {
        assert_eq!(pseudo_h::<i64>(&w("C.")).unwrap(), p(&[1, 1]));
        assert_eq!(pseudo_h::<i64>(&w("CC.")).unwrap(), p(&[1, 1, 1]));
        assert_eq!(pseudo_h::<i64>(&w("IC.")).unwrap(), p(&[1, 2, 1]));
    }

    #[test]
    fn seed_consistency() {
        let seed = aux("[1]", 0);
        assert_eq!(apply_cylinder(&seed), apply_cone(&seed));
        assert_eq!(apply_cone(&seed), aux("[11]", 1));
    }

    #[test]
    fn mpih_of_cone_repeats_middle() {
        for dim in 0..=7 {
            for word in GeneratorWord::all_ic(dim) {
                let base = mpih_part(&extended_hvector::<i64>(&word).unwrap());
                let coned = mpih_part(&extended_hvector::<i64>(&word.apply(Op::Cone)).unwrap());
                assert_eq!(coned, base.repeat_middle(), "{word}");
            }
        }
    }

    #[test]
    fn simple_words_have_only_the_empty_word() {
        for a in 0..=4 {
            for b in 1..=4 {
                let ops: Vec<Op> = std::iter::repeat_n(Op::Cylinder, a).chain(std::iter::repeat_n(Op::Cone, b)).collect();
                let h = extended_hvector::<i64>(&GeneratorWord::new(ops)).unwrap();
                assert_eq!(h.len(), 1);
            }
        }
    }

    #[test]
    fn degree_law_and_palindromy_dim8() {
        for dim in 0..=8 {
            for word in GeneratorWord::all_ic(dim) {
                let h = aux_hvector::<i64>(&word).unwrap();
                assert_eq!(h.degree(), dim);
                assert!(is_palindromic(&h), "{word}");
                assert!(mpih_part(&to_extended(&h)).is_unimodal(), "{word}");
            }
        }
    }

    #[test]
    fn nonnegative_up_to_dim5() {
        for dim in 0..=5 {
            for word in GeneratorWord::all_ic(dim) {
                let h = aux_hvector::<i64>(&word).unwrap();
                assert!(h.terms().all(|(_, p)| p.coeffs().iter().all(|&c| c >= 0)), "{word}: {h}");
            }
        }
    }

    fn arb_aux() -> impl Strategy<Value = HVector<i64>> {
        // words with up to two locals and pads, padded out with a polynomial
        let term = (prop::collection::vec((0usize..3, 1u32..3), 0..3), prop::collection::vec(-5i64..6, 7));
        prop::collection::vec(term, 1..4).prop_map(|terms| {
            let n = 8;
            let mut h = HVector::zero(n, Flavor::Aux);
            for (locals, coeffs) in terms {
                let mut symbols = Vec::new();
                for (pads, k) in locals {
                    symbols.extend(std::iter::repeat_n(Symbol::Pad, pads));
                    symbols.push(Symbol::local(k));
                }
                let word = SymbolWord::new(Flavor::Aux, symbols);
                if word.degree() > n {
                    continue;
                }
                let m = n - word.degree();
                let poly = BiGradedPoly::from_ints(&coeffs.iter().cycle().take(m + 1).copied().collect::<Vec<_>>());
                h.add_term(word, poly);
            }
            h
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ic_equation_holds_on_random_vectors(h in arb_aux()) {
            prop_assert!(check_ic_equation(&h));
        }

        #[test]
        fn operators_keep_degree_balance(h in arb_aux()) {
            for out in [apply_cone(&h), apply_cylinder(&h), to_extended(&h)] {
                for (w, p) in out.terms() {
                    prop_assert_eq!(w.degree() + p.degree(), out.degree());
                }
            }
        }
    }
}
