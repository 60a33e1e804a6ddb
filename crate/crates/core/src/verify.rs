//! Verification suites. Each suite counts its checks and keeps the first
//! counterexample it meets.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::engine::{aux_hvector, check_ic_equation, classical_h_simple, extended_hvector, is_palindromic, mpih_part};
use crate::flag::FlagVector;
use crate::golden;
use crate::hvector::HVector;
use crate::lattice::FaceLattice;
use crate::linear::{cone_flag_vector, ic_basis, linear_h, linear_pseudo_h, span_rank};
use crate::links::{ConeRule, LinkEngine};
use crate::poly::BiGradedPoly;
use crate::symbol::Flavor;
use crate::terms::{
    downset, enumerate_terms, enumerate_terms_in, enumerate_words, fibonacci, implies, strata_vector, IndexTerm,
};
use crate::word::{GeneratorWord, Op};
use crate::{BigRational, Coeff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    IcEquation,
    Palindromy,
    Fibonacci,
    GdsRank,
    Oracle,
    LinkAgreement,
    Unimodality,
    Terms,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Tables,
        Suite::IcEquation,
        Suite::Palindromy,
        Suite::Fibonacci,
        Suite::GdsRank,
        Suite::Oracle,
        Suite::LinkAgreement,
        Suite::Unimodality,
        Suite::Terms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::IcEquation => "ic-equation",
            Suite::Palindromy => "palindromy",
            Suite::Fibonacci => "fibonacci",
            Suite::GdsRank => "gds-rank",
            Suite::Oracle => "oracle",
            Suite::LinkAgreement => "link-agreement",
            Suite::Unimodality => "unimodality",
            Suite::Terms => "terms",
        }
    }

    pub fn run(self, max_dim: usize) -> SuiteReport {
        let mut c = Checker::new(self.name());
        match self {
            Suite::Tables => tables(&mut c),
            Suite::IcEquation => ic_equation(&mut c, max_dim),
            Suite::Palindromy => palindromy(&mut c, max_dim),
            Suite::Fibonacci => fibonacci_counts(&mut c, 12),
            Suite::GdsRank => gds_rank(&mut c, max_dim),
            Suite::Oracle => oracle(&mut c, max_dim),
            Suite::LinkAgreement => link_agreement(&mut c, max_dim, ConeRule::Conjugation),
            Suite::Unimodality => unimodality(&mut c, max_dim),
            Suite::Terms => term_order(&mut c, max_dim),
        }
        c.finish()
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            Some(e) => write!(f, "FAIL {} after {} checks: {e}", self.name, self.checks),
        }
    }
}

/// Runs every suite.
pub fn run_all(max_dim: usize) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| s.run(max_dim)).collect()
}

pub struct Checker {
    name: String,
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checks: 0, failure: None }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, what: impl fmt::Display, got: &T, expected: &T) {
        self.check(got == expected, || format!("{what}: got {got}, expected {expected}"));
    }

    pub fn finish(self) -> SuiteReport {
        SuiteReport { name: self.name, checks: self.checks, failure: self.failure }
    }
}

fn to_q(h: &HVector<i64>) -> HVector<BigRational> {
    h.map(|c| BigRational::from_integer((*c).into()))
}

/// Coefficient of a final term in a final vector.
pub fn term_coefficient<T: Coeff>(h: &HVector<T>, term: &IndexTerm) -> T {
    if term.degree() != h.degree() {
        return T::zero();
    }
    h.coefficient(term.xexp(), term.yexp(), term.word())
}

fn flag(word: &GeneratorWord) -> FlagVector {
    FaceLattice::build(word).flag_vector()
}

fn word(s: &str) -> GeneratorWord {
    GeneratorWord::parse(s).expect("built-in word")
}

pub fn tables(c: &mut Checker) {
    for (w, expected) in golden::tables() {
        match extended_hvector::<i64>(&w) {
            Ok(h) => c.check_eq(format!("h({w})"), &h, &expected),
            Err(e) => c.check(false, || format!("h({w}): {e}")),
        }
    }
    let (w, expected) = golden::AUX_CHECKPOINT;
    let w = word(w);
    let expected = HVector::parse(expected, w.dim()).expect("checkpoint value");
    c.check_eq(format!("aux({w})"), &aux_hvector::<i64>(&w).expect("IC word"), &expected);

    let (w, term, value) = golden::BIPYRAMID_CHECKPOINT;
    let term = IndexTerm::parse(term, Flavor::Final).expect("term");
    let got = linear_h(&flag(&word(w))).map(|h| term_coefficient(&h, &term));
    match got {
        Ok(got) => c.check_eq(format!("coefficient of {term} in linear h({w})"), &got, &BigRational::from_integer(value.into())),
        Err(e) => c.check(false, || format!("linear h({w}): {e}")),
    }

    let (w, values) = golden::OCTAHEDRON_PSEUDO_H;
    let expected = BiGradedPoly::<i64>::from_ints(&values).map(|c| BigRational::from_integer((*c).into()));
    match linear_pseudo_h(&flag(&word(w))) {
        Ok(got) => c.check_eq(format!("pseudo h({w})"), &got, &expected),
        Err(e) => c.check(false, || format!("pseudo h({w}): {e}")),
    }
}

/// A random auxiliary vector of degree `n` with small coefficients.
pub fn random_aux_vector(rng: &mut impl Rng, n: usize) -> HVector<i64> {
    let mut h = HVector::zero(n, Flavor::Aux);
    for d in 0..=n {
        for w in enumerate_words(d, Flavor::Aux) {
            if rng.gen_bool(0.5) {
                let coeffs: Vec<i64> = (0..=(n - d)).map(|_| rng.gen_range(-5..=5)).collect();
                h.add_term(w, BiGradedPoly::new(coeffs));
            }
        }
    }
    h
}

pub fn ic_equation(c: &mut Checker, max_dim: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1c_e9);
    for i in 0..100 {
        let n = i % 7;
        let h = random_aux_vector(&mut rng, n);
        c.check(check_ic_equation(&h), || format!("random vector {h}"));
    }
    for n in 0..=max_dim {
        for w in GeneratorWord::all_ic(n) {
            let h = aux_hvector::<i64>(&w).expect("IC word");
            c.check(check_ic_equation(&h), || format!("aux({w})"));
        }
    }
    // f((I − C)CI w) = f(I(I − C)C w), expanded
    let bases: Vec<GeneratorWord> = (0..=max_dim.min(3)).flat_map(GeneratorWord::all_icb).collect();
    let results: Vec<(GeneratorWord, bool)> = bases
        .par_iter()
        .map(|w| {
            let f = |ops: &[Op]| flag(&w.prefixed(ops));
            use Op::{Cone as C, Cylinder as I};
            let lhs = f(&[I, C, I]).sub(&f(&[C, C, I]));
            let rhs = f(&[I, I, C]).sub(&f(&[I, C, C]));
            (w.clone(), lhs == rhs)
        })
        .collect();
    for (w, ok) in results {
        c.check(ok, || format!("flag-level IC equation on base {w}"));
    }
}

pub fn palindromy(c: &mut Checker, max_dim: usize) {
    for n in 0..=max_dim {
        for w in GeneratorWord::all_ic(n) {
            let h = aux_hvector::<i64>(&w).expect("IC word");
            c.check(is_palindromic(&h), || format!("aux({w}) = {h} is not palindromic"));
        }
    }
}

pub fn unimodality(c: &mut Checker, max_dim: usize) {
    for n in 0..=max_dim {
        for w in GeneratorWord::all_ic(n) {
            let p = mpih_part(&extended_hvector::<i64>(&w).expect("IC word"));
            c.check(p.is_unimodal() && p.is_palindromic(), || format!("mpih part of h({w}) = {p}"));
        }
    }
}

pub fn fibonacci_counts(c: &mut Checker, max_n: usize) {
    for n in 0..=max_n {
        let terms = enumerate_terms(n);
        let count = |pred: &dyn Fn(&IndexTerm) -> bool| terms.iter().filter(|t| pred(t)).count() as u64;
        c.check_eq(format!("terms of degree {n}"), &(terms.len() as u64), &fibonacci(n + 2));
        c.check_eq(format!("terms of degree {n} with i <= j"), &count(&|t| t.xexp() <= t.yexp()), &fibonacci(n + 1));
        c.check_eq(format!("terms of degree {n} with i > j"), &count(&|t| t.xexp() > t.yexp()), &fibonacci(n));
        if n >= 2 {
            c.check_eq(format!("terms of degree {n} with i = j"), &count(&|t| t.xexp() == t.yexp()), &fibonacci(n - 1));
        }
        if n >= 1 {
            let words: usize = (0..=n).map(|d| enumerate_words(d, Flavor::Final).len()).sum();
            c.check_eq(format!("words of degree at most {n}"), &(words as u64), &fibonacci(n));
        }
        c.check_eq(format!("IC basis of dimension {n}"), &(ic_basis(n).len() as u64), &fibonacci(n + 1));
    }
}

pub fn gds_rank(c: &mut Checker, max_dim: usize) {
    for n in 1..=max_dim.min(7) {
        let ic: Vec<FlagVector> = GeneratorWord::all_ic(n).par_iter().map(flag).collect();
        let rank = span_rank(&ic).expect("equal dimensions");
        c.check_eq(format!("rank of IC flag vectors in dimension {n}"), &(rank as u64), &fibonacci(n + 1));
        if n <= 6 {
            let icb: Vec<FlagVector> = GeneratorWord::all_icb(n).par_iter().map(flag).collect();
            let with_b = span_rank(&icb).expect("equal dimensions");
            c.check_eq(format!("rank with bipyramids in dimension {n}"), &with_b, &rank);
        }
    }
}

fn is_simple_word(w: &GeneratorWord) -> bool {
    let ops = w.ops();
    let first_cone = ops.iter().position(|&o| o == Op::Cone).unwrap_or(ops.len());
    ops[..first_cone].iter().all(|&o| o == Op::Cylinder) && ops[first_cone..].iter().all(|&o| o == Op::Cone)
}

pub fn oracle(c: &mut Checker, max_dim: usize) {
    let words: Vec<GeneratorWord> = (0..=max_dim).flat_map(GeneratorWord::all_icb).collect();
    let results: Vec<Vec<(bool, String)>> = words
        .par_iter()
        .map(|w| {
            let l = FaceLattice::build(w);
            let mut out = vec![
                (l.satisfies_euler(), format!("Euler relation fails on {w}")),
                (l.is_intersection_closed(), format!("{w} is not closed under intersection")),
            ];
            let f = l.flag_vector();
            let coned = cone_flag_vector(&f);
            out.push((coned == l.pyramid().flag_vector(), format!("cone formula disagrees with the pyramid over {w}")));
            if is_simple_word(w) {
                out.push((l.is_simple(), format!("{w} has a vertex not on exactly {} edges", w.dim())));
                let classical = classical_h_simple(&l.face_vector());
                let mpih = mpih_part(&extended_hvector::<i64>(w).expect("IC word"));
                out.push((classical == mpih, format!("classical h {classical} differs from mpih part {mpih} on {w}")));
            }
            out
        })
        .collect();
    for (ok, msg) in results.into_iter().flatten() {
        c.check(ok, || msg);
    }
}

/// Engine, link recursion and linear extension on IC words up to
/// `min(max_dim, 4)` and the dimension-5 basis words; link recursion and
/// linear extension on all words with bipyramids up to `min(max_dim, 5)`.
pub fn link_agreement(c: &mut Checker, max_dim: usize, rule: ConeRule) {
    let engine = LinkEngine::<BigRational>::new(rule);
    let mut words: Vec<GeneratorWord> = (0..=max_dim.min(4)).flat_map(GeneratorWord::all_ic).collect();
    if max_dim >= 5 {
        words.extend(ic_basis(5));
    }
    for w in &words {
        let direct = to_q(&extended_hvector::<i64>(w).expect("IC word"));
        let l = FaceLattice::build(w);
        let by_links = engine.h_by_links(&l);
        c.check_eq(format!("[{rule}] link recursion on {w}"), &by_links, &direct);
        match linear_h(&l.flag_vector()) {
            Ok(lin) => c.check_eq(format!("linear extension on {w}"), &lin, &direct),
            Err(e) => c.check(false, || format!("linear extension on {w}: {e}")),
        }
    }
    for w in (0..=max_dim.min(5)).flat_map(GeneratorWord::all_icb).filter(|w| w.contains_bipyramid()) {
        let l = FaceLattice::build(&w);
        let by_links = engine.h_by_links(&l);
        match linear_h(&l.flag_vector()) {
            Ok(lin) => c.check_eq(format!("[{rule}] link recursion vs linear extension on {w}"), &by_links, &lin),
            Err(e) => c.check(false, || format!("linear extension on {w}: {e}")),
        }
    }
}

pub fn term_order(c: &mut Checker, max_degree: usize) {
    let aux = |s: &str| IndexTerm::parse(s, Flavor::Aux).expect("built-in term");
    for (t, expected) in [
        ("X{1}{1}", vec![1, 4, 7]),
        ("Ā{1}{1}", vec![0, 4, 7]),
        ("{1}Ā{1}", vec![0, 3, 7]),
        ("X^2Y^3Ā^4{5}Ā^2{6}", vec![5, 20, 35]),
        ("X^11{5}{6}", vec![11, 22, 35]),
    ] {
        let got = strata_vector(&aux(t));
        c.check(got == expected, || format!("strata of {t}: got {got:?}, expected {expected:?}"));
    }
    for n in 0..=max_degree.max(9) {
        let all = enumerate_terms_in(n, Flavor::Aux);
        for t in all.iter().filter(|t| t.order() <= 2) {
            let mut expected: Vec<IndexTerm> = all.iter().filter(|u| implies(t, u)).cloned().collect();
            expected.sort();
            let got = downset(t);
            c.check(got == expected, || format!("downset of {t} differs from its implication downset"));
        }
    }
}

/// Whether a cone-rule reading reproduces the engine on IC words up to
/// `min(max_dim, 4)` and the dimension-5 basis words.
pub fn rule_agreement(rule: ConeRule, max_dim: usize) -> SuiteReport {
    let mut c = Checker::new(format!("link-agreement[{rule}]"));
    let engine = LinkEngine::<BigRational>::new(rule);
    let mut words: Vec<GeneratorWord> = (0..=max_dim.min(4)).flat_map(GeneratorWord::all_ic).collect();
    if max_dim >= 5 {
        words.extend(ic_basis(5));
    }
    for w in &words {
        let direct = to_q(&extended_hvector::<i64>(w).expect("IC word"));
        let by_links = engine.h_by_links(&FaceLattice::build(w));
        c.check_eq(format!("link recursion on {w}"), &by_links, &direct);
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [Suite::Tables, Suite::Palindromy, Suite::Unimodality, Suite::Fibonacci] {
            let r = s.run(4);
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn checker_keeps_the_first_failure() {
        let mut c = Checker::new("t");
        c.check(true, || "a".into());
        c.check(false, || "b".into());
        c.check(false, || "c".into());
        let r = c.finish();
        assert_eq!((r.checks, r.failure.as_deref()), (3, Some("b")));
        assert_eq!(r.to_string(), "FAIL t after 3 checks: b");
    }

    #[test]
    fn simple_words() {
        assert!(is_simple_word(&word("IICC.")));
        assert!(is_simple_word(&word(".")));
        assert!(!is_simple_word(&word("CIC.")));
    }
}
