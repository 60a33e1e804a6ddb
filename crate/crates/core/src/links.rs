//! The extended h-vector from links: `h(Δ) = Σ_δ g_{dim δ}(link of δ)` over
//! the nonempty faces, with
//!
//! * `g_0(∅) = (1)`,
//! * `g_0(B) = C(h B) − y·h B`,
//! * `g_{i+1}(B) = y·g_i(B) − g_i(C B)`.
//!
//! Every `g_i` is linear in the flag vector, so the sum over the `i`-faces
//! is `g_i` of the summed link flag vectors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::engine::{apply_cone, to_extended};
use crate::flag::FlagVector;
use crate::hvector::HVector;
use crate::lattice::FaceLattice;
use crate::linear::cone_flag_vector;
use crate::poly::BiGradedPoly;
use crate::scalar::Coeff;
use crate::symbol::Flavor;
use crate::terms::{potential, IndexTerm};

/// How the cone rule acts on final vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConeRule {
    /// Lift to the auxiliary alphabet, apply the cone rule, change variables back.
    #[default]
    Conjugation,
    /// The auxiliary cone rule read verbatim in `x`, `y`, `A`, with frozen pads.
    Direct,
}

impl ConeRule {
    pub fn name(self) -> &'static str {
        match self {
            ConeRule::Conjugation => "conjugation",
            ConeRule::Direct => "direct",
        }
    }
}

impl fmt::Display for ConeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConeRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conjugation" => Ok(ConeRule::Conjugation),
            "direct" => Ok(ConeRule::Direct),
            _ => Err(format!("unknown cone rule `{s}` (expected conjugation or direct)")),
        }
    }
}

fn relabel<T: Coeff>(h: &HVector<T>, flavor: Flavor) -> HVector<T> {
    HVector::from_terms(h.degree(), flavor, h.terms().map(|(w, p)| (w.with_flavor(flavor), p.clone())))
}

/// Inverse of [`to_extended`]. The change of variables sends each auxiliary
/// term to the same final term plus terms of strictly lower potential, so
/// peeling off a highest-potential term at a time recovers the preimage.
pub fn lift_to_aux<T: Coeff>(h: &HVector<T>) -> HVector<T> {
    assert_eq!(h.flavor(), Flavor::Final, "lift expects a final vector");
    let n = h.degree();
    let mut rest = h.clone();
    let mut out = HVector::zero(n, Flavor::Aux);
    loop {
        let mut best: Option<(usize, IndexTerm, T)> = None;
        for (w, p) in rest.terms() {
            let m = p.degree();
            for (t, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let term = IndexTerm::new(m - t, t, w.clone());
                let pot = potential(&term);
                if best.as_ref().is_none_or(|(b, _, _)| pot > *b) {
                    best = Some((pot, term, c.clone()));
                }
            }
        }
        let Some((_, term, c)) = best else { break };
        let m = term.xexp() + term.yexp();
        let single = HVector::from_terms(
            n,
            Flavor::Aux,
            [(term.word().with_flavor(Flavor::Aux), BiGradedPoly::monomial(m, term.yexp(), c))],
        );
        rest = rest.try_sub(&to_extended(&single)).expect("same degree and flavor");
        out.add_assign(&single);
    }
    out
}

/// The cone rule on final vectors under the chosen reading.
pub fn cone_rule_final<T: Coeff>(h: &HVector<T>, rule: ConeRule) -> HVector<T> {
    match rule {
        ConeRule::Conjugation => to_extended(&apply_cone(&lift_to_aux(h))),
        ConeRule::Direct => relabel(&apply_cone(&relabel(h, Flavor::Aux)), Flavor::Final),
    }
}

/// Memoized evaluation of `h` and the `g_i` on flag vectors.
pub struct LinkEngine<T> {
    rule: ConeRule,
    h_memo: Mutex<HashMap<FlagVector, HVector<T>>>,
    g_memo: Mutex<HashMap<(usize, FlagVector), HVector<T>>>,
}

impl<T: Coeff> LinkEngine<T> {
    pub fn new(rule: ConeRule) -> Self {
        Self { rule, h_memo: Mutex::default(), g_memo: Mutex::default() }
    }

    pub fn rule(&self) -> ConeRule {
        self.rule
    }

    /// `h` as a function of the flag vector:
    /// `Σ_{i<n} g_i(Σ links of i-faces) + f_∅ · g_n(∅)`.
    pub fn h_of_flags(&self, f: &FlagVector) -> HVector<T> {
        if let Some(h) = self.h_memo.lock().expect("memo").get(f) {
            return h.clone();
        }
        let n = f.dim();
        assert!(n >= 0, "h is defined from dimension 0");
        let mut h = self.g(n as usize, &FlagVector::empty_polytope()).scale(&T::from_int(f.get_mask(0)));
        for i in 0..n as usize {
            let link = f.link_sum(i);
            if !link.is_zero() {
                h.add_assign(&self.g(i, &link));
            }
        }
        self.h_memo.lock().expect("memo").insert(f.clone(), h.clone());
        h
    }

    /// `g_i(B)`, of degree `dim B + i + 1`.
    pub fn g(&self, i: usize, b: &FlagVector) -> HVector<T> {
        let key = (i, b.clone());
        if let Some(g) = self.g_memo.lock().expect("memo").get(&key) {
            return g.clone();
        }
        let value = if i == 0 {
            if b.dim() < 0 {
                HVector::unit(Flavor::Final).scale(&T::from_int(b.get_mask(0)))
            } else {
                let h = self.h_of_flags(b);
                cone_rule_final(&h, self.rule).try_sub(&h.mul_second()).expect("same degree")
            }
        } else {
            self.g(i - 1, b).mul_second().try_sub(&self.g(i - 1, &cone_flag_vector(b))).expect("same degree")
        };
        debug_assert_eq!(value.degree() as i32, b.dim() + i as i32 + 1);
        self.g_memo.lock().expect("memo").insert(key, value.clone());
        value
    }

    /// Sum over the nonempty faces of `g_{dim δ}` of the link along `δ`,
    /// one face at a time.
    pub fn h_by_links(&self, lattice: &FaceLattice) -> HVector<T> {
        let n = lattice.dim() as usize;
        let mut h = HVector::zero(n, Flavor::Final);
        for (idx, face) in lattice.faces().iter().enumerate().skip(1) {
            let summand = self.g(face.dim() as usize, &lattice.link_flag_vector_at(idx));
            assert_eq!(summand.degree(), n, "summand for a {}-face has the wrong degree", face.dim());
            h.add_assign(&summand);
        }
        h
    }
}

/// One-shot [`LinkEngine::h_by_links`].
pub fn h_by_links<T: Coeff>(lattice: &FaceLattice, rule: ConeRule) -> HVector<T> {
    LinkEngine::new(rule).h_by_links(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::extended_hvector;
    use crate::word::GeneratorWord;

    fn fin(s: &str, n: usize) -> HVector<i64> {
        HVector::parse(s, n).unwrap()
    }

    fn build(s: &str) -> FaceLattice {
        FaceLattice::build(&GeneratorWord::parse(s).unwrap())
    }

    #[test]
    fn conjugated_cone_examples() {
        let c = |s: &str, n| cone_rule_final(&fin(s, n), ConeRule::Conjugation);
        assert_eq!(c("(1)", 0), fin("(11)", 1));
        assert_eq!(c("(11)", 1), fin("(111)", 2));
        assert_eq!(c("(121)", 2), fin("(1221) + (1){1}", 3));
    }

    #[test]
    fn lift_inverts_change_of_variables() {
        for n in 0..=5 {
            for w in GeneratorWord::all_ic(n) {
                let h = extended_hvector::<i64>(&w).unwrap();
                assert_eq!(to_extended(&lift_to_aux(&h)), h, "{w}");
                assert_eq!(lift_to_aux(&h), crate::engine::aux_hvector(&w).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn small_g_values() {
        let e = LinkEngine::<i64>::new(ConeRule::Conjugation);
        let point = build(".").flag_vector();
        let seg = build("C.").flag_vector();
        assert_eq!(e.g(0, &point), fin("(10)", 1));
        assert_eq!(e.g(1, &FlagVector::empty_polytope()), fin("(-1,1)", 1));
        assert_eq!(e.g(0, &seg), fin("(100)", 2));
    }

    #[test]
    fn hand_checked_sums() {
        let e = LinkEngine::<i64>::new(ConeRule::Conjugation);
        assert_eq!(e.h_by_links(&build(".")), fin("(1)", 0));
        assert_eq!(e.h_by_links(&build("C.")), fin("(11)", 1));
        assert_eq!(e.h_by_links(&build("IC.")), fin("(121)", 2));
        assert_eq!(e.h_by_links(&build("CIC.")), fin("(1221) + (1){1}", 3));
    }

    #[test]
    fn agrees_with_engine_and_flag_sums() {
        let e = LinkEngine::<i64>::new(ConeRule::Conjugation);
        for n in 0..=4 {
            for w in GeneratorWord::all_ic(n) {
                let l = FaceLattice::build(&w);
                let by_links = e.h_by_links(&l);
                assert_eq!(by_links, extended_hvector::<i64>(&w).unwrap(), "{w}");
                assert_eq!(e.h_of_flags(&l.flag_vector()), by_links, "{w}");
            }
        }
    }

    #[test]
    fn rule_names() {
        assert_eq!("direct".parse::<ConeRule>(), Ok(ConeRule::Direct));
        assert!("other".parse::<ConeRule>().is_err());
        assert_eq!(ConeRule::default().to_string(), "conjugation");
    }
}
