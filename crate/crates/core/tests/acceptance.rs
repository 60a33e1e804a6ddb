//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::process::ExitCode;
use std::time::Instant;

use lgh_core::engine::{aux_hvector, extended_hvector};
use lgh_core::golden;
use lgh_core::linear::{linear_h, linear_pseudo_h};
use lgh_core::links::{ConeRule, LinkEngine};
use lgh_core::terms::IndexTerm;
use lgh_core::verify::{self, term_coefficient, Checker, SuiteReport};
use lgh_core::{BigRational, BiGradedPoly, FaceLattice, Flavor, GeneratorWord, HVector};

fn word(s: &str) -> GeneratorWord {
    GeneratorWord::parse(s).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn golden_tables() -> SuiteReport {
    let mut c = Checker::new("golden tables, dimensions 0-5");
    for (w, expected) in golden::tables() {
        c.check_eq(format!("h({w})"), &extended_hvector::<i64>(&w).unwrap(), &expected);
    }
    c.finish()
}

fn aux_checkpoint() -> SuiteReport {
    let mut c = Checker::new("auxiliary vector of CCIC.");
    let expected: HVector<i64> = HVector::parse("[12221] + [11]{1}", 4).unwrap();
    c.check_eq("aux(CCIC.)", &aux_hvector::<i64>(&word("CCIC.")).unwrap(), &expected);
    c.finish()
}

fn bipyramid_checkpoint() -> SuiteReport {
    let mut c = Checker::new("BICCC. has -2 on xA{1} by two routes");
    let l = FaceLattice::build(&word("BICCC."));
    let term = IndexTerm::parse("xA{1}", Flavor::Final).unwrap();
    let lin = linear_h(&l.flag_vector()).unwrap();
    c.check_eq("linear extension", &term_coefficient(&lin, &term), &q(-2));
    let links = LinkEngine::<BigRational>::new(ConeRule::Conjugation).h_by_links(&l);
    c.check_eq("link recursion", &term_coefficient(&links, &term), &q(-2));
    c.finish()
}

fn octahedron() -> SuiteReport {
    let mut c = Checker::new("pseudo h-vector of the octahedron");
    let f = FaceLattice::build(&word("BIC.")).flag_vector();
    let expected = BiGradedPoly::<i64>::from_ints(&[1, -1, 5, 1]).map(|v| q(*v));
    c.check_eq("pseudo h(BIC.)", &linear_pseudo_h(&f).unwrap(), &expected);
    c.finish()
}

fn suite(name: &str, run: impl FnOnce(&mut Checker)) -> SuiteReport {
    let mut c = Checker::new(name);
    run(&mut c);
    c.finish()
}

fn rule_switch() -> SuiteReport {
    let mut c = Checker::new("three routes agree; exactly one cone rule passes");
    verify::link_agreement(&mut c, 5, ConeRule::Conjugation);
    let conjugation = verify::rule_agreement(ConeRule::Conjugation, 5);
    let direct = verify::rule_agreement(ConeRule::Direct, 5);
    println!("    {conjugation}");
    println!("    {direct}");
    c.check(conjugation.passed() != direct.passed(), || "both or neither cone rule reproduces the engine".into());
    c.check(conjugation.passed(), || "the conjugation rule is not the passing one".into());
    c.finish()
}

fn properties() -> SuiteReport {
    let mut c = Checker::new("palindromy, unimodality, strata and downsets");
    verify::palindromy(&mut c, 8);
    verify::unimodality(&mut c, 8);
    verify::term_order(&mut c, 9);
    c.finish()
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, Box<dyn FnOnce() -> SuiteReport>)> = vec![
        (1, Box::new(golden_tables)),
        (2, Box::new(aux_checkpoint)),
        (3, Box::new(bipyramid_checkpoint)),
        (4, Box::new(octahedron)),
        (5, Box::new(|| suite("Fibonacci ranks of flag vectors", |c| verify::gds_rank(c, 7)))),
        (6, Box::new(|| suite("Fibonacci term counts", |c| verify::fibonacci_counts(c, 12)))),
        (7, Box::new(|| suite("IC equation", |c| verify::ic_equation(c, 5)))),
        (8, Box::new(rule_switch)),
        (9, Box::new(|| suite("lattice oracles", |c| verify::oracle(c, 6)))),
        (10, Box::new(properties)),
    ];
    let mut failed = 0;
    for (i, run) in criteria {
        let start = Instant::now();
        let report = run();
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!("criterion {i:>2} {status}: {} ({} checks, {:.2?})", report.name, report.checks, start.elapsed());
        if let Some(e) = &report.failure {
            println!("    first counterexample: {e}");
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
