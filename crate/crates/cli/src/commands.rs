use std::fmt::Display;
use std::path::Path;

use serde_json::{json, Value};

use lgh_core::engine::{aux_hvector, extended_hvector, pseudo_h};
use lgh_core::linear::{express_in_basis, ic_basis, linear_h, linear_pseudo_h, FlagBasis};
use lgh_core::links::LinkEngine;
use lgh_core::terms::{broadly_similar, enumerate_terms, implies, strata_vector, IndexTerm};
use lgh_core::verify::{rule_agreement, run_all, term_coefficient, Suite, SuiteReport};
use lgh_core::{BigRational, BiGradedPoly, Coeff, FaceLattice, FlagVector, Flavor, GeneratorWord, HVector};

use crate::{Cli, Command, Failure, Format};

enum Source {
    Word(GeneratorWord),
    File(String, FaceLattice),
}

impl Source {
    fn resolve(arg: &str) -> Result<Self, Failure> {
        let path = Path::new(arg);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?;
            let lattice = FaceLattice::from_json(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
            return Ok(Source::File(arg.to_string(), lattice));
        }
        GeneratorWord::parse(arg).map(Source::Word).map_err(|e| Failure::Usage(format!("`{arg}`: {e}")))
    }

    fn label(&self) -> String {
        match self {
            Source::Word(w) => w.to_string(),
            Source::File(name, _) => name.clone(),
        }
    }

    fn lattice(&self) -> FaceLattice {
        match self {
            Source::Word(w) => FaceLattice::build(w),
            Source::File(_, l) => l.clone(),
        }
    }

    fn flag_vector(&self) -> FlagVector {
        self.lattice().flag_vector()
    }

    /// The word, when the engine can evaluate it directly.
    fn engine_word(&self) -> Option<&GeneratorWord> {
        match self {
            Source::Word(w) if !w.contains_bipyramid() => Some(w),
            _ => None,
        }
    }
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

fn hvector_csv<T: Coeff>(h: &HVector<T>) -> String {
    let rows = h.terms().flat_map(|(w, p)| {
        let m = p.degree();
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| vec![w.to_string(), (m - j).to_string(), j.to_string(), c.to_string()])
            .collect::<Vec<_>>()
    });
    csv_rows(&["word", "xexp", "yexp", "coefficient"], rows)
}

fn render_hvector<T: Coeff>(format: Format, label: &str, method: &str, h: &HVector<T>) -> String {
    match format {
        Format::Text if method == "engine" => format!("{h}\n"),
        Format::Text => format!("{h}    [{method}]\n"),
        Format::Json => json_text(json!({ "source": label, "method": method, "h": h.to_json() })),
        Format::Csv => hvector_csv(h),
    }
}

fn render_poly<T: Coeff>(format: Format, label: &str, method: &str, p: &BiGradedPoly<T>) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    match format {
        Format::Text if method == "engine" => format!("{p}\n"),
        Format::Text => format!("{p}    [{method}]\n"),
        Format::Json => json_text(json!({ "source": label, "method": method, "coefficients": coeffs })),
        Format::Csv => csv_rows(
            &["xexp", "yexp", "coefficient"],
            coeffs.iter().enumerate().map(|(j, c)| vec![(p.degree() - j).to_string(), j.to_string(), c.clone()]),
        ),
    }
}

fn render_flag_vector(format: Format, label: &str, f: &FlagVector) -> String {
    let set = |s: &[usize]| s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
    match format {
        Format::Text => f.iter().map(|(s, c)| format!("{} {c}\n", lgh_core::flag::render_set(&s))).collect(),
        Format::Json => {
            let mut v = f.to_json();
            v["source"] = json!(label);
            json_text(v)
        }
        Format::Csv => csv_rows(&["set", "count"], f.iter().map(|(s, c)| vec![set(&s), c.to_string()])),
    }
}

fn render_report(format: Format, reports: &[SuiteReport]) -> String {
    match format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => json_text(json!({
            "passed": reports.iter().all(SuiteReport::passed),
            "suites": reports.iter().map(|r| json!({
                "name": r.name, "passed": r.passed(), "checks": r.checks, "failure": r.failure,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_rows(
            &["suite", "passed", "checks", "failure"],
            reports.iter().map(|r| {
                vec![r.name.clone(), r.passed().to_string(), r.checks.to_string(), r.failure.clone().unwrap_or_default()]
            }),
        ),
    }
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Hvec { source } => {
            let src = Source::resolve(source)?;
            match src.engine_word() {
                Some(w) => {
                    let h = extended_hvector::<i64>(w).map_err(usage)?;
                    Ok(render_hvector(format, &src.label(), "engine", &h))
                }
                None => {
                    let h = linear_h(&src.flag_vector()).map_err(usage)?;
                    Ok(render_hvector(format, &src.label(), "linear extension", &h))
                }
            }
        }
        Command::Aux { word } => {
            let w = GeneratorWord::parse(word).map_err(|e| Failure::Usage(format!("`{word}`: {e}")))?;
            let h = aux_hvector::<i64>(&w).map_err(usage)?;
            Ok(render_hvector(format, &w.to_string(), "engine", &h))
        }
        Command::Flagvec { source } => {
            let src = Source::resolve(source)?;
            Ok(render_flag_vector(format, &src.label(), &src.flag_vector()))
        }
        Command::Lattice { source } => {
            let src = Source::resolve(source)?;
            let l = src.lattice();
            match format {
                Format::Csv => Ok(csv_rows(
                    &["dim", "verts"],
                    (0..l.num_faces()).map(|i| {
                        let verts: Vec<String> = l.face_labels(i).iter().map(|v| v.to_string()).collect();
                        vec![l.faces()[i].dim().to_string(), verts.join(" ")]
                    }),
                )),
                _ => Ok(format!("{}\n", l.to_json())),
            }
        }
        Command::Basis { n } => {
            let n = i32::try_from(*n).map_err(usage)?;
            let basis = FlagBasis::get(n).map_err(usage)?;
            let words: Vec<String> = basis.words().iter().map(|w| w.to_string()).collect();
            match format {
                Format::Text => Ok(words.iter().map(|w| format!("{w}\n")).collect()),
                Format::Json => Ok(json_text(json!({
                    "dim": n,
                    "words": words,
                    "flag_vectors": basis.vectors().iter().map(|f| f.entries().to_vec()).collect::<Vec<_>>(),
                }))),
                Format::Csv => Ok(csv_rows(&["word"], words.into_iter().map(|w| vec![w]))),
            }
        }
        Command::Express { source, coeff } => {
            let src = Source::resolve(source)?;
            let f = src.flag_vector();
            if let Some(term) = coeff {
                let t = IndexTerm::parse(term, Flavor::Final).map_err(|e| Failure::Usage(format!("`{term}`: {e}")))?;
                if t.flavor() != Flavor::Final {
                    return Err(Failure::Usage(format!("`{term}` is not written in x, y, A")));
                }
                let c = term_coefficient(&linear_h(&f).map_err(usage)?, &t);
                return Ok(match format {
                    Format::Text => format!("{c}\n"),
                    Format::Json => json_text(json!({ "source": src.label(), "term": t.to_string(), "coefficient": c.to_string() })),
                    Format::Csv => csv_rows(&["term", "coefficient"], [vec![t.to_string(), c.to_string()]]),
                });
            }
            let coeffs = express_in_basis(&f).map_err(usage)?;
            let words = ic_basis(f.dim() as usize);
            let pairs: Vec<(String, String)> = words.iter().zip(&coeffs).map(|(w, c)| (w.to_string(), c.to_string())).collect();
            Ok(match format {
                Format::Text => pairs.iter().map(|(w, c)| format!("{w} {c}\n")).collect(),
                Format::Json => json_text(json!({
                    "source": src.label(),
                    "coefficients": pairs.iter().map(|(w, c)| json!({ "word": w, "coefficient": c })).collect::<Vec<_>>(),
                })),
                Format::Csv => csv_rows(&["word", "coefficient"], pairs.into_iter().map(|(w, c)| vec![w, c])),
            })
        }
        Command::Links { source, rule } => {
            let src = Source::resolve(source)?;
            let engine = LinkEngine::<BigRational>::new((*rule).into());
            let h = engine.h_by_links(&src.lattice());
            Ok(render_hvector(format, &src.label(), &format!("link recursion, {} rule", engine.rule()), &h))
        }
        Command::Pseudo { source } => {
            let src = Source::resolve(source)?;
            match src.engine_word() {
                Some(w) => Ok(render_poly(format, &src.label(), "engine", &pseudo_h::<i64>(w).map_err(usage)?)),
                None => {
                    let p = linear_pseudo_h(&src.flag_vector()).map_err(usage)?;
                    Ok(render_poly(format, &src.label(), "linear extension", &p))
                }
            }
        }
        Command::Terms { n } => {
            let terms: Vec<String> = enumerate_terms(*n).iter().map(|t| t.to_string()).collect();
            Ok(match format {
                Format::Text => terms.iter().map(|t| format!("{t}\n")).collect(),
                Format::Json => json_text(json!({ "degree": n, "count": terms.len(), "terms": terms })),
                Format::Csv => csv_rows(&["term"], terms.into_iter().map(|t| vec![t])),
            })
        }
        Command::Order { first, second } => {
            let parse = |s: &String| IndexTerm::parse(s, Flavor::Aux).map_err(|e| Failure::Usage(format!("`{s}`: {e}")));
            let (a, b) = (parse(first)?, parse(second)?);
            let (sa, sb) = (strata_vector(&a), strata_vector(&b));
            let (similar, ab, ba) = (broadly_similar(&a, &b), implies(&a, &b), implies(&b, &a));
            let strata = |s: &[usize]| format!("({})", s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
            let yes = |b: bool| if b { "yes" } else { "no" };
            Ok(match format {
                Format::Text => format!(
                    "{a} strata {}\n{b} strata {}\nbroadly similar: {}\n{a} => {b}: {}\n{b} => {a}: {}\n",
                    strata(&sa),
                    strata(&sb),
                    yes(similar),
                    yes(ab),
                    yes(ba)
                ),
                Format::Json => json_text(json!({
                    "first": { "term": a.to_string(), "degree": a.degree(), "strata": sa },
                    "second": { "term": b.to_string(), "degree": b.degree(), "strata": sb },
                    "broadly_similar": similar,
                    "first_implies_second": ab,
                    "second_implies_first": ba,
                })),
                Format::Csv => csv_rows(
                    &["first", "second", "broadly_similar", "first_implies_second", "second_implies_first"],
                    [vec![a.to_string(), b.to_string(), similar.to_string(), ab.to_string(), ba.to_string()]],
                ),
            })
        }
        Command::Verify { suite, max_dim } => {
            let reports = if suite == "all" {
                let mut r = run_all(*max_dim);
                r.push(rule_agreement(lgh_core::links::ConeRule::Conjugation, *max_dim));
                r
            } else {
                vec![suite.parse::<Suite>().map_err(|e| Failure::Usage(format!("{e}; expected one of tables, ic-equation, palindromy, fibonacci, gds-rank, oracle, link-agreement, unimodality, terms, all")))?.run(*max_dim)]
            };
            let out = render_report(format, &reports);
            if reports.iter().all(SuiteReport::passed) {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}
