use std::process::{Command, Output};

fn lgh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgh")).args(args).output().expect("run lgh")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn hvec_of_a_basis_polytope() {
    let o = lgh(&["hvec", "CICIC."]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(134431) + (111){1} + (11)A{1} + (2)AA{1} + (1){2}\n");
    // the middle-dot terminator is accepted too
    assert_eq!(stdout(&lgh(&["hvec", "CICIC·"])), stdout(&o));
}

#[test]
fn bipyramid_words_use_the_linear_extension() {
    let o = lgh(&["hvec", "BIC."]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[linear extension]"), "{}", stdout(&o));
    let o = lgh(&["express", "BICCC.", "--coeff", "xA{1}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-2\n");
}

#[test]
fn express_and_pseudo() {
    assert_eq!(stdout(&lgh(&["express", "BIC."])), "CCC. -3\nCIC. 6\nICC. -2\n");
    assert_eq!(stdout(&lgh(&["pseudo", "BIC."])), "(1,-1,5,1)    [linear extension]\n");
    assert_eq!(stdout(&lgh(&["basis", "3"])), "CCC.\nCIC.\nICC.\n");
}

#[test]
fn aux_and_links() {
    assert_eq!(stdout(&lgh(&["aux", "CCIC."])), "[12221] + [11]{1}\n");
    let conj = lgh(&["links", "CCIC."]);
    assert_eq!(stdout(&conj), "(12221) + (11){1} + (1)A{1}    [link recursion, conjugation rule]\n");
    let direct = lgh(&["links", "CCIC.", "--rule", "direct"]);
    assert_eq!(direct.status.code(), Some(0));
    assert_eq!(stdout(&direct), "(12221) + (11){1}    [link recursion, direct rule]\n");
}

#[test]
fn terms_and_order() {
    assert_eq!(stdout(&lgh(&["terms", "3"])), "x^3\nx^2y\nxy^2\ny^3\n{1}\n");
    let o = lgh(&["order", "X{1}{1}", "{1}Ā{1}"]);
    let text = stdout(&o);
    assert!(text.contains("X{1}{1} strata (1,4,7)"), "{text}");
    assert!(text.contains("{1}Ā{1} strata (0,3,7)"), "{text}");
    assert!(text.contains("X{1}{1} => {1}Ā{1}: yes"), "{text}");
    assert!(text.contains("{1}Ā{1} => X{1}{1}: no"), "{text}");
}

#[test]
fn flag_vectors_in_three_formats() {
    assert_eq!(stdout(&lgh(&["flagvec", "IC."])), "{} 1\n{0} 4\n{1} 4\n{0,1} 8\n");
    assert_eq!(stdout(&lgh(&["flagvec", "IC.", "--format", "csv"])), "set,count\n,1\n0,4\n1,4\n0 1,8\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&lgh(&["flagvec", "IC.", "--format", "json"]))).unwrap();
    assert_eq!(json["dim"], 2);
    assert_eq!(json["entries"][3]["count"], 8);
}

#[test]
fn json_output_is_deterministic() {
    let a = lgh(&["hvec", "ICCIC.", "--format", "json"]);
    let b = lgh(&["hvec", "ICCIC.", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["method"], "engine");
    assert_eq!(v["h"]["degree"], 5);
}

#[test]
fn lattice_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pyramid.json");
    let path = path.to_str().unwrap();
    let o = lgh(&["lattice", "CIC.", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&lgh(&["flagvec", path])), stdout(&lgh(&["flagvec", "CIC."])));
    assert_eq!(stdout(&lgh(&["express", path])), stdout(&lgh(&["express", "CIC."])));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":1,"faces":[{"verts":[],"dim":-1},{"verts":[0],"dim":0}]}"#).unwrap();
    let o = lgh(&["flagvec", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid lattice"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    let o = lgh(&["hvec", "CXC."]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 2"), "{}", stderr(&o));
    assert_eq!(lgh(&["hvec", ""]).status.code(), Some(2));
    assert_eq!(lgh(&["aux", "BC."]).status.code(), Some(2));
    assert_eq!(lgh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lgh(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(lgh(&["hvec", "C.", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(lgh(&["express", "C.", "--coeff", "X{1}"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let o = lgh(&["verify", "tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS tables"));
    let o = lgh(&["verify", "link-agreement", "--max-dim", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("suite,passed,checks,failure\nlink-agreement,true,"), "{}", stdout(&o));
}
