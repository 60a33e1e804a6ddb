//! Published values used by the verification suites.
//!
//! Terms written `{1}A` in the source tables are stored as `A{1}`, the
//! canonical spelling of the same final word.

use crate::hvector::HVector;
use crate::word::GeneratorWord;

/// `(word, h)` for the tabulated IC polytopes of dimensions 0 to 5.
pub const TABLES: &[(&str, &str)] = &[
    (".", "(1)"),
    ("C.", "(11)"),
    ("I.", "(11)"),
    ("CC.", "(111)"),
    ("IC.", "(121)"),
    ("CCC.", "(1111)"),
    ("ICC.", "(1221)"),
    ("IIC.", "(1331)"),
    ("CIC.", "(1221) + (1){1}"),
    ("CCCC.", "(11111)"),
    ("ICCC.", "(12221)"),
    ("IICC.", "(13431)"),
    ("IIIC.", "(14641)"),
    ("CICC.", "(12221) + (1)A{1}"),
    ("CIIC.", "(13331) + (2)A{1}"),
    ("ICIC.", "(13431) + (11){1} + (1)A{1}"),
    ("CCIC.", "(12221) + (11){1} + (1)A{1}"),
    ("CCCCC.", "(111111)"),
    ("CCCIC.", "(122221) + (111){1} + (11)A{1} + (1)AA{1}"),
    ("CCICC.", "(122221) + (11)A{1} + (1)AA{1}"),
    ("CICCC.", "(122221) + (1)AA{1}"),
    ("CICIC.", "(134431) + (111){1} + (11)A{1} + (2)AA{1} + (1){2}"),
    ("ICCCC.", "(122221)"),
    ("ICCIC.", "(134431) + (121){1} + (12)A{1} + (1)AA{1}"),
    ("ICICC.", "(134431) + (11)A{1} + (1)AA{1}"),
];

/// The auxiliary vector of `CCIC.`.
pub const AUX_CHECKPOINT: (&str, &str) = ("CCIC.", "[12221] + [11]{1}");

/// A bipyramid word and the coefficient of `xA{1}` in its linear `h`.
pub const BIPYRAMID_CHECKPOINT: (&str, &str, i64) = ("BICCC.", "xA{1}", -2);

/// The octahedron and its linearly extended pseudo h-vector.
pub const OCTAHEDRON_PSEUDO_H: (&str, [i64; 4]) = ("BIC.", [1, -1, 5, 1]);

/// Parsed [`TABLES`].
pub fn tables() -> Vec<(GeneratorWord, HVector<i64>)> {
    TABLES
        .iter()
        .map(|(w, h)| {
            let word = GeneratorWord::parse(w).expect("table word");
            let h = HVector::parse(h, word.dim()).expect("table value");
            (word, h)
        })
        .collect()
}
