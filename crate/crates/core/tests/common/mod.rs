#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use seifert::fixtures::{load_fixtures, parse_matrix_text, FixtureEntry, MatrixEntry};
use seifert::LaurentPoly;

pub const KNOT_FILES: [&str; 5] = [
    "basic.pd",
    "rolfsen_3to9.pd",
    "alternating_3to8.pd",
    "homogeneous.pd",
    "eleven_crossing.pd",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load(name: &str) -> Vec<FixtureEntry> {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    load_fixtures(&text).unwrap()
}

pub fn all_knots() -> Vec<FixtureEntry> {
    KNOT_FILES.iter().flat_map(|f| load(f)).collect()
}

pub fn singular_matrices() -> Vec<MatrixEntry> {
    let text = std::fs::read_to_string(fixture_path("singular_matrices.txt")).unwrap();
    parse_matrix_text(&text)
        .into_iter()
        .map(|r| r.unwrap())
        .collect()
}

/// name -> (three-genus, Alexander polynomial) from the reference table
pub fn reference() -> BTreeMap<String, (u32, LaurentPoly)> {
    let text = std::fs::read_to_string(fixture_path("knotinfo_reference.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let c: Vec<i64> = f[2].split(',').map(|x| x.parse().unwrap()).collect();
            (
                f[0].to_string(),
                (f[1].parse().unwrap(), LaurentPoly::from_coeffs(0, &c)),
            )
        })
        .collect()
}
