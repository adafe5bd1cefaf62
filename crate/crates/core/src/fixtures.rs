//! The shipped fixture corpus (`fixtures/*.json` at the workspace root).

use crate::error::{Error, Result};
use crate::model::Model;

const SOURCES: [(&str, &str); 5] = [
    ("M1", include_str!("../../../fixtures/M1.json")),
    ("B2", include_str!("../../../fixtures/B2.json")),
    ("G3", include_str!("../../../fixtures/G3.json")),
    ("P3", include_str!("../../../fixtures/P3.json")),
    ("D5", include_str!("../../../fixtures/D5.json")),
];

pub const NAMES: [&str; 5] = ["M1", "B2", "G3", "P3", "D5"];

pub fn by_name(name: &str) -> Result<Model> {
    let (_, src) = SOURCES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Json(format!("no fixture named `{name}`")))?;
    Model::from_json(src)
}

fn load(name: &str) -> Model {
    by_name(name).expect("shipped fixtures are valid")
}

/// One-element algebra.
pub fn m1() -> Model {
    load("M1")
}

/// Two-element Boolean algebra, unit 1, · = min.
pub fn b2() -> Model {
    load("B2")
}

/// Three-element Gödel chain 0 < 1 < 2.
pub fn g3() -> Model {
    load("G3")
}

/// Genuine pre-order: a = 0 and b = 1 are equivalent, 2 is the unit.
pub fn p3() -> Model {
    load("P3")
}

/// Five-element distributive lattice 0 < a, b < c < 1 (indices 0..4) with
/// the Heyting residuum.
pub fn d5() -> Model {
    load("D5")
}

pub fn all() -> Vec<(&'static str, Model)> {
    NAMES.iter().map(|&n| (n, load(n))).collect()
}
