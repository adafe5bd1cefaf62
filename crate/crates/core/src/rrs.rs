//! Axioms of a residuated relational system, upper cones, supremal elements,
//! and the arithmetic that holds in every such system.

use crate::error::{Error, Result};
use crate::model::Model;
use crate::relation::{self, is_antisymmetric, is_reflexive, SubsetMask};
use crate::report::{scan1, scan2, scan3, PropertyReport};

pub const MONOID_IDS: [&str; 3] = ["rrs.monoid.associative", "rrs.monoid.commutative", "rrs.monoid.unit"];
pub const BASIC_IDS: [&str; 5] = ["basic.a", "basic.b", "basic.c", "basic.d", "basic.e"];
pub const ANTISYM_IDS: [&str; 2] = ["antisym.i", "antisym.ii"];
pub const REFLEXIVE_IDS: [&str; 5] = ["reflexive.a", "reflexive.b", "reflexive.c", "reflexive.d", "reflexive.e"];

/// Associativity, commutativity and the unit law of `⟨A, ·, 1⟩`, each reported separately.
pub fn check_commutative_monoid(m: &Model) -> PropertyReport {
    let n = m.size();
    let u = m.unit();
    let mut r = PropertyReport::new();
    r.check(MONOID_IDS[0], scan3(n, |x, y, z| m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z))));
    r.check(MONOID_IDS[1], scan2(n, |x, y| m.mul(x, y) == m.mul(y, x)));
    r.check(MONOID_IDS[2], scan1(n, |x| m.mul(u, x) == x && m.mul(x, u) == x));
    r
}

pub(crate) fn is_commutative_monoid(m: &Model) -> bool {
    check_commutative_monoid(m).all_hold()
}

/// `(x, 1) ∈ R` for every `x`.
pub fn check_unit_top(m: &Model) -> PropertyReport {
    let mut r = PropertyReport::new();
    r.check("rrs.unit-top", scan1(m.size(), |x| m.rel(x, m.unit())));
    r
}

/// `(x·y, z) ∈ R ⇔ (x, y→z) ∈ R` over all triples.
pub fn check_residuation(m: &Model) -> PropertyReport {
    let mut r = PropertyReport::new();
    r.check("rrs.residuation", scan3(m.size(), |x, y, z| m.rel(m.mul(x, y), z) == m.rel(x, m.arrow(y, z))));
    r
}

/// All three axioms in one report.
pub fn check_rrs(m: &Model) -> PropertyReport {
    let mut r = check_commutative_monoid(m);
    r.extend(check_unit_top(m)).extend(check_residuation(m));
    r
}

pub fn is_rrs(m: &Model) -> bool {
    is_commutative_monoid(m) && check_unit_top(m).all_hold() && check_residuation(m).all_hold()
}

/// For each `a`, `f_a(x) = x·a` and `g_a(x) = a→x` form a Galois connection
/// for the model's relation. Witness `(a, x, y)`.
pub fn check_residuated_pairs(m: &Model) -> PropertyReport {
    let mut r = PropertyReport::new();
    let mut violation = None;
    for a in m.elements() {
        let f: Vec<usize> = m.elements().map(|x| m.mul(x, a)).collect();
        let g: Vec<usize> = m.elements().map(|x| m.arrow(a, x)).collect();
        if let Some((x, y)) = relation::galois_violation(&f, &g, m.relation()).expect("maps are total") {
            violation = Some(vec![a, x, y]);
            break;
        }
    }
    r.check("galois.residuated-pair", violation);
    r
}

/// `U_R(a,b) = {c : (a,c) ∈ R and (b,c) ∈ R}`; `upper_cone(m, a, a)` is `U_R(a)`.
pub fn upper_cone(m: &Model, a: usize, b: usize) -> Result<SubsetMask> {
    m.universe().check(a)?;
    m.universe().check(b)?;
    let rel = m.relation();
    Ok(SubsetMask::from_bits(m.size(), rel.row(a) & rel.row(b)))
}

/// Every `k` with `(z,k) ∈ R` for all `z ∈ Z` such that each other common
/// upper bound `w ≠ k` satisfies `(k,w) ∈ R`. May be empty or have several members.
pub fn supremal_elements(m: &Model, zs: &SubsetMask) -> Result<SubsetMask> {
    if zs.size() != m.size() {
        return Err(Error::DimensionMismatch("subset size differs from model".into()));
    }
    if zs.is_empty() {
        return Err(Error::EmptySubset);
    }
    let rel = m.relation();
    let bounds = relation::star(rel, zs);
    let mut out = SubsetMask::empty(m.size());
    for k in bounds.iter() {
        let others = bounds.bits() & !(1u64 << k);
        if others & !rel.row(k) == 0 {
            out.insert(k);
        }
    }
    Ok(out)
}

/// Supremal elements for the pair `a, b`: members `w` of `U_R(a,b)` such that
/// `(w,z) ∈ R` for each `z ∈ U_R(a,b)` with `z ≠ w`.
///
/// The quantifier ranges over the cone only; for `Z = {a, b}` this is the
/// same set as [`supremal_elements`].
pub fn supremal_for_pair(m: &Model, a: usize, b: usize) -> Result<SubsetMask> {
    let cone = upper_cone(m, a, b)?;
    let mut out = SubsetMask::empty(m.size());
    for w in cone.iter() {
        if cone.iter().all(|z| z == w || m.rel(w, z)) {
            out.insert(w);
        }
    }
    Ok(out)
}

fn require_rrs(m: &Model, ids: &[&str]) -> Option<PropertyReport> {
    (!is_rrs(m)).then(|| PropertyReport::all_not_applicable(ids, "not a residuated relational system"))
}

/// Arithmetic valid in every residuated relational system.
pub fn verify_basic_props(m: &Model) -> PropertyReport {
    if let Some(na) = require_rrs(m, &BASIC_IDS) {
        return na;
    }
    let n = m.size();
    let u = m.unit();
    let mut r = PropertyReport::new();
    r.check(BASIC_IDS[0], scan2(n, |x, y| m.arrow(x, y) != u || m.rel(x, y)));
    r.check(BASIC_IDS[1], scan1(n, |x| m.rel(x, m.arrow(u, u))));
    r.check(BASIC_IDS[2], scan1(n, |x| m.rel(u, m.arrow(x, u))));
    r.check(BASIC_IDS[3], scan3(n, |x, y, z| m.arrow(x, y) != u || m.rel(m.mul(z, x), y)));
    r.check(BASIC_IDS[4], scan2(n, |x, y| m.rel(x, m.arrow(y, u))));
    r
}

/// With `R` antisymmetric: `(x,y) ∈ R ⇔ x→y = 1`, and under reflexivity
/// `(x·y, y), (x·y, x) ∈ R`.
pub fn verify_antisym_props(m: &Model) -> PropertyReport {
    if let Some(na) = require_rrs(m, &ANTISYM_IDS) {
        return na;
    }
    if !is_antisymmetric(m.relation()) {
        return PropertyReport::all_not_applicable(&ANTISYM_IDS, "relation is not antisymmetric");
    }
    let n = m.size();
    let u = m.unit();
    let mut r = PropertyReport::new();
    r.check(ANTISYM_IDS[0], scan2(n, |x, y| m.rel(x, y) == (m.arrow(x, y) == u)));
    if is_reflexive(m.relation()) {
        r.check(ANTISYM_IDS[1], scan2(n, |x, y| m.rel(m.mul(x, y), y) && m.rel(m.mul(x, y), x)));
    } else {
        r.not_applicable(ANTISYM_IDS[1], "relation is not reflexive");
    }
    r
}

/// Arithmetic valid when `R` is reflexive.
pub fn verify_reflexive_props(m: &Model) -> PropertyReport {
    if let Some(na) = require_rrs(m, &REFLEXIVE_IDS) {
        return na;
    }
    if !is_reflexive(m.relation()) {
        return PropertyReport::all_not_applicable(&REFLEXIVE_IDS, "relation is not reflexive");
    }
    let n = m.size();
    let u = m.unit();
    let mut r = PropertyReport::new();
    r.check(REFLEXIVE_IDS[0], scan1(n, |x| m.rel(u, m.arrow(x, x))));
    r.check(REFLEXIVE_IDS[1], scan2(n, |x, y| m.rel(m.mul(m.arrow(x, y), x), y)));
    r.check(REFLEXIVE_IDS[2], scan2(n, |x, y| m.rel(x, m.arrow(y, m.mul(x, y)))));
    r.check(REFLEXIVE_IDS[3], scan1(n, |x| m.rel(x, m.arrow(u, x)) && m.rel(m.arrow(u, x), x)));
    r.check(REFLEXIVE_IDS[4], scan2(n, |x, y| m.rel(x, m.arrow(m.arrow(x, y), y))));
    r
}
