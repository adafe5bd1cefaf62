//! The full statement suite, grouped so that a single statement can be
//! evaluated without running everything.

use serde::Serialize;

use crate::directoid::{
    build_quasi_directoids, check_equational_equivalence, check_join_upper_bound, check_residuation_identities,
    induced_relation, is_residuated_quasi_directoid, QuasiDirectoid, EQUATIONAL_IDS, IDENTITY_IDS, QD_IDS, RQD_IDS,
    UPPER_BOUND_ID,
};
use crate::error::{Error, Result};
use crate::model::Model;
use crate::negation::{
    self, ZeroedModel, ANTISYM_ZERO_IDS, DOUBLE_NEGATION_IDS, PREORDER_NEGATION_IDS, TRIPLE_NEGATION_ID, ZERO_IDS,
};
use crate::preorder::{
    check_characterization, check_supremal_multiplication_all, is_preordered_rrs, verify_preorder_arithmetic,
    ARITHMETIC_IDS, CHARACTERIZATION_IDS, SUPREMAL_MUL_ID,
};
use crate::quotient::{is_pocrim, is_theta_congruence, quotient, theta_equational, THETA_IDS};
use crate::relation::{polarity_violation, DEFAULT_POLARITY_CAP};
use crate::report::{scan2, PropertyReport, Status};
use crate::rrs::{
    check_residuated_pairs, check_rrs, verify_antisym_props, verify_basic_props, verify_reflexive_props, ANTISYM_IDS,
    BASIC_IDS, MONOID_IDS, REFLEXIVE_IDS,
};

pub const TOOL_NAME: &str = "rrs";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const POLARITY_ID: &str = "polarity.pair";
pub const RESIDUATED_PAIR_ID: &str = "galois.residuated-pair";
pub const INDUCED_ID: &str = "correspondence.induced";
pub const QUOTIENT_POCRIM_ID: &str = "quotient.pocrim";

/// A named family of statements sharing one checker.
pub struct Group {
    pub name: &'static str,
    pub ids: Vec<&'static str>,
    run: fn(&Model) -> PropertyReport,
}

impl Group {
    pub fn run(&self, m: &Model) -> PropertyReport {
        (self.run)(m)
    }
}

pub fn groups() -> Vec<Group> {
    let cat = |parts: &[&[&'static str]]| parts.concat();
    vec![
        Group { name: "axioms", ids: cat(&[&MONOID_IDS, &["rrs.unit-top", "rrs.residuation"]]), run: check_rrs },
        Group { name: "galois", ids: vec![RESIDUATED_PAIR_ID, POLARITY_ID], run: galois_report },
        Group { name: "basic", ids: BASIC_IDS.to_vec(), run: verify_basic_props },
        Group { name: "antisym", ids: ANTISYM_IDS.to_vec(), run: verify_antisym_props },
        Group { name: "reflexive", ids: REFLEXIVE_IDS.to_vec(), run: verify_reflexive_props },
        Group { name: "preorder", ids: ARITHMETIC_IDS.to_vec(), run: verify_preorder_arithmetic },
        Group { name: "characterization", ids: CHARACTERIZATION_IDS.to_vec(), run: check_characterization },
        Group { name: "supremal-mul", ids: vec![SUPREMAL_MUL_ID], run: check_supremal_multiplication_all },
        Group { name: "directoid", ids: directoid_ids(), run: directoid_report },
        Group { name: "negation", ids: negation_ids(), run: negation_report },
    ]
}

/// Every statement id a suite report can contain, in suite order.
pub fn all_ids() -> Vec<&'static str> {
    groups().into_iter().flat_map(|g| g.ids).collect()
}

fn galois_report(m: &Model) -> PropertyReport {
    let mut r = check_residuated_pairs(m);
    match polarity_violation(m.relation(), DEFAULT_POLARITY_CAP) {
        Ok(v) => {
            r.check(POLARITY_ID, v.map(|(a, b)| vec![a.bits() as usize, b.bits() as usize]));
        }
        Err(_) => {
            r.not_applicable(POLARITY_ID, format!("size above {DEFAULT_POLARITY_CAP}"));
        }
    }
    r
}

fn directoid_ids() -> Vec<&'static str> {
    [
        &QD_IDS[..],
        &RQD_IDS,
        &[UPPER_BOUND_ID, INDUCED_ID],
        &IDENTITY_IDS,
        &EQUATIONAL_IDS,
        &THETA_IDS,
        &[QUOTIENT_POCRIM_ID],
    ]
    .concat()
}

/// Statements about one quasi-directoid: its axioms, the correspondence with
/// the stored relation, residuation identities, θ and the quotient.
pub fn directoid_statements(q: &QuasiDirectoid) -> PropertyReport {
    let m = q.model();
    let mut r = is_residuated_quasi_directoid(q);
    r.extend(check_join_upper_bound(q));
    let induced = induced_relation(q);
    r.check(INDUCED_ID, scan2(q.size(), |x, y| m.rel(x, y) == induced.get(x, y)));
    r.extend(check_residuation_identities(q));
    r.extend(check_equational_equivalence(q));
    let theta = is_theta_congruence(q);
    let join_congruence = theta.status(THETA_IDS[0]);
    r.extend(theta);
    match join_congruence {
        Some(Status::Holds) => {
            let p = theta_equational(q).expect("θ of a residuated quasi-directoid");
            let verdict = match quotient(q, &p) {
                Ok(quo) => is_pocrim(&quo.model).failures().next().map(|s| s.witness.clone().unwrap_or_default()),
                Err(_) => Some(vec![]),
            };
            r.check(QUOTIENT_POCRIM_ID, verdict);
        }
        Some(Status::Fails) => {
            r.not_applicable(QUOTIENT_POCRIM_ID, "θ is not a congruence of the join");
        }
        _ => {
            r.not_applicable(QUOTIENT_POCRIM_ID, "not a residuated quasi-directoid");
        }
    }
    r
}

/// Uses the model's own join when present; otherwise every quasi-join built
/// from a pre-ordered RRS, folded with [`PropertyReport::combine`].
fn directoid_report(m: &Model) -> PropertyReport {
    let ids = directoid_ids();
    if m.join_table().is_some() {
        return directoid_statements(&QuasiDirectoid::new(m.clone()).expect("join present"));
    }
    if !is_preordered_rrs(m) {
        return PropertyReport::all_not_applicable(&ids, "no join and not a pre-ordered residuated system");
    }
    let built = build_quasi_directoids(m).expect("pre-ordered");
    let reports: Vec<PropertyReport> = built.iter().map(directoid_statements).collect();
    PropertyReport::combine(&reports)
}

fn negation_ids() -> Vec<&'static str> {
    [
        &["zero.absorbing"][..],
        &ZERO_IDS,
        &ANTISYM_ZERO_IDS,
        &PREORDER_NEGATION_IDS,
        &[TRIPLE_NEGATION_ID],
        &DOUBLE_NEGATION_IDS,
    ]
    .concat()
}

fn negation_report(m: &Model) -> PropertyReport {
    match ZeroedModel::new(m.clone()) {
        Ok(z) => negation::verify_all(&z),
        Err(_) => PropertyReport::all_not_applicable(&negation_ids(), "no zero designated"),
    }
}

/// Runs every group.
pub fn run_all(m: &Model) -> PropertyReport {
    let mut r = PropertyReport::new();
    for g in groups() {
        r.extend(g.run(m));
    }
    r
}

/// The group containing `id`, run on `m`.
pub fn report_for(id: &str, m: &Model) -> Result<PropertyReport> {
    let g =
        groups().into_iter().find(|g| g.ids.contains(&id)).ok_or_else(|| Error::UnknownStatement(id.to_string()))?;
    Ok(g.run(m))
}

pub fn is_statement_id(id: &str) -> bool {
    all_ids().contains(&id)
}

/// Machine-readable output of the suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutput {
    pub tool: &'static str,
    pub version: &'static str,
    pub size: usize,
    pub statements: PropertyReport,
}

impl SuiteOutput {
    pub fn new(m: &Model) -> Self {
        SuiteOutput { tool: TOOL_NAME, version: TOOL_VERSION, size: m.size(), statements: run_all(m) }
    }
}
