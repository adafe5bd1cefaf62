//! Quasi-join `⊔` built from a pre-ordered residuated system, the
//! (residuated) quasi-directoid axioms, the induced relation `x ⪯ y ⇔ x⊔y = y`,
//! and the equational form of residuation.

use crate::error::{Error, Result};
use crate::model::{Model, OpTable};
use crate::preorder::is_preordered_rrs;
use crate::relation::{BinRel, SubsetMask};
use crate::report::{scan1, scan2, scan3, PropertyReport};
use crate::rrs::{check_commutative_monoid, upper_cone};

pub const QD_IDS: [&str; 3] = ["qd.a", "qd.b", "qd.c"];
pub const RQD_IDS: [&str; 3] = ["rqd.e", "rqd.f", "rqd.g"];
pub const IDENTITY_IDS: [&str; 6] =
    ["identities.a", "identities.b", "identities.c", "identities.d", "identities.e", "identities.f"];
pub const EQUATIONAL_IDS: [&str; 3] = ["equational.g", "equational.identities", "equational.equivalence"];
pub const UPPER_BOUND_ID: &str = "join.upper-bound";

/// A model viewed as the algebra `⟨A, ·, →, ⊔, 1⟩`; its join table is always
/// present. Checks on this view never consult the stored relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiDirectoid {
    model: Model,
}

impl QuasiDirectoid {
    pub fn new(model: Model) -> Result<Self> {
        if model.join_table().is_none() {
            return Err(Error::MissingJoin);
        }
        Ok(QuasiDirectoid { model })
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn into_model(self) -> Model {
        self.model
    }

    pub fn size(&self) -> usize {
        self.model.size()
    }

    pub fn join_table(&self) -> &OpTable {
        self.model.join_table().expect("checked at construction")
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_table().get(x, y)
    }

    /// `x ⪯ y` encoded as `x ⊔ y = y`.
    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }
}

/// Admissible values of `x ⊔ y`: `{y}` if `x ⪯ y`, else `{x}` if `y ⪯ x`,
/// else the upper cone `U⪯(x,y)`. The first case wins when both hold.
pub fn quasi_join_candidates(m: &Model, x: usize, y: usize) -> Result<SubsetMask> {
    m.universe().check(x)?;
    m.universe().check(y)?;
    if !is_preordered_rrs(m) {
        return Err(Error::Precondition("not a pre-ordered residuated system".into()));
    }
    candidates_unchecked(m, x, y)
}

fn candidates_unchecked(m: &Model, x: usize, y: usize) -> Result<SubsetMask> {
    let n = m.size();
    if m.rel(x, y) {
        SubsetMask::singleton(n, y)
    } else if m.rel(y, x) {
        SubsetMask::singleton(n, x)
    } else {
        upper_cone(m, x, y)
    }
}

/// Every join table allowed by the construction, with the shared choice
/// `x ⊔ y = y ⊔ x ∈ U⪯(x,y)` for each unordered incomparable pair. The result
/// count is the product of the cone sizes over those pairs; output is sorted
/// by join table.
pub fn build_quasi_directoids(m: &Model) -> Result<Vec<QuasiDirectoid>> {
    if !is_preordered_rrs(m) {
        return Err(Error::Precondition("not a pre-ordered residuated system".into()));
    }
    let n = m.size();
    let mut base = OpTable::from_fn(n, |_, _| 0);
    let mut free: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if m.rel(x, y) {
                base.set(x, y, y);
            } else if m.rel(y, x) {
                base.set(x, y, x);
            } else if x < y {
                free.push((x, y, candidates_unchecked(m, x, y)?.to_indices()));
            }
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; free.len()];
    loop {
        let mut join = base.clone();
        for (&(x, y, ref cands), &c) in free.iter().zip(&choice) {
            join.set(x, y, cands[c]);
            join.set(y, x, cands[c]);
        }
        out.push(QuasiDirectoid::new(m.clone().with_join(join)?)?);
        // odometer, last pair fastest
        let mut i = free.len();
        loop {
            if i == 0 {
                out.sort_by(|a, b| a.join_table().cmp(b.join_table()));
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < free[i].2.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// `x ⪯ x⊔y` and `y ⪯ x⊔y` with respect to the model's stored relation.
pub fn check_join_upper_bound(q: &QuasiDirectoid) -> PropertyReport {
    let m = q.model();
    let mut r = PropertyReport::new();
    r.check(UPPER_BOUND_ID, scan2(q.size(), |x, y| m.rel(x, q.join(x, y)) && m.rel(y, q.join(x, y))));
    r
}

/// Axioms a) `x⊔x = x`, b) `x⊔(x⊔y) = y⊔(x⊔y) = x⊔y`, c) `x⊔((x⊔y)⊔z) = (x⊔y)⊔z`.
pub fn is_quasi_directoid(q: &QuasiDirectoid) -> PropertyReport {
    let n = q.size();
    let j = |x, y| q.join(x, y);
    let mut r = PropertyReport::new();
    r.check(QD_IDS[0], scan1(n, |x| j(x, x) == x));
    r.check(QD_IDS[1], scan2(n, |x, y| j(x, j(x, y)) == j(x, y) && j(y, j(x, y)) == j(x, y)));
    r.check(QD_IDS[2], scan3(n, |x, y, z| j(x, j(j(x, y), z)) == j(j(x, y), z)));
    r
}

fn check_e_f(q: &QuasiDirectoid) -> PropertyReport {
    let m = q.model();
    let u = m.unit();
    let mut r = PropertyReport::new();
    let monoid = check_commutative_monoid(m);
    r.check(RQD_IDS[0], monoid.failures().next().and_then(|s| s.witness.clone()));
    r.check(RQD_IDS[1], scan1(q.size(), |x| q.join(x, u) == u));
    r
}

/// `(x·y)⊔z = z ⇔ x⊔(y→z) = y→z`.
fn axiom_g_violation(q: &QuasiDirectoid) -> Option<Vec<usize>> {
    let m = q.model();
    scan3(q.size(), |x, y, z| q.le(m.mul(x, y), z) == q.le(x, m.arrow(y, z)))
}

/// Quasi-directoid axioms plus e) commutative monoid, f) `x⊔1 = 1`, g) equational residuation.
pub fn is_residuated_quasi_directoid(q: &QuasiDirectoid) -> PropertyReport {
    let mut r = is_quasi_directoid(q);
    r.extend(check_e_f(q));
    r.check(RQD_IDS[2], axiom_g_violation(q));
    r
}

pub fn is_rqd(q: &QuasiDirectoid) -> bool {
    is_residuated_quasi_directoid(q).all_hold()
}

/// `x ⪯_I y ⇔ x⊔y = y`.
pub fn induced_relation(q: &QuasiDirectoid) -> BinRel {
    BinRel::from_fn(q.size(), |x, y| q.le(x, y))
}

/// The relational system `⟨A, ·, →, 1, ⪯_I⟩` (join kept). Fails unless `q` is
/// a residuated quasi-directoid; the result is checked to be a pre-ordered RRS.
pub fn induced_system(q: &QuasiDirectoid) -> Result<Model> {
    let report = is_residuated_quasi_directoid(q);
    if let Some(f) = report.failures().next() {
        return Err(Error::Precondition(format!(
            "not a residuated quasi-directoid: {} fails at {:?}",
            f.id, f.witness
        )));
    }
    let m = q.model().clone().with_rel(induced_relation(q))?;
    if !is_preordered_rrs(&m) {
        return Err(Error::Postcondition("induced system is not a pre-ordered residuated system".into()));
    }
    Ok(m)
}

/// The six inequalities (a)–(f), each `u ⪯ v` evaluated as `u⊔v = v`.
/// Residuation is not assumed.
pub fn check_residuation_identities(q: &QuasiDirectoid) -> PropertyReport {
    let m = q.model();
    let n = q.size();
    let u = m.unit();
    let le = |a, b| q.le(a, b);
    let mul = |a, b| m.mul(a, b);
    let to = |a, b| m.arrow(a, b);
    let j = |a, b| q.join(a, b);
    let mut r = PropertyReport::new();
    r.check(IDENTITY_IDS[0], scan2(n, |x, y| le(mul(to(x, y), x), y)));
    r.check(IDENTITY_IDS[1], scan3(n, |x, y, z| le(to(mul(x, y), z), to(x, to(y, z)))));
    r.check(IDENTITY_IDS[2], scan3(n, |x, y, z| le(to(x, to(y, z)), to(mul(x, y), z))));
    r.check(IDENTITY_IDS[3], scan2(n, |x, y| le(to(x, j(x, y)), u)));
    r.check(IDENTITY_IDS[4], scan2(n, |x, y| le(u, to(x, j(x, y)))));
    r.check(IDENTITY_IDS[5], scan3(n, |x, y, z| le(mul(x, z), mul(j(x, y), z))));
    r
}

/// For an algebra meeting every axiom except g): reports whether g) holds,
/// whether identities (a)–(f) hold, and whether the two verdicts agree.
pub fn check_equational_equivalence(q: &QuasiDirectoid) -> PropertyReport {
    let mut pre = is_quasi_directoid(q);
    pre.extend(check_e_f(q));
    if let Some(f) = pre.failures().next() {
        return PropertyReport::all_not_applicable(&EQUATIONAL_IDS, format!("axiom {} fails", f.id).as_str());
    }
    let g = axiom_g_violation(q);
    let identities = check_residuation_identities(q);
    let g_holds = g.is_none();
    let id_holds = identities.all_hold();
    let mut r = PropertyReport::new();
    r.check(EQUATIONAL_IDS[0], g);
    r.check(EQUATIONAL_IDS[1], identities.failures().next().map(|s| s.witness.clone().unwrap_or_default()));
    r.check_bool(EQUATIONAL_IDS[2], g_holds == id_holds);
    r
}
