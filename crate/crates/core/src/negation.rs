//! Systems with an absorbing constant `0` and the negation `x' = x→0`.

use crate::error::{Error, Result};
use crate::model::Model;
use crate::preorder::is_preordered_rrs;
use crate::quotient::theta;
use crate::relation::{is_antisymmetric, is_reflexive};
use crate::report::{scan1, scan2, PropertyReport};
use crate::rrs::is_rrs;

pub const ZERO_IDS: [&str; 5] = ["zero.bottom", "negation.a", "negation.b", "negation.c", "negation.d"];
pub const ANTISYM_ZERO_IDS: [&str; 2] = ["antisym-zero.arrow", "antisym-zero.corollary"];
pub const PREORDER_NEGATION_IDS: [&str; 6] = [
    "preorder-negation.a",
    "preorder-negation.b",
    "preorder-negation.c",
    "preorder-negation.d",
    "preorder-negation.e",
    "preorder-negation.f",
];
pub const DOUBLE_NEGATION_IDS: [&str; 2] = ["double-negation.i", "double-negation.ii"];
pub const TRIPLE_NEGATION_ID: &str = "preorder-negation.triple-theta";

/// A model with a designated `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroedModel {
    model: Model,
    zero: usize,
}

impl ZeroedModel {
    pub fn new(model: Model) -> Result<Self> {
        let zero = model.zero().ok_or(Error::MissingZero)?;
        Ok(ZeroedModel { model, zero })
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.model.arrow(x, self.zero)
    }
}

impl TryFrom<Model> for ZeroedModel {
    type Error = Error;

    fn try_from(m: Model) -> Result<Self> {
        ZeroedModel::new(m)
    }
}

/// `0·x = x·0 = 0` for every `x`.
pub fn check_zero_absorbing(m: &ZeroedModel) -> PropertyReport {
    let z = m.zero;
    let mm = &m.model;
    let mut r = PropertyReport::new();
    r.check("zero.absorbing", scan1(mm.size(), |x| mm.mul(z, x) == z && mm.mul(x, z) == z));
    r
}

fn absorbing(m: &ZeroedModel) -> bool {
    check_zero_absorbing(m).all_hold()
}

/// `x' = x→0`.
pub fn negate(m: &ZeroedModel, x: usize) -> Result<usize> {
    m.model.universe().check(x)?;
    Ok(m.neg(x))
}

/// RRS with absorbing `0` and reflexive relation: `0` is below everything, and
/// items (a)–(d) about `1'`, `0'`, `x''` and `x·x'`.
pub fn verify_zero_props(m: &ZeroedModel) -> PropertyReport {
    let mm = &m.model;
    if !(is_rrs(mm) && absorbing(m) && is_reflexive(mm.relation())) {
        return PropertyReport::all_not_applicable(
            &ZERO_IDS,
            "requires an RRS with absorbing 0 and reflexive relation",
        );
    }
    let n = mm.size();
    let (z, u) = (m.zero, mm.unit());
    let le = |x, y| mm.rel(x, y);
    let neg = |x| m.neg(x);
    let mut r = PropertyReport::new();
    r.check(ZERO_IDS[0], scan1(n, |y| le(z, y)));
    r.check_bool(ZERO_IDS[1], le(z, neg(u)) && le(neg(u), z));
    r.check_bool(ZERO_IDS[2], le(u, neg(z)) && le(neg(z), u));
    r.check(ZERO_IDS[3], scan1(n, |x| le(x, neg(neg(x)))));
    r.check(ZERO_IDS[4], scan1(n, |x| le(mm.mul(x, neg(x)), z)));
    r
}

/// With `R` also antisymmetric: `0→y = 1` for all `y`, and `0' = 1`, `1' = 0`, `x·x' = 0`.
pub fn verify_antisym_zero_props(m: &ZeroedModel) -> PropertyReport {
    let mm = &m.model;
    let rel = mm.relation();
    if !(is_rrs(mm) && absorbing(m) && is_reflexive(rel) && is_antisymmetric(rel)) {
        return PropertyReport::all_not_applicable(
            &ANTISYM_ZERO_IDS,
            "requires an RRS with absorbing 0 and reflexive antisymmetric relation",
        );
    }
    let n = mm.size();
    let (z, u) = (m.zero, mm.unit());
    let mut r = PropertyReport::new();
    r.check(ANTISYM_ZERO_IDS[0], scan1(n, |y| mm.arrow(z, y) == u));
    let corollary = if m.neg(z) != u || m.neg(u) != z { Some(vec![]) } else { scan1(n, |x| mm.mul(x, m.neg(x)) == z) };
    r.check(ANTISYM_ZERO_IDS[1], corollary);
    r
}

/// Negation in a pre-ordered RRS with `0`: items (a)–(f), plus `x' θ x'''`.
pub fn verify_preorder_negation(m: &ZeroedModel) -> PropertyReport {
    let mm = &m.model;
    let mut ids = PREORDER_NEGATION_IDS.to_vec();
    ids.push(TRIPLE_NEGATION_ID);
    if !(is_preordered_rrs(mm) && absorbing(m)) {
        return PropertyReport::all_not_applicable(&ids, "requires a pre-ordered RRS with absorbing 0");
    }
    let n = mm.size();
    let le = |x, y| mm.rel(x, y);
    let neg = |x| m.neg(x);
    let to = |x, y| mm.arrow(x, y);
    let mul = |x, y| mm.mul(x, y);
    let mut r = PropertyReport::new();
    r.check(PREORDER_NEGATION_IDS[0], scan2(n, |x, y| !le(x, y) || le(neg(y), neg(x))));
    r.check(
        PREORDER_NEGATION_IDS[1],
        scan1(n, |x| {
            let (x1, x2, x3) = (neg(x), neg(neg(x)), neg(neg(neg(x))));
            le(x, x2) && le(x1, x3) && le(x3, x1)
        }),
    );
    r.check(
        PREORDER_NEGATION_IDS[2],
        scan2(n, |x, y| le(neg(mul(x, y)), to(x, neg(y))) && le(to(x, neg(y)), neg(mul(x, y)))),
    );
    r.check(
        PREORDER_NEGATION_IDS[3],
        scan2(n, |x, y| le(to(x, neg(y)), to(y, neg(x))) && le(to(y, neg(x)), to(x, neg(y)))),
    );
    r.check(PREORDER_NEGATION_IDS[4], scan2(n, |x, y| le(mul(to(x, y), neg(y)), neg(x))));
    r.check(PREORDER_NEGATION_IDS[5], scan2(n, |x, y| le(to(x, y), to(neg(y), neg(x)))));
    let p = theta(mm).expect("relation is a pre-order");
    r.check(TRIPLE_NEGATION_ID, scan1(n, |x| p.same(neg(x), neg(neg(neg(x))))));
    r
}

/// `x'' = x` for every `x`.
pub fn satisfies_double_negation(m: &ZeroedModel) -> bool {
    double_negation_witness(m).is_none()
}

pub fn double_negation_witness(m: &ZeroedModel) -> Option<usize> {
    m.model.elements().find(|&x| m.neg(m.neg(x)) != x)
}

/// Under the double-negation law: `x→y θ (x·y')'` and `y'→x' ⪯ x→y`.
pub fn verify_double_negation_props(m: &ZeroedModel) -> PropertyReport {
    let mm = &m.model;
    if !(is_preordered_rrs(mm) && absorbing(m) && satisfies_double_negation(m)) {
        return PropertyReport::all_not_applicable(
            &DOUBLE_NEGATION_IDS,
            "requires a pre-ordered RRS with absorbing 0 satisfying x'' = x",
        );
    }
    let n = mm.size();
    let le = |x, y| mm.rel(x, y);
    let neg = |x| m.neg(x);
    let to = |x, y| mm.arrow(x, y);
    let mut r = PropertyReport::new();
    r.check(
        DOUBLE_NEGATION_IDS[0],
        scan2(n, |x, y| {
            let rhs = neg(mm.mul(x, neg(y)));
            le(to(x, y), rhs) && le(rhs, to(x, y))
        }),
    );
    r.check(DOUBLE_NEGATION_IDS[1], scan2(n, |x, y| le(to(neg(y), neg(x)), to(x, y))));
    r
}

/// Every negation statement, in one report.
pub fn verify_all(m: &ZeroedModel) -> PropertyReport {
    let mut r = check_zero_absorbing(m);
    r.extend(verify_zero_props(m))
        .extend(verify_antisym_zero_props(m))
        .extend(verify_preorder_negation(m))
        .extend(verify_double_negation_props(m));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{b2, d5, g3, m1, p3};
    use crate::report::Status;

    fn zeroed(m: Model, z: usize) -> ZeroedModel {
        ZeroedModel::new(m.with_zero(z).unwrap()).unwrap()
    }

    #[test]
    fn absorbing_zero() {
        assert!(check_zero_absorbing(&zeroed(b2(), 0)).all_hold());
        assert!(check_zero_absorbing(&zeroed(g3(), 0)).all_hold());
        // 1·2 = 1 but 1·0 = 0 ≠ 1.
        let r = check_zero_absorbing(&zeroed(g3(), 1));
        assert_eq!(r.get("zero.absorbing").unwrap().witness, Some(vec![0]));
        assert_eq!(ZeroedModel::new(b2()), Err(Error::MissingZero));
    }

    #[test]
    fn negation_values() {
        let b = zeroed(b2(), 0);
        assert_eq!((negate(&b, 0).unwrap(), negate(&b, 1).unwrap()), (1, 0));
        let g = zeroed(g3(), 0);
        assert_eq!((negate(&g, 1).unwrap(), negate(&g, 0).unwrap()), (0, 2));
        assert_eq!(negate(&zeroed(m1(), 0), 0).unwrap(), 0);
        assert!(negate(&g, 3).is_err());
    }

    #[test]
    fn zero_props() {
        for m in [zeroed(b2(), 0), zeroed(g3(), 0), zeroed(d5(), 0)] {
            assert!(verify_zero_props(&m).all_hold());
            assert!(verify_antisym_zero_props(&m).all_hold());
            assert!(verify_preorder_negation(&m).all_hold());
        }
        for z in 0..3 {
            let r = verify_antisym_zero_props(&zeroed(p3(), z));
            assert!(r.statements().iter().all(|s| s.status == Status::NotApplicable));
        }
    }

    #[test]
    fn double_negation() {
        let b = zeroed(b2(), 0);
        assert!(satisfies_double_negation(&b));
        assert!(verify_double_negation_props(&b).all_hold());
        let g = zeroed(g3(), 0);
        assert_eq!(double_negation_witness(&g), Some(1));
        assert_eq!(verify_double_negation_props(&g).status("double-negation.i"), Some(Status::NotApplicable));
        assert!(satisfies_double_negation(&zeroed(m1(), 0)));
    }
}
