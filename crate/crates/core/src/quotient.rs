//! The equivalence θ (`x ⪯ y` and `y ⪯ x`), its congruence properties, and the
//! quotient by θ, which is checked to be a pocrim.

use serde::Serialize;

use crate::directoid::{induced_relation, is_residuated_quasi_directoid, QuasiDirectoid};
use crate::error::{Error, Result};
use crate::model::{Model, OpTable};
use crate::relation::{self, is_partial_order, is_preorder, BinRel};
use crate::report::{scan1, scan3, PropertyReport};
use crate::rrs::check_rrs;

pub const THETA_IDS: [&str; 3] = ["theta.join-compatible", "theta.ops-compatible", "theta.implication"];
pub const POCRIM_IDS: [&str; 3] = ["pocrim.rrs", "pocrim.partial-order", "pocrim.unit-top"];

/// Class id per element. Classes are numbered in order of their least member,
/// so the representative of class `c` is the `c`-th distinct minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ThetaPartition {
    class_of: Vec<usize>,
    representatives: Vec<usize>,
}

impl ThetaPartition {
    /// Builds the partition of an equivalence relation; `None` if `eq` is not one.
    pub fn from_equivalence(eq: &BinRel) -> Option<Self> {
        let symmetric = eq.pairs().all(|(x, y)| eq.get(y, x));
        if !(is_preorder(eq) && symmetric) {
            return None;
        }
        let n = eq.size();
        let mut class_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for x in 0..n {
            if class_of[x] == usize::MAX {
                let c = representatives.len();
                representatives.push(x);
                for y in x..n {
                    if eq.get(x, y) {
                        class_of[y] = c;
                    }
                }
            }
        }
        Some(ThetaPartition { class_of, representatives })
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.representatives[class]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.class_of.len()).filter(move |&x| self.class_of[x] == class)
    }
}

fn symmetric_part(r: &BinRel) -> BinRel {
    BinRel::from_fn(r.size(), |x, y| r.get(x, y) && r.get(y, x))
}

/// θ from the equational view: `x⊔y = y` and `y⊔x = x`.
pub fn theta_equational(q: &QuasiDirectoid) -> Result<ThetaPartition> {
    ThetaPartition::from_equivalence(&symmetric_part(&induced_relation(q))).ok_or(Error::NotPreorder)
}

/// θ of a model. The relational view is used when the relation is a pre-order,
/// the equational view when a join table is present; when both apply they
/// must produce the same partition.
pub fn theta(m: &Model) -> Result<ThetaPartition> {
    let relational = is_preorder(m.relation())
        .then(|| ThetaPartition::from_equivalence(&symmetric_part(m.relation())).expect("pre-order"));
    let equational = match m.join_table() {
        Some(_) => Some(theta_equational(&QuasiDirectoid::new(m.clone())?)?),
        None => None,
    };
    match (relational, equational) {
        (Some(a), Some(b)) => {
            if let Some((x, y)) = first_disagreement(&a, &b) {
                return Err(Error::ThetaViewDisagreement(x, y));
            }
            Ok(a)
        }
        (Some(p), None) | (None, Some(p)) => Ok(p),
        (None, None) => Err(Error::NotPreorder),
    }
}

fn first_disagreement(a: &ThetaPartition, b: &ThetaPartition) -> Option<(usize, usize)> {
    let n = a.class_of.len();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| a.same(x, y) != b.same(x, y))
}

fn compatibility_violation(n: usize, p: &ThetaPartition, op: impl Fn(usize, usize) -> usize) -> Option<Vec<usize>> {
    scan3(n, |x, y, z| !p.same(x, y) || (p.same(op(x, z), op(y, z)) && p.same(op(z, x), op(z, y))))
}

/// Reports whether θ respects `⊔`, whether it respects `·` and `→`, and that the
/// former implies the latter. Witnesses are `(x, y, z)` with `x θ y`.
pub fn is_theta_congruence(q: &QuasiDirectoid) -> PropertyReport {
    let pre = is_residuated_quasi_directoid(q);
    if let Some(f) = pre.failures().next() {
        return PropertyReport::all_not_applicable(&THETA_IDS, &format!("axiom {} fails", f.id));
    }
    let p = theta_equational(q).expect("induced relation of a residuated quasi-directoid is a pre-order");
    let m = q.model();
    let n = q.size();
    let join = compatibility_violation(n, &p, |a, b| q.join(a, b));
    let ops = compatibility_violation(n, &p, |a, b| m.mul(a, b))
        .or_else(|| compatibility_violation(n, &p, |a, b| m.arrow(a, b)));
    let implication = join.is_some() || ops.is_none();
    let mut r = PropertyReport::new();
    r.check(THETA_IDS[0], join);
    r.check(THETA_IDS[1], ops.clone());
    r.check(THETA_IDS[2], (!implication).then(|| ops.unwrap_or_default()));
    r
}

/// `A/θ` with the class map of the original elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    pub model: Model,
    pub classes: Vec<usize>,
}

fn quotient_table(
    p: &ThetaPartition,
    n: usize,
    op: &'static str,
    f: impl Fn(usize, usize) -> usize,
) -> Result<OpTable> {
    let k = p.num_classes();
    let table = OpTable::from_fn(k, |a, b| p.class_of(f(p.representative(a), p.representative(b))));
    for x in 0..n {
        for y in 0..n {
            if table.get(p.class_of(x), p.class_of(y)) != p.class_of(f(x, y)) {
                return Err(Error::NotWellDefined { op, witness: vec![x, y] });
            }
        }
    }
    Ok(table)
}

/// The quotient of `q` by its θ. Requires θ to be a congruence of `⟨A, ⊔⟩`
/// and `p` to be that θ. Operations are read off the least member of each
/// class and validated against every member; the order on classes is
/// `[a] ≤ [b] ⇔ a ⪯ b` and must come out a partial order.
pub fn quotient(q: &QuasiDirectoid, p: &ThetaPartition) -> Result<Quotient> {
    let expected = theta_equational(q)?;
    if &expected != p {
        return Err(Error::PartitionMismatch);
    }
    let n = q.size();
    if let Some(w) = compatibility_violation(n, p, |a, b| q.join(a, b)) {
        return Err(Error::NotJoinCongruence(w));
    }
    let m = q.model();
    let mul = quotient_table(p, n, "mul", |a, b| m.mul(a, b))?;
    let arrow = quotient_table(p, n, "arrow", |a, b| m.arrow(a, b))?;
    let join = quotient_table(p, n, "join", |a, b| q.join(a, b))?;
    let k = p.num_classes();
    let rel = BinRel::from_fn(k, |a, b| q.le(p.representative(a), p.representative(b)));
    for x in 0..n {
        for y in 0..n {
            if rel.get(p.class_of(x), p.class_of(y)) != q.le(x, y) {
                return Err(Error::NotWellDefined { op: "order", witness: vec![x, y] });
            }
        }
    }
    if !is_partial_order(&rel) {
        return Err(Error::Postcondition("quotient order is not a partial order".into()));
    }
    let mut model = Model::new(mul, arrow, p.class_of(m.unit()), rel)?.with_join(join)?;
    if let Some(z) = m.zero() {
        model = model.with_zero(p.class_of(z))?;
    }
    Ok(Quotient { model, classes: p.classes().to_vec() })
}

/// An RRS whose relation is a partial order with the unit on top.
pub fn is_pocrim(m: &Model) -> PropertyReport {
    let rel = m.relation();
    let mut r = PropertyReport::new();
    r.check(POCRIM_IDS[0], check_rrs(m).failures().next().map(|s| s.witness.clone().unwrap_or_default()));
    let po = relation::reflexivity_witness(rel)
        .map(|x| vec![x])
        .or_else(|| relation::transitivity_witness(rel).map(|(x, y, z)| vec![x, y, z]))
        .or_else(|| relation::antisymmetry_witness(rel).map(|(x, y)| vec![x, y]));
    r.check(POCRIM_IDS[1], po);
    r.check(POCRIM_IDS[2], scan1(m.size(), |x| m.rel(x, m.unit())));
    r
}
