//! Pre-ordered residuated systems: membership, pre-order arithmetic, the
//! characterization by (a)–(d), and supremal elements under multiplication.

use crate::error::{Error, Result};
use crate::model::Model;
use crate::relation::{self, is_preorder, SubsetMask};
use crate::report::{scan1, scan2, scan3, PropertyReport};
use crate::rrs::{check_commutative_monoid, is_rrs, supremal_elements};

pub const ARITHMETIC_IDS: [&str; 9] = [
    "preorder.a",
    "preorder.b",
    "preorder.c",
    "preorder.d",
    "preorder.e",
    "preorder.f",
    "preorder.g",
    "preorder.h",
    "preorder.i",
];
pub const CHARACTERIZATION_IDS: [&str; 5] = [
    "characterization.a",
    "characterization.b",
    "characterization.c",
    "characterization.d",
    "characterization.equivalence",
];
pub const SUPREMAL_MUL_ID: &str = "supremal-mul";

/// An RRS whose relation is reflexive and transitive.
pub fn is_preordered_rrs(m: &Model) -> bool {
    is_preorder(m.relation()) && is_rrs(m)
}

/// The nine pre-order inequalities, each scanned over its full quantifier prefix.
pub fn verify_preorder_arithmetic(m: &Model) -> PropertyReport {
    if !is_preordered_rrs(m) {
        return PropertyReport::all_not_applicable(&ARITHMETIC_IDS, "not a pre-ordered residuated system");
    }
    let n = m.size();
    let le = |x, y| m.rel(x, y);
    let mul = |x, y| m.mul(x, y);
    let to = |x, y| m.arrow(x, y);
    let mut r = PropertyReport::new();
    r.check(ARITHMETIC_IDS[0], scan3(n, |x, y, z| !le(x, y) || (le(mul(x, z), mul(y, z)) && le(mul(z, x), mul(z, y)))));
    r.check(ARITHMETIC_IDS[1], scan3(n, |x, y, z| !le(x, y) || (le(to(y, z), to(x, z)) && le(to(z, x), to(z, y)))));
    r.check(ARITHMETIC_IDS[2], scan3(n, |x, y, z| le(mul(x, to(y, z)), to(y, mul(x, z)))));
    r.check(ARITHMETIC_IDS[3], scan3(n, |x, y, z| le(to(mul(x, y), z), to(x, to(y, z)))));
    r.check(ARITHMETIC_IDS[4], scan3(n, |x, y, z| le(to(x, to(y, z)), to(mul(x, y), z))));
    r.check(ARITHMETIC_IDS[5], scan3(n, |x, y, z| le(to(x, to(y, z)), to(y, to(x, z)))));
    r.check(ARITHMETIC_IDS[6], scan3(n, |x, y, z| le(mul(to(x, y), to(y, z)), to(x, z))));
    r.check(ARITHMETIC_IDS[7], scan2(n, |x, y| le(mul(x, y), y) && le(mul(x, y), x)));
    r.check(ARITHMETIC_IDS[8], scan3(n, |x, y, z| le(to(x, y), to(to(y, z), to(x, z)))));
    r
}

/// Reports conditions (a)–(d) of the characterization for an arbitrary
/// quintuple, plus whether their conjunction agrees with [`is_preordered_rrs`].
///
/// Witness shapes: (a) the first failing monoid law's witness; (b) `[x]` for
/// reflexivity or top, `[x, y, z]` for transitivity; (c) `[x, y, z]`; (d) `[x, y]`.
pub fn check_characterization(m: &Model) -> PropertyReport {
    let n = m.size();
    let u = m.unit();
    let rel = m.relation();
    let mut r = PropertyReport::new();

    let monoid = check_commutative_monoid(m);
    r.check(CHARACTERIZATION_IDS[0], monoid.failures().next().and_then(|s| s.witness.clone()));

    let b_violation = relation::reflexivity_witness(rel)
        .map(|x| vec![x])
        .or_else(|| relation::transitivity_witness(rel).map(|(x, y, z)| vec![x, y, z]))
        .or_else(|| scan1(n, |x| m.rel(x, u)));
    r.check(CHARACTERIZATION_IDS[1], b_violation);

    r.check(
        CHARACTERIZATION_IDS[2],
        scan3(n, |x, y, z| {
            let curried = m.arrow(x, m.arrow(y, z));
            let uncurried = m.arrow(m.mul(x, y), z);
            m.rel(uncurried, curried) && m.rel(curried, uncurried)
        }),
    );
    r.check(CHARACTERIZATION_IDS[3], scan2(n, |x, y| m.rel(x, y) == m.rel(u, m.arrow(x, y))));

    let conjunction = CHARACTERIZATION_IDS[..4].iter().all(|id| r.holds(id));
    r.check_bool(CHARACTERIZATION_IDS[4], conjunction == is_preordered_rrs(m));
    r
}

/// For every supremal element `k` of `Z`, checks that `a·k` is a supremal
/// element of `aZ = {a·z : z ∈ Z}`. Witness `[a, k]`.
pub fn check_supremal_multiplication(m: &Model, zs: &SubsetMask, a: usize) -> Result<PropertyReport> {
    m.universe().check(a)?;
    if zs.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !is_preordered_rrs(m) {
        return Ok(PropertyReport::all_not_applicable(&[SUPREMAL_MUL_ID], "not a pre-ordered residuated system"));
    }
    let mut r = PropertyReport::new();
    r.check(SUPREMAL_MUL_ID, supremal_mul_violation(m, zs, a)?);
    Ok(r)
}

fn supremal_mul_violation(m: &Model, zs: &SubsetMask, a: usize) -> Result<Option<Vec<usize>>> {
    let mut az = SubsetMask::empty(m.size());
    for z in zs.iter() {
        az.insert(m.mul(a, z));
    }
    let sup_az = supremal_elements(m, &az)?;
    Ok(supremal_elements(m, zs)?.iter().find(|&k| !sup_az.contains(m.mul(a, k))).map(|k| vec![a, k]))
}

/// [`check_supremal_multiplication`] over every nonempty `Z` and every `a`.
/// Witness `[a, k, z₁, z₂, ..]` listing the members of the failing `Z`.
pub fn check_supremal_multiplication_all(m: &Model) -> PropertyReport {
    if !is_preordered_rrs(m) {
        return PropertyReport::all_not_applicable(&[SUPREMAL_MUL_ID], "not a pre-ordered residuated system");
    }
    let n = m.size();
    let mut violation = None;
    'outer: for zs in SubsetMask::all(n).skip(1) {
        for a in 0..n {
            if let Some(mut w) = supremal_mul_violation(m, &zs, a).expect("Z is nonempty") {
                w.extend(zs.iter());
                violation = Some(w);
                break 'outer;
            }
        }
    }
    let mut r = PropertyReport::new();
    r.check(SUPREMAL_MUL_ID, violation);
    r
}
