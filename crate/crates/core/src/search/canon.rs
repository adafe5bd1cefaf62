//! Canonical forms by brute-force permutation minimization.

use std::cmp::Ordering;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Model, OpTable};
use crate::relation::BinRel;

/// Sizes above this are not canonicalized (n! relabelings).
pub const MAX_CANON_SIZE: usize = 8;

/// The lexicographically least serialization of a model over all relabelings
/// of its universe (constants carried along).
///
/// Layout: `[n, unit, zero + 1 or 0, has_join, mul.., arrow.., rel.., join..]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

type PermPair = (Vec<u8>, Vec<u8>);

/// Permutation tables `(p, p⁻¹)` for each size, `p` mapping old index to new.
fn permutations(n: usize) -> &'static [PermPair] {
    static CACHE: OnceLock<Vec<Vec<PermPair>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=MAX_CANON_SIZE)
            .map(|k| {
                (0..k)
                    .permutations(k)
                    .map(|p| {
                        let mut inv = vec![0u8; k];
                        for (i, &v) in p.iter().enumerate() {
                            inv[v] = i as u8;
                        }
                        (p.into_iter().map(|v| v as u8).collect(), inv)
                    })
                    .collect()
            })
            .collect()
    });
    &cache[n]
}

/// Writes the serialization of `m` relabeled by `p` into `out`, comparing
/// against `best` as it goes. Stops early once it is known to be larger.
fn write_relabeled(m: &Model, p: &[u8], inv: &[u8], best: Option<&[u8]>, out: &mut Vec<u8>) -> Ordering {
    out.clear();
    let n = m.size();
    let mut ord = if best.is_some() { Ordering::Equal } else { Ordering::Less };
    let mut push = |out: &mut Vec<u8>, b: u8| -> bool {
        if ord == Ordering::Equal {
            ord = b.cmp(&best.unwrap()[out.len()]);
            if ord == Ordering::Greater {
                return false;
            }
        }
        out.push(b);
        true
    };
    let header = [n as u8, p[m.unit()], m.zero().map_or(0, |z| p[z] + 1), m.join_table().is_some() as u8];
    for b in header {
        if !push(out, b) {
            return Ordering::Greater;
        }
    }
    let tables: [Option<&OpTable>; 2] = [Some(m.mul_table()), Some(m.arrow_table())];
    for t in tables.into_iter().flatten() {
        for i in 0..n {
            for j in 0..n {
                if !push(out, p[t.get(inv[i] as usize, inv[j] as usize)]) {
                    return Ordering::Greater;
                }
            }
        }
    }
    let rel = m.relation();
    for i in 0..n {
        for j in 0..n {
            if !push(out, rel.get(inv[i] as usize, inv[j] as usize) as u8) {
                return Ordering::Greater;
            }
        }
    }
    if let Some(t) = m.join_table() {
        for i in 0..n {
            for j in 0..n {
                if !push(out, p[t.get(inv[i] as usize, inv[j] as usize)]) {
                    return Ordering::Greater;
                }
            }
        }
    }
    ord
}

fn minimize(m: &Model) -> (CanonicalForm, usize) {
    let n = m.size();
    assert!(n <= MAX_CANON_SIZE, "canonical forms are limited to size {MAX_CANON_SIZE}");
    let perms = permutations(n);
    let mut best: Vec<u8> = Vec::new();
    let mut best_idx = 0;
    let mut buf = Vec::new();
    for (idx, (p, inv)) in perms.iter().enumerate() {
        let cmp = write_relabeled(m, p, inv, (idx > 0).then_some(best.as_slice()), &mut buf);
        if cmp == Ordering::Less {
            std::mem::swap(&mut best, &mut buf);
            best_idx = idx;
        }
    }
    (CanonicalForm(best), best_idx)
}

/// The serialization of `m` as labeled, in the canonical-form layout.
pub(crate) fn serialize(m: &Model) -> Vec<u8> {
    let id: Vec<u8> = (0..m.size() as u8).collect();
    let mut out = Vec::new();
    write_relabeled(m, &id, &id, None, &mut out);
    out
}

/// Canonical form of `m`; equal for two models iff they are isomorphic by a
/// bijection preserving all operations, the relation and the constants.
pub fn canonicalize(m: &Model) -> CanonicalForm {
    minimize(m).0
}

/// The relabeled copy of `m` whose serialization is the canonical form.
pub fn canonical_model(m: &Model) -> (Model, CanonicalForm) {
    let (form, idx) = minimize(m);
    let (p, _) = &permutations(m.size())[idx];
    let p: Vec<usize> = p.iter().map(|&v| v as usize).collect();
    (relabel(m, &p).expect("valid permutation"), form)
}

/// Applies the bijection `p` (old index → new index) to every component of `m`.
pub fn relabel(m: &Model, p: &[usize]) -> Result<Model> {
    let n = m.size();
    let mut seen = vec![false; n];
    if p.len() != n {
        return Err(Error::DimensionMismatch(format!("permutation of length {} for size {n}", p.len())));
    }
    for &v in p {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition("not a permutation".into()));
        }
    }
    let mut inv = vec![0; n];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    let map = |t: &OpTable| OpTable::from_fn(n, |i, j| p[t.get(inv[i], inv[j])]);
    let rel = BinRel::from_fn(n, |i, j| m.rel(inv[i], inv[j]));
    let mut out = Model::new(map(m.mul_table()), map(m.arrow_table()), p[m.unit()], rel)?;
    if let Some(z) = m.zero() {
        out = out.with_zero(p[z])?;
    }
    if let Some(j) = m.join_table() {
        out = out.with_join(map(j))?;
    }
    Ok(out)
}
