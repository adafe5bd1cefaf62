//! Generators for the factors of a model: commutative monoid tables,
//! relations, quasi-joins, and arrows solved by column matching.

use itertools::Itertools;

use super::{ArrowChoice, ModelClass};
use crate::model::{Model, OpTable};
use crate::relation::BinRel;

const UNSET: u8 = u8::MAX;

/// One independent unit of work: a commutative monoid table with its unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Shard {
    pub size: usize,
    pub unit: usize,
    pub mul: Vec<u8>,
}

impl Shard {
    /// The absorbing element, if any.
    pub fn zero(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&z| (0..n).all(|x| self.mul[z * n + x] as usize == z && self.mul[x * n + z] as usize == z))
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

fn assoc_ok(n: usize, t: &[u8]) -> bool {
    let at = |x: u8, y: u8| t[x as usize * n + y as usize];
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            let xy = at(x, y);
            if xy == UNSET {
                continue;
            }
            for z in 0..n as u8 {
                let yz = at(y, z);
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (at(xy, z), at(x, yz));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Every commutative monoid table on `{0..n-1}` with unit 0, in lexicographic order.
pub(crate) fn unit_zero_monoids(n: usize) -> Vec<Vec<u8>> {
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x] = x as u8;
        t[x * n] = x as u8;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    fill(n, &cells, 0, &mut t, &mut out);
    out
}

fn fill(n: usize, cells: &[(usize, usize)], i: usize, t: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if i == cells.len() {
        out.push(t.clone());
        return;
    }
    let (x, y) = cells[i];
    for v in 0..n as u8 {
        t[x * n + y] = v;
        t[y * n + x] = v;
        if assoc_ok(n, t) {
            fill(n, cells, i + 1, t, out);
        }
    }
    t[x * n + y] = UNSET;
    t[y * n + x] = UNSET;
}

fn relabel_table(n: usize, t: &[u8], p: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            out[p[x] * n + p[y]] = p[t[x * n + y] as usize] as u8;
        }
    }
    out
}

/// Shards for the given mode. Up to isomorphism: one monoid per isomorphism
/// class with the unit at 0 (the least relabeling fixing 0). Labeled: every
/// commutative monoid with every unit.
pub(crate) fn shards(n: usize, up_to_iso: bool) -> Vec<Shard> {
    let monoids = unit_zero_monoids(n);
    if up_to_iso {
        let fixing_zero: Vec<Vec<usize>> =
            (1..n).permutations(n - 1).map(|p| std::iter::once(0).chain(p).collect()).collect();
        monoids
            .into_iter()
            .filter(|t| fixing_zero.iter().all(|p| relabel_table(n, t, p) >= *t))
            .map(|mul| Shard { size: n, unit: 0, mul })
            .collect()
    } else {
        let mut out: Vec<Shard> = (0..n)
            .flat_map(|u| {
                let mut swap: Vec<usize> = (0..n).collect();
                swap.swap(0, u);
                monoids.iter().map(move |t| Shard { size: n, unit: u, mul: relabel_table(n, t, &swap) })
            })
            .collect();
        out.sort();
        out
    }
}

fn is_transitive(rows: &[u64]) -> bool {
    rows.iter().all(|&r| {
        let mut reach = r;
        let mut bits = r;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            reach |= rows[y];
        }
        reach == r
    })
}

fn is_antisymmetric(rows: &[u64]) -> bool {
    (0..rows.len()).all(|x| (0..rows.len()).all(|y| x == y || rows[x] >> y & 1 == 0 || rows[y] >> x & 1 == 0))
}

/// Relations with `(x, unit) ∈ R` for all `x`, filtered by the class. Classes
/// with a join use pre-orders (the induced relation of a quasi-join with top).
pub(crate) fn relations(n: usize, unit: usize, class: ModelClass) -> Vec<Vec<u64>> {
    let reflexive =
        matches!(class, ModelClass::PreorderedRrs | ModelClass::ResiduatedQuasiDirectoid | ModelClass::PreAxiomsMinusG);
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| y != unit && !(reflexive && x == y))
        .collect();
    let base: Vec<u64> = (0..n).map(|x| 1u64 << unit | if reflexive { 1 << x } else { 0 }).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut rows = base.clone();
        for (k, &(x, y)) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[x] |= 1 << y;
            }
        }
        let keep = match class {
            ModelClass::Rrs | ModelClass::RrsWithZero => true,
            ModelClass::AntisymRrs => is_antisymmetric(&rows),
            _ => is_transitive(&rows),
        };
        if keep {
            out.push(rows);
        }
    }
    out
}

/// Every quasi-join with top `unit` whose induced relation is the pre-order
/// `rows`: `x⊔y = y` on related pairs, and on the others some upper bound
/// other than `y`. Only axiom c) needs checking afterwards.
pub(crate) fn quasi_joins(n: usize, rows: &[u64]) -> Vec<Vec<u8>> {
    let le = |x: usize, y: usize| rows[x] >> y & 1 == 1;
    let mut base = vec![0u8; n * n];
    let mut free: Vec<(usize, Vec<u8>)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if le(x, y) {
                base[x * n + y] = y as u8;
            } else {
                let opts = (0..n).filter(|&w| w != y && le(x, w) && le(y, w)).map(|w| w as u8).collect();
                free.push((x * n + y, opts));
            }
        }
    }
    if free.is_empty() {
        return if axiom_c(n, &base) { vec![base] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for choice in free.iter().map(|(_, o)| o.iter().copied()).multi_cartesian_product() {
        let mut j = base.clone();
        for ((cell, _), v) in free.iter().zip(choice) {
            j[*cell] = v;
        }
        if axiom_c(n, &j) {
            out.push(j);
        }
    }
    out
}

fn axiom_c(n: usize, j: &[u8]) -> bool {
    let at = |x: usize, y: usize| j[x * n + y] as usize;
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = at(x, y);
            (0..n).all(|z| {
                let w = at(xy, z);
                at(x, w) == w
            })
        })
    })
}

/// Candidates for each `y→z`: the elements `w` whose column
/// `{x : (x,w) ∈ R}` equals `{x : (x·y, z) ∈ R}`. `None` when a cell has none.
pub(crate) fn arrow_candidates(n: usize, mul: &[u8], rows: &[u64]) -> Option<Vec<Vec<u8>>> {
    let mut cols = vec![0u64; n];
    for (x, &r) in rows.iter().enumerate() {
        for (w, c) in cols.iter_mut().enumerate() {
            *c |= (r >> w & 1) << x;
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for y in 0..n {
        for z in 0..n {
            let target = (0..n).fold(0u64, |acc, x| acc | (rows[mul[x * n + y] as usize] >> z & 1) << x);
            let cands: Vec<u8> = (0..n).filter(|&w| cols[w] == target).map(|w| w as u8).collect();
            if cands.is_empty() {
                return None;
            }
            out.push(cands);
        }
    }
    Some(out)
}

/// Calls `f` on every model of `class` whose monoid is `shard`.
pub(crate) fn models_in_shard(shard: &Shard, class: ModelClass, arrows: ArrowChoice, f: &mut dyn FnMut(Model)) {
    let n = shard.size();
    let zero = shard.zero();
    if class == ModelClass::RrsWithZero && zero.is_none() {
        return;
    }
    let mul = OpTable::from_bytes(n, shard.mul.clone());
    let build = |arrow: Vec<u8>, rows: &[u64], join: Option<&Vec<u8>>| {
        let mut m =
            Model::new(mul.clone(), OpTable::from_bytes(n, arrow), shard.unit, BinRel::from_rows(n, rows.to_vec()))
                .expect("generated tables are in range");
        if class == ModelClass::RrsWithZero {
            m = m.with_zero(zero.expect("checked above")).expect("in range");
        }
        if let Some(j) = join {
            m = m.with_join(OpTable::from_bytes(n, j.clone())).expect("same size");
        }
        m
    };
    for rows in relations(n, shard.unit, class) {
        let joins = if class.has_join() { quasi_joins(n, &rows) } else { Vec::new() };
        let arrow_tables: Vec<Vec<u8>> = if class == ModelClass::PreAxiomsMinusG {
            if joins.is_empty() {
                continue;
            }
            (0..n * n).map(|_| 0..n as u8).multi_cartesian_product().collect()
        } else {
            match arrow_candidates(n, &shard.mul, &rows) {
                None => continue,
                Some(c) => match arrows {
                    ArrowChoice::Least => vec![c.iter().map(|v| v[0]).collect()],
                    ArrowChoice::All => c.into_iter().multi_cartesian_product().collect(),
                },
            }
        };
        if class.has_join() {
            for j in &joins {
                for a in &arrow_tables {
                    f(build(a.clone(), &rows, Some(j)));
                }
            }
        } else {
            for a in arrow_tables {
                f(build(a, &rows, None));
            }
        }
    }
}
