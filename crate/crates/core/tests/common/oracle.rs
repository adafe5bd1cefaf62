//! Naive brute-force oracle.
//!
//! Nothing in here calls into the library's checkers or enumerator: tables are
//! plain row-major vectors, every axiom is checked by direct quantifier scans,
//! and isomorphism classes are separated with a hand-rolled permutation
//! minimization. The pruned enumerator is compared against this.

use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Rrs,
    Preordered,
    Antisym,
    WithZero,
    Rqd,
    MinusG,
}

impl Class {
    pub const ALL: [Class; 6] =
        [Class::Rrs, Class::Preordered, Class::Antisym, Class::WithZero, Class::Rqd, Class::MinusG];

    pub fn name(self) -> &'static str {
        match self {
            Class::Rrs => "rrs",
            Class::Preordered => "preordered-rrs",
            Class::Antisym => "antisym-rrs",
            Class::WithZero => "rrs-with-0",
            Class::Rqd => "residuated-quasi-directoid",
            Class::MinusG => "pre-axioms-minus-g",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raw {
    pub n: usize,
    pub unit: usize,
    pub zero: Option<usize>,
    pub mul: Vec<u8>,
    pub arrow: Vec<u8>,
    pub rel: Vec<bool>,
    pub join: Option<Vec<u8>>,
}

/// Every n×n table with entries in 0..n, in lexicographic order.
pub fn all_tables(n: usize) -> Vec<Vec<u8>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0u8; cells];
            for c in (0..cells).rev() {
                t[c] = (code % n) as u8;
                code /= n;
            }
            t
        })
        .collect()
}

pub fn all_relations(n: usize) -> Vec<Vec<bool>> {
    let cells = n * n;
    (0..(1u64 << cells)).map(|mask| (0..cells).map(|c| mask >> (cells - 1 - c) & 1 == 1).collect()).collect()
}

fn at(t: &[u8], n: usize, x: usize, y: usize) -> usize {
    t[x * n + y] as usize
}

pub fn comm_monoid(n: usize, mul: &[u8], unit: usize) -> bool {
    for x in 0..n {
        if at(mul, n, unit, x) != x || at(mul, n, x, unit) != x {
            return false;
        }
        for y in 0..n {
            if at(mul, n, x, y) != at(mul, n, y, x) {
                return false;
            }
            for z in 0..n {
                let l = at(mul, n, at(mul, n, x, y), z);
                let r = at(mul, n, x, at(mul, n, y, z));
                if l != r {
                    return false;
                }
            }
        }
    }
    true
}

pub fn unit_top(n: usize, rel: &[bool], unit: usize) -> bool {
    (0..n).all(|x| rel[x * n + unit])
}

pub fn reflexive(n: usize, rel: &[bool]) -> bool {
    (0..n).all(|x| rel[x * n + x])
}

pub fn transitive(n: usize, rel: &[bool]) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if rel[x * n + y] && rel[y * n + z] && !rel[x * n + z] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn antisymmetric(n: usize, rel: &[bool]) -> bool {
    for x in 0..n {
        for y in 0..n {
            if x != y && rel[x * n + y] && rel[y * n + x] {
                return false;
            }
        }
    }
    true
}

pub fn residuated(n: usize, mul: &[u8], arrow: &[u8], rel: &[bool]) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = rel[at(mul, n, x, y) * n + z];
                let right = rel[x * n + at(arrow, n, y, z)];
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

pub fn absorbing(n: usize, mul: &[u8]) -> Option<usize> {
    (0..n).find(|&z| (0..n).all(|x| at(mul, n, z, x) == z && at(mul, n, x, z) == z))
}

/// Quasi-directoid axioms a)–c) plus x⊔1 = 1.
pub fn qd_with_top(n: usize, join: &[u8], unit: usize) -> bool {
    let j = |x: usize, y: usize| at(join, n, x, y);
    for x in 0..n {
        if j(x, x) != x || j(x, unit) != unit {
            return false;
        }
        for y in 0..n {
            let xy = j(x, y);
            if j(x, xy) != xy || j(y, xy) != xy {
                return false;
            }
            for z in 0..n {
                if j(x, j(xy, z)) != j(xy, z) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn induced(n: usize, join: &[u8]) -> Vec<bool> {
    (0..n * n).map(|c| join[c] as usize == c % n).collect()
}

/// (x·y)⊔z = z ⇔ x⊔(y→z) = y→z.
pub fn axiom_g(n: usize, mul: &[u8], arrow: &[u8], join: &[u8]) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = at(join, n, at(mul, n, x, y), z) == z;
                let yz = at(arrow, n, y, z);
                let r = at(join, n, x, yz) == yz;
                if l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Heap's algorithm.
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn serialize_under(raw: &Raw, p: &[usize], inv: &[usize]) -> Vec<u8> {
    let n = raw.n;
    let mut out = Vec::with_capacity(4 + 4 * n * n);
    out.push(p[raw.unit] as u8);
    out.push(raw.zero.map_or(255, |z| p[z] as u8));
    for table in [Some(&raw.mul), Some(&raw.arrow), raw.join.as_ref()].into_iter().flatten() {
        for i in 0..n {
            for j in 0..n {
                out.push(p[at(table, n, inv[i], inv[j])] as u8);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            out.push(raw.rel[inv[i] * n + inv[j]] as u8);
        }
    }
    out
}

pub struct Canon {
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Canon {
    pub fn new(n: usize) -> Self {
        let perms = permutations(n)
            .into_iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (i, &v) in p.iter().enumerate() {
                    inv[v] = i;
                }
                (p, inv)
            })
            .collect();
        Canon { perms }
    }

    pub fn key(&self, raw: &Raw) -> Vec<u8> {
        self.perms.iter().map(|(p, inv)| serialize_under(raw, p, inv)).min().unwrap()
    }
}

/// Visit every labeled model of `class` at size `n`.
///
/// n ≤ 2 runs a literal nested loop over every table and relation; n = 3
/// filters each factor independently first, which visits the same set.
pub fn visit_class(n: usize, class: Class, mut f: impl FnMut(Raw)) {
    let tables = all_tables(n);
    let rels = all_relations(n);
    if n <= 2 {
        visit_literal(n, class, &tables, &rels, &mut f);
        return;
    }
    let monoids: Vec<(usize, &Vec<u8>)> =
        (0..n).flat_map(|u| tables.iter().map(move |t| (u, t))).filter(|(u, t)| comm_monoid(n, t, *u)).collect();
    match class {
        Class::Rqd | Class::MinusG => {
            for &(unit, mul) in &monoids {
                for join in tables.iter().filter(|j| qd_with_top(n, j, unit)) {
                    let rel = induced(n, join);
                    for arrow in &tables {
                        if class == Class::Rqd && !axiom_g(n, mul, arrow, join) {
                            continue;
                        }
                        f(Raw {
                            n,
                            unit,
                            zero: None,
                            mul: mul.clone(),
                            arrow: arrow.clone(),
                            rel: rel.clone(),
                            join: Some(join.clone()),
                        });
                    }
                }
            }
        }
        _ => {
            for &(unit, mul) in &monoids {
                let zero = absorbing(n, mul);
                if class == Class::WithZero && zero.is_none() {
                    continue;
                }
                for rel in rels.iter().filter(|r| rel_in_class(n, r, unit, class)) {
                    for arrow in &tables {
                        if residuated(n, mul, arrow, rel) {
                            f(Raw {
                                n,
                                unit,
                                zero: if class == Class::WithZero { zero } else { None },
                                mul: mul.clone(),
                                arrow: arrow.clone(),
                                rel: rel.clone(),
                                join: None,
                            });
                        }
                    }
                }
            }
        }
    }
}

fn rel_in_class(n: usize, rel: &[bool], unit: usize, class: Class) -> bool {
    unit_top(n, rel, unit)
        && match class {
            Class::Preordered => reflexive(n, rel) && transitive(n, rel),
            Class::Antisym => antisymmetric(n, rel),
            _ => true,
        }
}

fn visit_literal(n: usize, class: Class, tables: &[Vec<u8>], rels: &[Vec<bool>], f: &mut impl FnMut(Raw)) {
    for mul in tables {
        for unit in 0..n {
            for arrow in tables {
                match class {
                    Class::Rqd | Class::MinusG => {
                        for join in tables {
                            let ok = comm_monoid(n, mul, unit)
                                && qd_with_top(n, join, unit)
                                && (class == Class::MinusG || axiom_g(n, mul, arrow, join));
                            if ok {
                                f(Raw {
                                    n,
                                    unit,
                                    zero: None,
                                    mul: mul.clone(),
                                    arrow: arrow.clone(),
                                    rel: induced(n, join),
                                    join: Some(join.clone()),
                                });
                            }
                        }
                    }
                    _ => {
                        for rel in rels {
                            let ok = comm_monoid(n, mul, unit)
                                && rel_in_class(n, rel, unit, class)
                                && residuated(n, mul, arrow, rel);
                            if !ok {
                                continue;
                            }
                            let zero = absorbing(n, mul);
                            if class == Class::WithZero && zero.is_none() {
                                continue;
                            }
                            f(Raw {
                                n,
                                unit,
                                zero: if class == Class::WithZero { zero } else { None },
                                mul: mul.clone(),
                                arrow: arrow.clone(),
                                rel: rel.clone(),
                                join: None,
                            });
                        }
                    }
                }
            }
        }
    }
}

/// (labeled count, isomorphism-class count, canonical keys).
pub fn census(n: usize, class: Class) -> (usize, usize, HashSet<Vec<u8>>) {
    let canon = Canon::new(n);
    let mut labeled = 0;
    let mut keys = HashSet::new();
    visit_class(n, class, |raw| {
        labeled += 1;
        keys.insert(canon.key(&raw));
    });
    (labeled, keys.len(), keys)
}

/// X₁ ⊆ X₂† ⇔ X₂ ⊆ X₁* for every pair of subsets, with the two maps written
/// out as set comprehensions over `Vec<bool>` membership vectors.
pub fn polarity_holds(n: usize, rel: &[bool]) -> bool {
    let subsets: Vec<Vec<bool>> = (0..1usize << n).map(|m| (0..n).map(|i| m >> i & 1 == 1).collect()).collect();
    let star = |xs: &[bool]| -> Vec<bool> { (0..n).map(|y| (0..n).all(|x| !xs[x] || rel[x * n + y])).collect() };
    let dagger = |ys: &[bool]| -> Vec<bool> { (0..n).map(|x| (0..n).all(|y| !ys[y] || rel[x * n + y])).collect() };
    let subset = |a: &[bool], b: &[bool]| (0..n).all(|i| !a[i] || b[i]);
    subsets.iter().all(|x1| subsets.iter().all(|x2| subset(x1, &dagger(x2)) == subset(x2, &star(x1))))
}

/// A pre-ordered RRS by direct scans.
pub fn preordered_rrs(n: usize, unit: usize, mul: &[u8], arrow: &[u8], rel: &[bool]) -> bool {
    comm_monoid(n, mul, unit)
        && reflexive(n, rel)
        && transitive(n, rel)
        && unit_top(n, rel, unit)
        && residuated(n, mul, arrow, rel)
}
