//! Binary relations on a finite universe, stored as packed bit rows, together
//! with the polarity operators `X*` / `X†` and Galois-connection checks.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest universe a [`BinRel`] or [`SubsetMask`] can address (one `u64` per row).
pub const MAX_SIZE: usize = 64;

/// Default cap for [`is_polarity_pair`]; the scan visits 4ⁿ subset pairs.
pub const DEFAULT_POLARITY_CAP: usize = 10;

/// A finite carrier `{0, .., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(usize);

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_SIZE {
            return Err(Error::InvalidSize { size, max: MAX_SIZE });
        }
        Ok(Universe(size))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.0
    }

    pub fn check(self, x: usize) -> Result<()> {
        if x < self.0 {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, size: self.0 })
        }
    }
}

fn low_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the universe as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    size: usize,
    bits: u64,
}

impl SubsetMask {
    pub fn empty(size: usize) -> Self {
        SubsetMask { size, bits: 0 }
    }

    pub fn full(size: usize) -> Self {
        SubsetMask { size, bits: low_bits(size) }
    }

    pub fn singleton(size: usize, x: usize) -> Result<Self> {
        Self::from_indices(size, &[x])
    }

    pub fn from_indices(size: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(size);
        for &i in indices {
            if i >= size {
                return Err(Error::IndexOutOfRange { index: i, size });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    /// Bits at positions ≥ `size` are dropped.
    pub fn from_bits(size: usize, bits: u64) -> Self {
        SubsetMask { size, bits: bits & low_bits(size) }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.size && self.bits >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < self.size);
        self.bits |= 1 << x;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask { size: self.size, bits: self.bits & other.bits }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.size).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The first (smallest) member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// All 2ⁿ subsets of an n-element universe in increasing bit order.
    pub fn all(size: usize) -> impl Iterator<Item = SubsetMask> {
        (0..=low_bits(size)).map(move |bits| SubsetMask { size, bits })
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A binary relation on `{0, .., n-1}`; row `x` holds the bits of `{y : (x,y) ∈ R}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RelationJson", into = "RelationJson")]
pub struct BinRel {
    size: usize,
    rows: Vec<u64>,
}

/// Wire form: `{"size": n, "rel": [row-major n² array of 0/1]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationJson {
    pub size: usize,
    pub rel: Vec<u8>,
}

impl TryFrom<RelationJson> for BinRel {
    type Error = Error;

    fn try_from(j: RelationJson) -> Result<Self> {
        BinRel::from_flat(j.size, &j.rel)
    }
}

impl From<BinRel> for RelationJson {
    fn from(r: BinRel) -> Self {
        RelationJson { size: r.size, rel: r.to_flat() }
    }
}

impl BinRel {
    pub fn empty(size: usize) -> Self {
        assert!(size <= MAX_SIZE);
        BinRel { size, rows: vec![0; size] }
    }

    pub fn full(size: usize) -> Self {
        assert!(size <= MAX_SIZE);
        BinRel { size, rows: vec![low_bits(size); size] }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |x, y| x == y)
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(size);
        for x in 0..size {
            for y in 0..size {
                if f(x, y) {
                    r.rows[x] |= 1 << y;
                }
            }
        }
        r
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Universe::new(size)?;
        let mut r = Self::empty(size);
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= size {
                    return Err(Error::IndexOutOfRange { index: i, size });
                }
            }
            r.rows[x] |= 1 << y;
        }
        Ok(r)
    }

    /// Row-major 0/1 entries.
    pub fn from_flat(size: usize, flat: &[u8]) -> Result<Self> {
        Universe::new(size)?;
        if flat.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "relation of size {size} needs {} entries, got {}",
                size * size,
                flat.len()
            )));
        }
        if let Some(&bad) = flat.iter().find(|&&b| b > 1) {
            return Err(Error::Json(format!("relation entries must be 0 or 1, got {bad}")));
        }
        Ok(Self::from_fn(size, |x, y| flat[x * size + y] == 1))
    }

    pub(crate) fn from_rows(size: usize, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), size);
        BinRel { size, rows }
    }

    pub fn to_flat(&self) -> Vec<u8> {
        (0..self.size * self.size).map(|c| self.get(c / self.size, c % self.size) as u8).collect()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        if value {
            self.rows[x] |= 1 << y;
        } else {
            self.rows[x] &= !(1 << y);
        }
    }

    #[inline]
    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    /// Bits of `{x : (x,y) ∈ R}`.
    pub fn column(&self, y: usize) -> u64 {
        self.rows.iter().enumerate().fold(0, |acc, (x, r)| acc | ((r >> y & 1) << x))
    }

    pub fn columns(&self) -> Vec<u64> {
        (0..self.size).map(|y| self.column(y)).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |x| (0..self.size).map(move |y| (x, y))).filter(move |&(x, y)| self.get(x, y))
    }
}

impl fmt::Debug for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

pub fn is_reflexive(r: &BinRel) -> bool {
    reflexivity_witness(r).is_none()
}

pub fn reflexivity_witness(r: &BinRel) -> Option<usize> {
    (0..r.size).find(|&x| !r.get(x, x))
}

pub fn is_transitive(r: &BinRel) -> bool {
    transitivity_witness(r).is_none()
}

/// Lexicographically first `(x, y, z)` with `xRy`, `yRz` and not `xRz`.
pub fn transitivity_witness(r: &BinRel) -> Option<(usize, usize, usize)> {
    for x in 0..r.size {
        for y in 0..r.size {
            if !r.get(x, y) {
                continue;
            }
            let missing = r.rows[y] & !r.rows[x];
            if missing != 0 {
                return Some((x, y, missing.trailing_zeros() as usize));
            }
        }
    }
    None
}

pub fn is_antisymmetric(r: &BinRel) -> bool {
    antisymmetry_witness(r).is_none()
}

pub fn antisymmetry_witness(r: &BinRel) -> Option<(usize, usize)> {
    for x in 0..r.size {
        for y in 0..r.size {
            if x != y && r.get(x, y) && r.get(y, x) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_preorder(r: &BinRel) -> bool {
    is_reflexive(r) && is_transitive(r)
}

pub fn is_partial_order(r: &BinRel) -> bool {
    is_preorder(r) && is_antisymmetric(r)
}

/// `x ∥ y`: neither `x R y` nor `y R x`.
pub fn incomparable(r: &BinRel, x: usize, y: usize) -> Result<bool> {
    for i in [x, y] {
        if i >= r.size {
            return Err(Error::IndexOutOfRange { index: i, size: r.size });
        }
    }
    Ok(!r.get(x, y) && !r.get(y, x))
}

/// `X* = {y : (x,y) ∈ R for each x ∈ X}`; the empty set maps to the whole universe.
pub fn star(r: &BinRel, xs: &SubsetMask) -> SubsetMask {
    let bits = xs.iter().fold(low_bits(r.size), |acc, x| acc & r.rows[x]);
    SubsetMask::from_bits(r.size, bits)
}

/// `X† = {x : (x,y) ∈ R for each y ∈ X}`.
pub fn dagger(r: &BinRel, ys: &SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::empty(r.size);
    for x in 0..r.size {
        if ys.bits & !r.rows[x] == 0 {
            out.insert(x);
        }
    }
    out
}

/// Checks `X₁ ⊆ X₂† ⇔ X₂ ⊆ X₁*` for every pair of subsets, with the default cap.
pub fn is_polarity_pair(r: &BinRel) -> Result<bool> {
    is_polarity_pair_capped(r, DEFAULT_POLARITY_CAP)
}

pub fn is_polarity_pair_capped(r: &BinRel, cap: usize) -> Result<bool> {
    Ok(polarity_violation(r, cap)?.is_none())
}

/// First pair `(X₁, X₂)` (in increasing bit order) violating the polarity biconditional.
pub fn polarity_violation(r: &BinRel, cap: usize) -> Result<Option<(SubsetMask, SubsetMask)>> {
    if r.size > cap {
        return Err(Error::SizeTooLarge { size: r.size, cap });
    }
    let subsets: Vec<SubsetMask> = SubsetMask::all(r.size).collect();
    let stars: Vec<SubsetMask> = subsets.iter().map(|s| star(r, s)).collect();
    let daggers: Vec<SubsetMask> = subsets.iter().map(|s| dagger(r, s)).collect();
    for (i, x1) in subsets.iter().enumerate() {
        for (j, x2) in subsets.iter().enumerate() {
            if x1.is_subset_of(&daggers[j]) != x2.is_subset_of(&stars[i]) {
                return Ok(Some((*x1, *x2)));
            }
        }
    }
    Ok(None)
}

fn check_map(map: &[usize], domain: usize, codomain: usize, name: &str) -> Result<()> {
    if map.len() != domain {
        return Err(Error::DimensionMismatch(format!("map {name} has {} entries, expected {domain}", map.len())));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= codomain) {
        return Err(Error::IndexOutOfRange { index: bad, size: codomain });
    }
    Ok(())
}

/// `(x, g(y)) ∈ R ⇔ (f(x), y) ∈ R` for all `x, y`.
pub fn is_galois_connection(f: &[usize], g: &[usize], r: &BinRel) -> Result<bool> {
    Ok(galois_violation(f, g, r)?.is_none())
}

pub fn galois_violation(f: &[usize], g: &[usize], r: &BinRel) -> Result<Option<(usize, usize)>> {
    residuated_pair_violation(f, g, r, r)
}

/// `f: B → C`, `g: C → B` with `(f(b), c) ∈ R₂ ⇔ (b, g(c)) ∈ R₁`.
pub fn is_residuated_map_pair(f: &[usize], g: &[usize], r1: &BinRel, r2: &BinRel) -> Result<bool> {
    Ok(residuated_pair_violation(f, g, r1, r2)?.is_none())
}

pub fn residuated_pair_violation(f: &[usize], g: &[usize], r1: &BinRel, r2: &BinRel) -> Result<Option<(usize, usize)>> {
    let (b, c) = (r1.size, r2.size);
    check_map(f, b, c, "f")?;
    check_map(g, c, b, "g")?;
    for x in 0..b {
        for y in 0..c {
            if r2.get(f[x], y) != r1.get(x, g[y]) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
