//! Operation tables and the [`Model`] bundle every checker consumes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::{BinRel, Universe};

/// An n×n table for a binary operation, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    size: usize,
    entries: Vec<u8>,
}

impl OpTable {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let entries = (0..size * size)
            .map(|c| {
                let v = f(c / size, c % size);
                assert!(v < size, "table entry {v} out of range for size {size}");
                v as u8
            })
            .collect();
        OpTable { size, entries }
    }

    pub fn from_flat(size: usize, flat: &[usize]) -> Result<Self> {
        Universe::new(size)?;
        if flat.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "table of size {size} needs {} entries, got {}",
                size * size,
                flat.len()
            )));
        }
        if let Some(&bad) = flat.iter().find(|&&v| v >= size) {
            return Err(Error::IndexOutOfRange { index: bad, size });
        }
        Ok(OpTable { size, entries: flat.iter().map(|&v| v as u8).collect() })
    }

    pub(crate) fn from_bytes(size: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        OpTable { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.size + y] as usize
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        assert!(v < self.size);
        self.entries[x * self.size + y] = v as u8;
    }

    pub fn bytes(&self) -> &[u8] {
        &self.entries
    }

    pub fn to_flat(&self) -> Vec<usize> {
        self.entries.iter().map(|&v| v as usize).collect()
    }
}

/// `⟨A, ·, →, 1, R⟩` with optional `0` and `⊔`.
///
/// None of the axioms are invariants of this type: the enumerator holds
/// candidates that may fail them, and every law is checked by an operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModelJson", into = "ModelJson")]
pub struct Model {
    universe: Universe,
    mul: OpTable,
    arrow: OpTable,
    unit: usize,
    rel: BinRel,
    zero: Option<usize>,
    join: Option<OpTable>,
}

/// Wire form of a [`Model`]; all tables are row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelJson {
    pub size: usize,
    pub unit: usize,
    #[serde(default)]
    pub zero: Option<usize>,
    pub mul: Vec<usize>,
    pub arrow: Vec<usize>,
    pub rel: Vec<u8>,
    #[serde(default)]
    pub join: Option<Vec<usize>>,
}

impl TryFrom<ModelJson> for Model {
    type Error = Error;

    fn try_from(j: ModelJson) -> Result<Self> {
        let mut m = Model::new(
            OpTable::from_flat(j.size, &j.mul)?,
            OpTable::from_flat(j.size, &j.arrow)?,
            j.unit,
            BinRel::from_flat(j.size, &j.rel)?,
        )?;
        if let Some(z) = j.zero {
            m = m.with_zero(z)?;
        }
        if let Some(join) = j.join {
            m = m.with_join(OpTable::from_flat(j.size, &join)?)?;
        }
        Ok(m)
    }
}

impl From<Model> for ModelJson {
    fn from(m: Model) -> Self {
        ModelJson {
            size: m.size(),
            unit: m.unit,
            zero: m.zero,
            mul: m.mul.to_flat(),
            arrow: m.arrow.to_flat(),
            rel: m.rel.to_flat(),
            join: m.join.as_ref().map(OpTable::to_flat),
        }
    }
}

impl Model {
    pub fn new(mul: OpTable, arrow: OpTable, unit: usize, rel: BinRel) -> Result<Self> {
        let universe = Universe::new(mul.size())?;
        let n = universe.size();
        if arrow.size() != n || rel.size() != n {
            return Err(Error::DimensionMismatch(format!(
                "mul has size {n}, arrow {}, rel {}",
                arrow.size(),
                rel.size()
            )));
        }
        universe.check(unit)?;
        Ok(Model { universe, mul, arrow, unit, rel, zero: None, join: None })
    }

    pub fn with_zero(mut self, zero: usize) -> Result<Self> {
        self.universe.check(zero)?;
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn without_zero(mut self) -> Self {
        self.zero = None;
        self
    }

    pub fn with_join(mut self, join: OpTable) -> Result<Self> {
        if join.size() != self.size() {
            return Err(Error::DimensionMismatch(format!("join has size {}, model {}", join.size(), self.size())));
        }
        self.join = Some(join);
        Ok(self)
    }

    pub fn without_join(mut self) -> Self {
        self.join = None;
        self
    }

    pub fn with_rel(mut self, rel: BinRel) -> Result<Self> {
        if rel.size() != self.size() {
            return Err(Error::DimensionMismatch("relation size differs from model".into()));
        }
        self.rel = rel;
        Ok(self)
    }

    pub fn with_arrow(mut self, arrow: OpTable) -> Result<Self> {
        if arrow.size() != self.size() {
            return Err(Error::DimensionMismatch("arrow size differs from model".into()));
        }
        self.arrow = arrow;
        Ok(self)
    }

    pub fn with_mul(mut self, mul: OpTable) -> Result<Self> {
        if mul.size() != self.size() {
            return Err(Error::DimensionMismatch("mul size differs from model".into()));
        }
        self.mul = mul;
        Ok(self)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.universe.elements()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn arrow_table(&self) -> &OpTable {
        &self.arrow
    }

    pub fn join_table(&self) -> Option<&OpTable> {
        self.join.as_ref()
    }

    pub fn relation(&self) -> &BinRel {
        &self.rel
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    #[inline]
    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow.get(x, y)
    }

    #[inline]
    pub fn rel(&self, x: usize, y: usize) -> bool {
        self.rel.get(x, y)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
