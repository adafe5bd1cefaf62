//! Exhaustive enumeration of small models and counterexample search.
//!
//! Generation runs shard by shard, one shard per commutative monoid table:
//! relations (or quasi-joins) are enumerated per shard and the arrow is solved
//! from the residuation biconditional instead of being enumerated.

mod canon;
mod counterexample;
mod enumerate;
mod generate;
mod property;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::directoid::{check_join_upper_bound, is_quasi_directoid, is_residuated_quasi_directoid, QuasiDirectoid};
use crate::error::{Error, Result};
use crate::model::Model;
use crate::relation;
use crate::report::{scan1, scan2, PropertyReport};
use crate::rrs::{check_commutative_monoid, check_rrs};

pub use canon::{canonical_model, canonicalize, relabel, CanonicalForm, MAX_CANON_SIZE};
pub use counterexample::{counterexample_at_size, counterexample_search, Counterexample};
pub use enumerate::{count, enumerate, for_each};
pub use property::Property;

/// Environment variable overriding the default size cap of every class.
pub const SIZE_CAP_ENV: &str = "RRS_SIZE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelClass {
    Rrs,
    #[serde(rename = "preordered-rrs")]
    PreorderedRrs,
    AntisymRrs,
    #[serde(rename = "rrs-with-0")]
    RrsWithZero,
    ResiduatedQuasiDirectoid,
    PreAxiomsMinusG,
}

impl ModelClass {
    pub const ALL: [ModelClass; 6] = [
        ModelClass::Rrs,
        ModelClass::PreorderedRrs,
        ModelClass::AntisymRrs,
        ModelClass::RrsWithZero,
        ModelClass::ResiduatedQuasiDirectoid,
        ModelClass::PreAxiomsMinusG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelClass::Rrs => "rrs",
            ModelClass::PreorderedRrs => "preordered-rrs",
            ModelClass::AntisymRrs => "antisym-rrs",
            ModelClass::RrsWithZero => "rrs-with-0",
            ModelClass::ResiduatedQuasiDirectoid => "residuated-quasi-directoid",
            ModelClass::PreAxiomsMinusG => "pre-axioms-minus-g",
        }
    }

    /// Models of this class carry a join table.
    pub fn has_join(self) -> bool {
        matches!(self, ModelClass::ResiduatedQuasiDirectoid | ModelClass::PreAxiomsMinusG)
    }

    /// Largest size enumerated unless overridden. The arrow of
    /// `pre-axioms-minus-g` is unconstrained, hence its lower cap.
    pub fn default_cap(self) -> usize {
        match self {
            ModelClass::ResiduatedQuasiDirectoid => 5,
            ModelClass::PreAxiomsMinusG => 3,
            _ => 4,
        }
    }

    /// Membership report: every statement holds iff `m` belongs to the class.
    pub fn validate(self, m: &Model) -> PropertyReport {
        let mut r = PropertyReport::new();
        match self {
            ModelClass::ResiduatedQuasiDirectoid | ModelClass::PreAxiomsMinusG => {
                let q = match QuasiDirectoid::new(m.clone()) {
                    Ok(q) => q,
                    Err(_) => {
                        r.check("class.join", Some(vec![]));
                        return r;
                    }
                };
                if self == ModelClass::ResiduatedQuasiDirectoid {
                    r.extend(is_residuated_quasi_directoid(&q));
                } else {
                    r.extend(is_quasi_directoid(&q));
                    let mut ef = PropertyReport::new();
                    let monoid = check_commutative_monoid(m);
                    ef.check("rqd.e", monoid.failures().next().and_then(|s| s.witness.clone()));
                    ef.check("rqd.f", scan1(m.size(), |x| q.join(x, m.unit()) == m.unit()));
                    r.extend(ef);
                }
                r.check("class.induced", scan2(m.size(), |x, y| m.rel(x, y) == q.le(x, y)));
                r.extend(check_join_upper_bound(&q));
            }
            _ => {
                r.extend(check_rrs(m));
                let rel = m.relation();
                match self {
                    ModelClass::PreorderedRrs => {
                        r.check("class.reflexive", relation::reflexivity_witness(rel).map(|x| vec![x]));
                        r.check("class.transitive", relation::transitivity_witness(rel).map(|(x, y, z)| vec![x, y, z]));
                    }
                    ModelClass::AntisymRrs => {
                        r.check("class.antisymmetric", relation::antisymmetry_witness(rel).map(|(x, y)| vec![x, y]));
                    }
                    ModelClass::RrsWithZero => {
                        let ok = m.zero().is_some_and(|z| m.elements().all(|x| m.mul(z, x) == z && m.mul(x, z) == z));
                        r.check("class.zero", (!ok).then(Vec::new));
                    }
                    _ => {}
                }
            }
        }
        r
    }
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// How ties in the solved arrow are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrowChoice {
    /// Every admissible arrow table.
    #[default]
    All,
    /// Only the table taking the least candidate everywhere.
    Least,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub size: usize,
    pub class: ModelClass,
    pub up_to_iso: bool,
    /// Statement id or identity to test (counterexample search only).
    pub property: Option<String>,
    pub arrows: ArrowChoice,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Size cap; `None` falls back to the environment, then the class default.
    pub cap: Option<usize>,
}

impl SearchSpec {
    pub fn new(size: usize, class: ModelClass) -> Self {
        SearchSpec { size, class, up_to_iso: true, property: None, arrows: ArrowChoice::All, jobs: None, cap: None }
    }

    pub fn labeled(mut self) -> Self {
        self.up_to_iso = false;
        self
    }

    pub fn with_property(mut self, p: impl Into<String>) -> Self {
        self.property = Some(p.into());
        self
    }

    pub fn with_arrows(mut self, a: ArrowChoice) -> Self {
        self.arrows = a;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn effective_cap(&self) -> usize {
        let cap = self.cap.or_else(|| std::env::var(SIZE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()));
        cap.unwrap_or(self.class.default_cap()).min(MAX_CANON_SIZE)
    }

    pub(crate) fn check_size(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidSize { size: 0, max: MAX_CANON_SIZE });
        }
        let cap = self.effective_cap();
        if self.size > cap {
            return Err(Error::CapExceeded { size: self.size, cap, class: self.class.name().to_string() });
        }
        Ok(())
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool").install(f),
            None => f(),
        }
    }
}
