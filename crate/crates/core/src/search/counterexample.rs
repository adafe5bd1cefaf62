//! Search for the first model (in canonical order) where a property fails.

use rayon::prelude::*;
use serde::Serialize;

use super::canon::serialize;
use super::enumerate::visit_shard;
use super::generate::shards;
use super::property::Property;
use super::{ModelClass, SearchSpec};
use crate::error::{Error, Result};
use crate::model::Model;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub size: usize,
    pub model: Model,
    /// Values of the property's variables, or the failing statement's witness.
    pub witness: Vec<usize>,
}

fn parse_for(spec: &SearchSpec) -> Result<Property> {
    let src = spec.property.as_deref().ok_or_else(|| Error::Precondition("no property given".into()))?;
    let p = Property::parse(src)?;
    if p.uses_join() && !spec.class.has_join() {
        return Err(Error::Precondition(format!("class {} has no join", spec.class)));
    }
    if p.uses_zero() && spec.class != ModelClass::RrsWithZero {
        return Err(Error::Precondition(format!("class {} has no 0", spec.class)));
    }
    Ok(p)
}

/// Searches sizes `1..=spec.size` in order and returns the least failing model
/// of the first size that has one.
pub fn counterexample_search(spec: &SearchSpec) -> Result<Option<Counterexample>> {
    spec.check_size()?;
    let p = parse_for(spec)?;
    for size in 1..=spec.size {
        let s = SearchSpec { size, ..spec.clone() };
        if let Some(c) = search_size(&s, &p)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Like [`counterexample_search`] but only at exactly `spec.size`.
pub fn counterexample_at_size(spec: &SearchSpec) -> Result<Option<Counterexample>> {
    spec.check_size()?;
    let p = parse_for(spec)?;
    search_size(spec, &p)
}

/// Serialization key, model and witness of the best failure so far.
type Best = Option<(Vec<u8>, Model, Vec<usize>)>;

fn search_size(spec: &SearchSpec, p: &Property) -> Result<Option<Counterexample>> {
    let all = shards(spec.size, spec.up_to_iso);
    let per_shard: Vec<Result<Best>> = spec.run(|| {
        all.par_iter()
            .map(|shard| {
                let mut best: Best = None;
                let mut err = None;
                visit_shard(spec, shard, &mut |m| {
                    if err.is_some() {
                        return;
                    }
                    match p.violation(&m) {
                        Err(e) => err = Some(e),
                        Ok(None) => {}
                        Ok(Some(w)) => {
                            let key = serialize(&m);
                            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                                best = Some((key, m, w));
                            }
                        }
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok(best),
                }
            })
            .collect()
    });
    let mut best: Best = None;
    for r in per_shard {
        if let Some(c) = r? {
            if best.as_ref().is_none_or(|b| c.0 < b.0) {
                best = Some(c);
            }
        }
    }
    Ok(best.map(|(_, model, witness)| Counterexample { size: spec.size, model, witness }))
}
