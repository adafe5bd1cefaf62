//! Sharded parallel enumeration with per-shard isomorphism rejection.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{canonical_model, canonicalize, serialize};
use super::generate::{models_in_shard, shards, Shard};
use super::SearchSpec;
use crate::error::Result;
use crate::model::Model;

/// Runs `f` on every model of one shard; canonical representatives only
/// when `up_to_iso`. Models from different shards have non-isomorphic
/// monoid reducts, so rejection never needs to look across shards.
pub(crate) fn visit_shard(spec: &SearchSpec, shard: &Shard, f: &mut dyn FnMut(Model)) {
    if spec.up_to_iso {
        let mut seen = HashSet::new();
        models_in_shard(shard, spec.class, spec.arrows, &mut |m| {
            if seen.insert(canonicalize(&m)) {
                f(canonical_model(&m).0);
            }
        });
    } else {
        models_in_shard(shard, spec.class, spec.arrows, f);
    }
}

/// Calls `f` on every model of the class at the requested size, in parallel and
/// in no particular order. Up to isomorphism, each model is the canonical
/// representative of its class.
pub fn for_each(spec: &SearchSpec, f: impl Fn(&Model) + Sync + Send) -> Result<()> {
    spec.check_size()?;
    let all = shards(spec.size, spec.up_to_iso);
    spec.run(|| {
        all.par_iter().for_each(|s| visit_shard(spec, s, &mut |m| f(&m)));
    });
    Ok(())
}

/// Number of models [`enumerate`] would return.
pub fn count(spec: &SearchSpec) -> Result<usize> {
    spec.check_size()?;
    let all = shards(spec.size, spec.up_to_iso);
    Ok(spec.run(|| {
        all.par_iter()
            .map(|s| {
                let mut k = 0;
                visit_shard(spec, s, &mut |_| k += 1);
                k
            })
            .sum()
    }))
}

/// Every model of the class at the requested size. Up to isomorphism: canonical
/// representatives sorted by canonical form. Labeled: every model, sorted by
/// its own serialization. The result does not depend on the worker count.
pub fn enumerate(spec: &SearchSpec) -> Result<Vec<Model>> {
    spec.check_size()?;
    let all = shards(spec.size, spec.up_to_iso);
    let mut keyed: Vec<(Vec<u8>, Model)> = spec.run(|| {
        all.par_iter()
            .flat_map_iter(|s| {
                let mut out = Vec::new();
                visit_shard(spec, s, &mut |m| out.push((serialize(&m), m)));
                out
            })
            .collect()
    });
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, m)| m).collect())
}
