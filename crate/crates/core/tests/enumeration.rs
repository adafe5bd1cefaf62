//! The pruned enumerator against the naive oracle in `common/oracle.rs`.

mod common;

use std::collections::HashSet;

use common::golden::GOLDEN;
use common::oracle::{self, Canon};
use common::to_raw;
use rrs_core::search::{count, enumerate, for_each, SearchSpec};
use rrs_core::ModelClass;

fn oracle_class(c: ModelClass) -> oracle::Class {
    oracle::Class::ALL.into_iter().find(|o| o.name() == c.name()).unwrap()
}

#[test]
fn counts_match_golden() {
    for (name, n, labeled, iso) in GOLDEN {
        let class: ModelClass = name.parse().unwrap();
        let spec = SearchSpec::new(n, class);
        assert_eq!(count(&spec).unwrap(), iso, "{name} n={n} up to iso");
        assert_eq!(count(&spec.clone().labeled()).unwrap(), labeled, "{name} n={n} labeled");
    }
}

fn same_classes_as_oracle(class: ModelClass, n: usize) {
    let canon = Canon::new(n);
    let models = enumerate(&SearchSpec::new(n, class)).unwrap();
    let ours: HashSet<Vec<u8>> = models.iter().map(|m| canon.key(&to_raw(m))).collect();
    assert_eq!(ours.len(), models.len(), "{class} n={n}: two emitted models are isomorphic");
    let (_, _, theirs) = oracle::census(n, oracle_class(class));
    assert!(ours == theirs, "{class} n={n}: isomorphism classes differ from the oracle");
}

#[test]
fn small_classes_match_oracle_exactly() {
    for class in ModelClass::ALL {
        for n in 1..=2 {
            same_classes_as_oracle(class, n);
        }
    }
    same_classes_as_oracle(ModelClass::AntisymRrs, 3);
}

#[test]
fn size3_rrs_matches_oracle_exactly() {
    same_classes_as_oracle(ModelClass::Rrs, 3);
}

#[test]
fn size3_preordered_matches_oracle_exactly() {
    same_classes_as_oracle(ModelClass::PreorderedRrs, 3);
}

#[test]
fn size3_with_zero_matches_oracle_exactly() {
    same_classes_as_oracle(ModelClass::RrsWithZero, 3);
}

#[test]
fn size3_rqd_matches_oracle_exactly() {
    same_classes_as_oracle(ModelClass::ResiduatedQuasiDirectoid, 3);
}

#[test]
fn every_emitted_model_is_in_its_class() {
    for class in ModelClass::ALL {
        for n in 1..=3 {
            let spec = SearchSpec::new(n, class);
            for_each(&spec, |m| {
                let r = class.validate(m);
                assert!(r.all_hold(), "{class} n={n}: {m:?}\n{r}");
            })
            .unwrap();
        }
    }
}

#[test]
fn deterministic_across_worker_counts() {
    for class in [ModelClass::PreorderedRrs, ModelClass::ResiduatedQuasiDirectoid] {
        let one = enumerate(&SearchSpec::new(3, class).with_jobs(1)).unwrap();
        let four = enumerate(&SearchSpec::new(3, class).with_jobs(4)).unwrap();
        let again = enumerate(&SearchSpec::new(3, class).with_jobs(4)).unwrap();
        assert_eq!(one, four);
        assert_eq!(four, again);
    }
    let a = enumerate(&SearchSpec::new(2, ModelClass::Rrs).labeled().with_jobs(1)).unwrap();
    let b = enumerate(&SearchSpec::new(2, ModelClass::Rrs).labeled().with_jobs(3)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn enumerate_is_sorted_and_canonical() {
    let ms = enumerate(&SearchSpec::new(3, ModelClass::AntisymRrs)).unwrap();
    let forms: Vec<_> = ms.iter().map(rrs_core::search::canonicalize).collect();
    assert!(forms.windows(2).all(|w| w[0] < w[1]));
    for (m, f) in ms.iter().zip(&forms) {
        assert_eq!(rrs_core::search::canonical_model(m).1, *f);
        assert_eq!(rrs_core::search::canonical_model(m).0, *m);
    }
}
