//! Finite models of residuated relational systems: checkers for the axioms
//! and their consequences, the quasi-directoid correspondence, θ-quotients,
//! negation, and exhaustive enumeration with counterexample search.

pub mod directoid;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod negation;
pub mod preorder;
pub mod props;
pub mod quotient;
pub mod relation;
pub mod report;
pub mod rrs;
pub mod search;

pub use directoid::QuasiDirectoid;
pub use error::{Error, Result};
pub use model::{Model, OpTable};
pub use negation::ZeroedModel;
pub use quotient::{Quotient, ThetaPartition};
pub use relation::{BinRel, SubsetMask, Universe};
pub use report::{PropertyReport, Statement, Status};
pub use search::{ArrowChoice, CanonicalForm, Counterexample, ModelClass, Property, SearchSpec};
