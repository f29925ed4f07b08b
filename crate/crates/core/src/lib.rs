//! Intuitionistic fuzzy decision ranking by hypervolume.
//!
//! The crate covers the fuzzy-set algebra ([`ifs`]), distance measures and
//! their axioms ([`distance`]), the robustness audit of reference-point
//! rankings ([`robustness`]), exact and sampled hypervolume
//! ([`hypervolume`]), the hypervolume-based ranking pipeline ([`hvas`]) and
//! the distance-based comparators it is measured against ([`compare`]).

pub mod compare;
pub mod distance;
pub mod error;
pub mod hvas;
pub mod hypervolume;
pub mod ifs;
pub mod ranking;
pub mod robustness;
pub mod sampling;

pub use compare::{CompareConfig, Method};
pub use distance::{DistanceMeasure, Linearity, Registry};
pub use error::{Error, Result};
pub use hvas::{CriterionKind, CriterionSpec, DecisionMatrix, DecisionProblem};
pub use hypervolume::{HvConfig, HvNetResult, Reference};
pub use ifs::{Ifn, Ifs, Weight};
pub use ranking::{Preference, RankingResult};
pub use robustness::{AuditConfig, AuditReport, Counterexample, ReferenceKind};
