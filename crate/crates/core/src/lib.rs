//! Exact incidence algebras of finite preorders, spaces of derivation-type
//! linear maps on them, and decomposition certificates.
//!
//! The crate is organized bottom-up:
//!
//! * [`preorder`]: finite preorders (reflexive, transitive relations), built
//!   by closing a generating relation.
//! * [`ring`]: exact coefficient arithmetic over the integers, the rationals,
//!   and residues modulo `n`.
//! * [`algebra`]: the incidence algebra of a preorder over a ring, its
//!   elements, and linear maps on it.
//! * [`predicates`]: decision procedures for derivation-type map classes,
//!   with witness-carrying reports.
//! * [`solver`]: exact linear systems whose nullspaces are the spaces of maps
//!   in each class.
//! * [`decompose`]: constructive decomposition of a generalized Jordan
//!   derivation pair into a left multiplication plus a derivation, certified
//!   check by check.
//! * [`enumerate`]: exhaustive small-preorder generation for sweep suites.
//! * [`io`]: JSON file formats for preorders, linear maps, and reports.
//!
//! All arithmetic is exact; there are no floating-point tolerances anywhere.

pub mod algebra;
pub mod decompose;
pub mod enumerate;
mod error;
pub mod io;
pub mod predicates;
pub mod preorder;
pub mod report;
pub mod ring;
pub mod solver;

pub use algebra::{BasisIndex, GenPair, IncidenceAlgebra, IncidenceElement, LinearMap};
pub use decompose::DecompositionCertificate;
pub use error::{Error, Result};
pub use preorder::Preorder;
pub use report::{ComponentRelationReport, IdentityReport, Witness};
pub use ring::{RingSpec, Scalar};
pub use solver::{
    ClassMember, ConstraintSystem, MapClass, SolutionSpace, SpaceComparison, SpaceSurvey,
};
