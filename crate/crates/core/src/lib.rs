//! Exact re-execution of the constructive steps in rationality proofs for
//! fixed fields of transitive subgroups of S14.
//!
//! The crate is layered: [`scalars`] → [`symfield`] and [`perms`] →
//! [`lattice`] → [`catalog`] → [`constructions`] → [`verifier`].

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod lattice;
pub mod perms;
pub mod scalars;
pub mod symfield;
pub mod verifier;
pub mod word;

pub use catalog::{Catalog, CatalogGroup, GpdSpec};
pub use constructions::{construct, ConstructionOutput, Outcome};
pub use error::{Error, Result};
pub use lattice::{
    det_exact, monomial_subfield_index, snf, ExponentMatrix, LatticeIndex, SnfResult,
};
pub use perms::{
    direct_product, parse_cycles, print_cycles, wreath_product, PermGroup, Permutation,
};
pub use scalars::{Field, Scalar};
pub use symfield::{
    character_check, Character, FixedCheck, MapKind, Polynomial, RationalFunction, SubstitutionMap,
    VariableSpace,
};
pub use verifier::{
    list_scenarios, run_all, run_scenario, run_selected, CheckResult, OutputMode, Scenario,
    ScenarioReport, Status, SuiteReport,
};
