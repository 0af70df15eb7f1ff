//! Finite-model workbench for groups with an action on themselves.

pub mod actions;
pub mod algebra;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod group;
pub mod ideals;
pub mod report;
pub mod semidirect;
pub mod term;

pub use actions::ActionTriple;
pub use algebra::{FiniteGwa, GwaMorphism};
pub use error::{Error, Result};
pub use group::GroupTable;
pub use ideals::SubsetMask;
pub use report::{CheckReport, Checker, Violation};
