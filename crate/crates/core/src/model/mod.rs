//! Graded presentations of split Lie-Rinehart algebras and the axiom validator.

mod basis;
mod functional;
mod instance;
mod table;
mod validate;

pub use basis::{GradedBasis, Sector};
pub use functional::Functional;
pub use instance::{Instance, InstanceParts};
pub use table::StructureTable;
pub use validate::{
    kernel_of_anchor, validate, CheckId, CheckResult, Counterexample, ValidationReport,
};
