//! Exact computations with algebras, modules and bimodules internal to linear
//! 2-categories of finite semisimple categories.

pub mod ambient;
pub mod commands;
pub mod document;
pub mod error;
pub mod morita;
pub mod reltensor;
pub mod report;
pub mod scalars;
pub mod separability;
pub mod structures;

pub use error::{Error, Result};
pub use scalars::{Field, FieldElement, FieldSpec, ScalarMatrix};
