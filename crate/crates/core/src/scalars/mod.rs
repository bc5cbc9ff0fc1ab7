//! Exact scalars, exact linear algebra and semisimple algebra decomposition.

mod algebra;
mod field;
mod literal;
mod matrix;
mod poly;

pub use algebra::{
    decompose_adapted, decompose_semisimple_algebra, AssocAlgebra, Vector, WedderburnBlock, WedderburnDecomposition,
};
pub(crate) use algebra::{express, independent_subset};
pub use field::{cyclotomic_polynomial, Field, FieldElement, FieldSpec};
pub use literal::parse_scalar;
pub use matrix::{solve_linear, LinearSolution, LinearSystem, ScalarMatrix};
pub use poly::{eval_poly, format_poly, roots_in_field};
