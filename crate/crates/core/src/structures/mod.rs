//! Algebras, modules, bimodules and balanced 1-morphisms in the ambient
//! 2-category, their axiom checkers, and the built-in examples.

pub mod catalog;
mod check;
mod fusion;
mod internal;
mod mutation;
mod types;

pub use check::{
    check_algebra, check_balanced, check_bimodule, check_bimodule_map, check_internal_algebra, check_left_module,
    check_left_module_map, check_module, check_module_map,
};
pub(crate) use fusion::fill_defaults;
pub use fusion::{build_fusion_algebra, load_fusion_algebra, FusionData};
pub use internal::{left_module_from_internal_algebra, module_from_internal_algebra, InternalAlgebra};
pub use mutation::{mutations, Mutation};
pub use types::{
    AlgebraObject, Balanced1Morphism, Bimodule, BimoduleMap, Entries, LeftModule, LeftModuleMap, ModuleMap, RightModule,
};
