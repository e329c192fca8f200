//! Tower-of-algebras framework: presentations, embeddings, modules,
//! induction and restriction, and the axiom checkers.

pub mod algebra;
pub mod checks;
pub mod induce;
pub mod module;
pub mod morphism;
pub mod tower;

pub use algebra::{AlgebraPresentation, ProductAlgebra};
pub use checks::{
    check_condition3, check_condition5, check_conditions12, check_pairing,
    check_regular_decomposition, Group,
};
pub use induce::{induce, restrict};
pub use module::{hom_basis, hom_dim, module_isomorphic, regular_module, IsoVerdict, ModuleRep};
pub use morphism::{EmbeddingMap, Morphism};
pub use tower::{
    context_algebra, decompose_projectives_via_hom, expected_induced_dim, induce_pair,
    pair_morphism, restrict_pair, tag_tuples, tensor_family, triple_morphism, twisted_morphism,
    CosetReps, Decomposition, Tower,
};
