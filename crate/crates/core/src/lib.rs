//! Exact-arithmetic towers of algebras.
//!
//! A tower is a graded family A_0, A_1, A_2, ... of finite dimensional
//! algebras with external products rho_{m,n}: A_m (x) A_n -> A_{m+n}. Three
//! concrete towers are built here: the symmetric group algebras, the 0-Hecke
//! algebras, and the rank-one idempotent tower. On each, induction and
//! restriction of modules equip the Grothendieck groups G_0 (simples) and K_0
//! (projectives) with graded product and coproduct, and every axiom of the
//! framework, the bialgebra and duality structure it induces, and the known
//! failure points are machine checked over exact rationals.

pub mod comb;
pub mod error;
pub mod framework;
pub mod hecke0;
pub mod hopf;
pub mod linalg;
pub mod par;
pub mod request;
pub mod sym;
pub mod z2;

pub use error::{Result, TowerError};
