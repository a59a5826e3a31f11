//! External r-fold semidirect products of finite groups.
//!
//! A [`TotalSystem`] over factor groups `H_1, …, H_r` defines a unital magma
//! law on `H_1 × … × H_r` ([`mul`]). The crate checks when that law is
//! associative ([`assoc`]), derives the componentwise conditions symbolically
//! ([`symbolic`]), decomposes concrete groups into internal products
//! ([`internal`]), and tests maps out of a product for the homomorphism
//! property ([`hom`]).

pub mod algebra;
pub mod assoc;
pub mod experiment;
pub mod group;
pub mod hom;
pub mod internal;
pub mod mul;
pub mod random;
pub mod symbolic;
pub mod system;
pub mod tuple;

pub use algebra::FactorAlgebra;
pub use group::{Elem, FiniteGroup, GroupError, GroupFile, PermGroup, Subgroup};
pub use system::{NormalizationReport, SystemError, SystemFile, TotalSystem};
pub use tuple::{ElemTuple, Tuple};
