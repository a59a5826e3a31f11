//! The data a total system supplies to the multiplication engine.
//!
//! The engine in [`crate::mul`] only ever multiplies inside a single factor,
//! applies an action `^{φ_k^j(a)} b`, or reads a bracket `[a, b]_{kj}^i`. A
//! [`FactorAlgebra`] provides exactly those three operations, which lets the
//! same recursion run over concrete group tables ([`crate::TotalSystem`]) and
//! over free symbolic words ([`crate::symbolic::FreeAlgebra`]).

use std::fmt::Debug;

pub trait FactorAlgebra {
    type Elem: Clone + PartialEq + Debug;

    /// Number of factors `r`.
    fn rank(&self) -> usize;

    fn one(&self, level: usize) -> Self::Elem;

    fn is_one(&self, level: usize, x: &Self::Elem) -> bool;

    /// Group law of `H_level`.
    fn mul(&self, level: usize, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// `^{φ_k^j(a)} b` for `k > j`, `a ∈ H_k`, `b ∈ H_j`.
    fn act(&self, k: usize, j: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `[a, b]_{kj}^i` for `k > j > i`.
    fn bracket(&self, k: usize, j: usize, i: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}
