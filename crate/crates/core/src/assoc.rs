//! Exhaustive associativity checks for the law `μ` of a total system.
//!
//! Every check walks its domain in lexicographic order (outer operand first)
//! and stops at the first failing triple, so witnesses are reproducible and
//! independent of how the work is scheduled.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::Elem;
use crate::mul::{self, CayleyTable, TupleCodec};
use crate::system::TotalSystem;
use crate::tuple::ElemTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssocError {
    #[error("index {index} out of range 1..={r}")]
    Index { index: usize, r: usize },
    #[error("indices must satisfy k >= j >= i, got ({k},{j},{i})")]
    Order { k: usize, j: usize, i: usize },
    #[error("domain of size {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
}

/// Limits on exhaustive loops. `triple` bounds `|G|` for checks over three
/// unrestricted operands, `pair` bounds the largest domain otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCaps {
    pub triple: usize,
    pub pair: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps { triple: 512, pair: 4096 }
    }
}

/// `A[k,j,i]`, or the single component `A[k,j,i;l]` when `l` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AssocCondition {
    pub k: usize,
    pub j: usize,
    pub i: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<usize>,
}

impl AssocCondition {
    pub fn new(k: usize, j: usize, i: usize) -> Self {
        AssocCondition { k, j, i, l: None }
    }

    pub fn component(k: usize, j: usize, i: usize, l: usize) -> Self {
        AssocCondition { k, j, i, l: Some(l) }
    }
}

impl fmt::Display for AssocCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.l {
            Some(l) => write!(f, "A[{},{},{};{}]", self.k, self.j, self.i, l),
            None => write!(f, "A[{},{},{}]", self.k, self.j, self.i),
        }
    }
}

/// A failing instance: the two sides differ on the operands `a`, `b`, `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub a: ElemTuple,
    pub b: ElemTuple,
    pub c: ElemTuple,
    pub lhs: ElemTuple,
    pub rhs: ElemTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn pass() -> Self {
        CheckResult { holds: true, witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckResult { holds: false, witness: Some(witness) }
    }
}

/// Operand range for `A[U,V,W]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// The factor `H_k`, as elementary tuples.
    Elementary(usize),
    /// `R_k`: all tuples of rank at most `k`.
    Band(usize),
    /// All of `G`.
    All,
}

impl Domain {
    fn level(&self, r: usize) -> usize {
        match *self {
            Domain::Elementary(k) | Domain::Band(k) => k,
            Domain::All => r,
        }
    }

    fn size(&self, sys: &TotalSystem) -> usize {
        match *self {
            Domain::Elementary(k) => sys.factor(k).order(),
            Domain::Band(k) => sys.band_order(k),
            Domain::All => sys.order(),
        }
    }

    /// The members in lexicographic tuple order.
    pub fn members(&self, sys: &TotalSystem) -> Vec<ElemTuple> {
        match *self {
            Domain::Elementary(k) => sys.factor(k).elements().map(|x| mul::elementary(sys, k, x)).collect(),
            Domain::Band(k) => TupleCodec::for_band(sys, k).tuples().collect(),
            Domain::All => TupleCodec::new(sys).tuples().collect(),
        }
    }
}

fn check_level(sys: &TotalSystem, index: usize) -> Result<(), AssocError> {
    if index == 0 || index > sys.r() {
        return Err(AssocError::Index { index, r: sys.r() });
    }
    Ok(())
}

fn check_cap(size: usize, cap: usize) -> Result<(), AssocError> {
    if size > cap {
        return Err(AssocError::SizeCapExceeded { size, cap });
    }
    Ok(())
}

/// Walks `xs × ys × zs` in order and reports the first triple on which the
/// two sides differ.
fn first_failure(
    xs: &[ElemTuple],
    ys: &[ElemTuple],
    zs: &[ElemTuple],
    mut sides: impl FnMut(&ElemTuple, &ElemTuple, &ElemTuple) -> (ElemTuple, ElemTuple),
) -> CheckResult {
    for a in xs {
        for b in ys {
            for c in zs {
                let (lhs, rhs) = sides(a, b, c);
                if lhs != rhs {
                    return CheckResult::fail(Witness { a: a.clone(), b: b.clone(), c: c.clone(), lhs, rhs });
                }
            }
        }
    }
    CheckResult::pass()
}

/// `A[U,V,W]`: `μ(u, μ(v, w)) = μ(μ(u, v), w)` for all `u ∈ U`, `v ∈ V`,
/// `w ∈ W`.
pub fn check_assoc(
    sys: &TotalSystem,
    u: Domain,
    v: Domain,
    w: Domain,
    caps: SizeCaps,
) -> Result<CheckResult, AssocError> {
    for d in [u, v, w] {
        check_level(sys, d.level(sys.r()))?;
    }
    let unrestricted = [u, v, w].iter().all(|d| !matches!(d, Domain::Elementary(_)));
    let largest = [u, v, w].iter().map(|d| d.size(sys)).max().unwrap_or(0);
    if unrestricted {
        check_cap(sys.order(), caps.triple)?;
    } else {
        check_cap(largest, caps.pair)?;
    }
    let (xs, ys, zs) = (u.members(sys), v.members(sys), w.members(sys));
    // One table lookup per product pays off as soon as the loop is cubic in
    // |G|; the table itself is |G|² products.
    if unrestricted {
        if let Some(table) = CayleyTable::build(sys, caps.triple) {
            return Ok(first_failure(&xs, &ys, &zs, |a, b, c| {
                (table.mul(a, &table.mul(b, c)), table.mul(&table.mul(a, b), c))
            }));
        }
    }
    Ok(first_failure(&xs, &ys, &zs, |a, b, c| {
        (mul::mu(sys, a, &mul::mu(sys, b, c)), mul::mu(sys, &mul::mu(sys, a, b), c))
    }))
}

/// `A[k,j,i]` over `H_k × H_j × H_i`. Any levels in `1..=r` are accepted;
/// the reversed orderings hold on every normalized system.
pub fn check_elementary(sys: &TotalSystem, k: usize, j: usize, i: usize) -> Result<CheckResult, AssocError> {
    check_assoc(sys, Domain::Elementary(k), Domain::Elementary(j), Domain::Elementary(i), SizeCaps::default())
}

/// Every `A[k,j,i]` with `r ≥ k ≥ j ≥ i ≥ 1`, ordered by `(k, j, i)`.
pub fn check_all_elementary(sys: &TotalSystem) -> Vec<(AssocCondition, CheckResult)> {
    let r = sys.r();
    let mut out = Vec::new();
    for k in 1..=r {
        for j in 1..=k {
            for i in 1..=j {
                let res = check_elementary(sys, k, j, i).expect("levels are in range");
                out.push((AssocCondition::new(k, j, i), res));
            }
        }
    }
    out
}

pub fn all_pass(results: &[(AssocCondition, CheckResult)]) -> bool {
    results.iter().all(|(_, r)| r.holds)
}

/// Associativity over all of `G`.
pub fn brute_force_associative(sys: &TotalSystem, caps: SizeCaps) -> Result<CheckResult, AssocError> {
    check_assoc(sys, Domain::All, Domain::All, Domain::All, caps)
}

/// Associativity on `R_k`, i.e. `A[[k]]`.
pub fn brute_force_band(sys: &TotalSystem, k: usize, caps: SizeCaps) -> Result<CheckResult, AssocError> {
    check_level(sys, k)?;
    let size = sys.band_order(k);
    check_cap(size, caps.triple)?;
    let all = Domain::Band(k).members(sys);
    Ok(first_failure(&all, &all, &all, |a, b, c| {
        (mul::mu(sys, a, &mul::mu(sys, b, c)), mul::mu(sys, &mul::mu(sys, a, b), c))
    }))
}

fn check_phi_level(sys: &TotalSystem, k: usize) -> Result<(), AssocError> {
    check_level(sys, k)?;
    if k < 2 {
        return Err(AssocError::Index { index: k, r: sys.r() });
    }
    Ok(())
}

/// `φ_a(v·w) = φ_a(v)·φ_a(w)` for `a ∈ H_k`, `v, w ∈ R_{k-1}`. The witness
/// reports `(a, v, w)` and the two sides.
pub fn check_phi_multiplicative(sys: &TotalSystem, k: usize, caps: SizeCaps) -> Result<CheckResult, AssocError> {
    check_phi_level(sys, k)?;
    check_cap(sys.band_order(k - 1), caps.pair)?;
    let hs = Domain::Elementary(k).members(sys);
    let band = Domain::Band(k - 1).members(sys);
    Ok(first_failure(&hs, &band, &band, |a, v, w| {
        let x = &a[k];
        let lhs = mul::phi_ext(sys, k, x, &mul::mu(sys, v, w)).expect("rank below k");
        let pv = mul::phi_ext(sys, k, x, v).expect("rank below k");
        let pw = mul::phi_ext(sys, k, x, w).expect("rank below k");
        (lhs, mul::mu(sys, &pv, &pw))
    }))
}

/// `φ_{ab}(w) = φ_a(φ_b(w))` for `a, b ∈ H_k`, `w ∈ R_{k-1}`.
pub fn check_phi_composition(sys: &TotalSystem, k: usize, caps: SizeCaps) -> Result<CheckResult, AssocError> {
    check_phi_level(sys, k)?;
    check_cap(sys.band_order(k - 1), caps.pair)?;
    let hs = Domain::Elementary(k).members(sys);
    let band = Domain::Band(k - 1).members(sys);
    let g = sys.factor(k);
    Ok(first_failure(&hs, &hs, &band, |a, b, w| {
        let lhs = mul::phi_ext(sys, k, &g.mul(a[k], b[k]), w).expect("rank below k");
        let inner = mul::phi_ext(sys, k, &b[k], w).expect("rank below k");
        (lhs, mul::phi_ext(sys, k, &a[k], &inner).expect("rank below k"))
    }))
}

/// `A[k,j,i;l]`: equality of the `l`-th components only. The witness
/// carries the full tuples of both sides.
pub fn check_component(sys: &TotalSystem, k: usize, j: usize, i: usize, l: usize) -> Result<CheckResult, AssocError> {
    for x in [k, j, i, l] {
        check_level(sys, x)?;
    }
    if !(k >= j && j >= i) {
        return Err(AssocError::Order { k, j, i });
    }
    let (xs, ys, zs) =
        (Domain::Elementary(k).members(sys), Domain::Elementary(j).members(sys), Domain::Elementary(i).members(sys));
    for a in &xs {
        for b in &ys {
            for c in &zs {
                let lhs = mul::mu(sys, a, &mul::mu(sys, b, c));
                let rhs = mul::mu(sys, &mul::mu(sys, a, b), c);
                if lhs[l] != rhs[l] {
                    return Ok(CheckResult::fail(Witness { a: a.clone(), b: b.clone(), c: c.clone(), lhs, rhs }));
                }
            }
        }
    }
    Ok(CheckResult::pass())
}

/// Elements `(a, b, c)` of a witness, read off at their levels.
pub fn witness_elements(w: &Witness, k: usize, j: usize, i: usize) -> (Elem, Elem, Elem) {
    (w.a[k], w.b[j], w.c[i])
}
