//! Maps out of a semidirect product assembled from one map per factor, and
//! the conditions under which they are homomorphisms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assoc::{self, SizeCaps};
use crate::group::{Elem, FiniteGroup, GroupError};
use crate::mul::{self, TupleCodec};
use crate::system::TotalSystem;
use crate::tuple::ElemTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("{found} component maps for {expected} factors")]
    ArityMismatch { expected: usize, found: usize },
    #[error("map {index} has {found} values, H_{index} has order {expected}")]
    MapLength { index: usize, expected: usize, found: usize },
    #[error("map {index} sends {x} to {value}, outside the target of order {order}")]
    ValueOutOfRange { index: usize, x: Elem, value: Elem, order: usize },
    #[error("indices must satisfy r >= k >= j >= 1, got k={k}, j={j} with r={r}")]
    Index { k: usize, j: usize, r: usize },
    #[error("component map f_{0} is not a homomorphism")]
    ComponentNotHom(usize),
    #[error("the target is not a group")]
    TargetNotGroup,
    #[error("the system is not associative: {0} fails")]
    NotAssociative(String),
    #[error("domain of size {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("target: {0}")]
    Target(String),
}

/// A finite monoid given by its table: associative, with a two-sided unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inv: Option<Vec<Elem>>,
}

impl FiniteMonoid {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, HomError> {
        let order = rows.len();
        let bad = |m: String| HomError::Target(m);
        if order == 0 {
            return Err(bad("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(bad(format!("row {x} has {} entries, expected {order}", row.len())));
            }
            for &v in row {
                if v >= order {
                    return Err(bad(format!("entry {v} in row {x} is out of range")));
                }
                table.push(Elem::from(v));
            }
        }
        let at = |x: usize, y: usize| table[x * order + y].idx();
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| bad("no two-sided identity".into()))?;
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(bad(format!("not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        let inv: Option<Vec<Elem>> = (0..order)
            .map(|x| (0..order).find(|&y| at(x, y) == identity && at(y, x) == identity).map(Elem::from))
            .collect();
        Ok(FiniteMonoid { order, table, identity: Elem::from(identity), inv })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x.idx() * self.order + y.idx()]
    }

    pub fn is_group(&self) -> bool {
        self.inv.is_some()
    }

    pub fn inv(&self, x: Elem) -> Option<Elem> {
        self.inv.as_ref().map(|v| v[x.idx()])
    }

    /// `x y x⁻¹ y⁻¹`, for group targets.
    pub fn commutator(&self, x: Elem, y: Elem) -> Option<Elem> {
        Some(self.mul(self.mul(self.mul(x, y), self.inv(x)?), self.inv(y)?))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| (0..self.order).map(|y| self.table[x * self.order + y].idx()).collect()).collect()
    }
}

impl From<&FiniteGroup> for FiniteMonoid {
    fn from(g: &FiniteGroup) -> Self {
        FiniteMonoid::from_table(&g.rows()).expect("a group is a monoid")
    }
}

impl TryFrom<&FiniteMonoid> for FiniteGroup {
    type Error = GroupError;

    fn try_from(m: &FiniteMonoid) -> Result<Self, GroupError> {
        FiniteGroup::from_table(&m.rows())
    }
}

/// `f(h_1 ⋯ h_r) = f_1(h_1) ⋯ f_r(h_r)`.
#[derive(Debug, Clone)]
pub struct AssembledMap {
    pub system: TotalSystem,
    pub target: FiniteMonoid,
    /// `components[i - 1][x]` is `f_i(x)`.
    pub components: Vec<Vec<Elem>>,
}

pub fn assemble(
    system: TotalSystem,
    target: FiniteMonoid,
    components: Vec<Vec<Elem>>,
) -> Result<AssembledMap, HomError> {
    if components.len() != system.r() {
        return Err(HomError::ArityMismatch { expected: system.r(), found: components.len() });
    }
    for (n, f) in components.iter().enumerate() {
        let index = n + 1;
        let expected = system.factor(index).order();
        if f.len() != expected {
            return Err(HomError::MapLength { index, expected, found: f.len() });
        }
        if let Some((x, &value)) = f.iter().enumerate().find(|(_, v)| v.idx() >= target.order()) {
            return Err(HomError::ValueOutOfRange { index, x: Elem::from(x), value, order: target.order() });
        }
    }
    Ok(AssembledMap { system, target, components })
}

/// A pair with `f(a·b) = lhs ≠ rhs = f(a)·f(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomWitness {
    pub a: ElemTuple,
    pub b: ElemTuple,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomResult {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<HomWitness>,
}

impl AssembledMap {
    pub fn r(&self) -> usize {
        self.system.r()
    }

    pub fn component(&self, level: usize, x: Elem) -> Elem {
        self.components[level - 1][x.idx()]
    }

    pub fn eval(&self, t: &ElemTuple) -> Elem {
        t.levels().fold(self.target.identity(), |acc, (l, &x)| self.target.mul(acc, self.component(l, x)))
    }

    /// Walks `us × vs` in order and reports the first pair with
    /// `f(u·v) ≠ f(u)·f(v)`.
    fn first_failure(&self, us: &[ElemTuple], vs: &[ElemTuple]) -> HomResult {
        for a in us {
            let fa = self.eval(a);
            for b in vs {
                let lhs = self.eval(&mul::mu(&self.system, a, b));
                let rhs = self.target.mul(fa, self.eval(b));
                if lhs != rhs {
                    let witness = HomWitness { a: a.clone(), b: b.clone(), lhs, rhs };
                    return HomResult { holds: false, witness: Some(witness) };
                }
            }
        }
        HomResult { holds: true, witness: None }
    }

    fn elementary(&self, k: usize) -> Vec<ElemTuple> {
        self.system.factor(k).elements().map(|x| mul::elementary(&self.system, k, x)).collect()
    }

    fn band(&self, k: usize, caps: SizeCaps) -> Result<Vec<ElemTuple>, HomError> {
        let size = self.system.band_order(k);
        if size > caps.pair {
            return Err(HomError::SizeCapExceeded { size, cap: caps.pair });
        }
        Ok(TupleCodec::for_band(&self.system, k).tuples().collect())
    }
}

/// `H[f;k,j]`: `f(a_k·b_j) = f(a_k)·f(b_j)` for all `a_k ∈ H_k`, `b_j ∈ H_j`.
pub fn check_hom_pair(m: &AssembledMap, k: usize, j: usize) -> Result<HomResult, HomError> {
    if !(j >= 1 && j <= k && k <= m.r()) {
        return Err(HomError::Index { k, j, r: m.r() });
    }
    Ok(m.first_failure(&m.elementary(k), &m.elementary(j)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomPairResult {
    pub k: usize,
    pub j: usize,
    #[serde(flatten)]
    pub result: HomResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub holds: bool,
    pub pairs: Vec<HomPairResult>,
}

/// Every `H[f;k,j]` with `r ≥ k ≥ j ≥ 1`, ordered by `k` then `j`.
pub fn check_hom_all(m: &AssembledMap) -> HomReport {
    let mut pairs = Vec::new();
    for k in 1..=m.r() {
        for j in 1..=k {
            let result = check_hom_pair(m, k, j).expect("indices in range");
            pairs.push(HomPairResult { k, j, result });
        }
    }
    HomReport { holds: pairs.iter().all(|p| p.result.holds), pairs }
}

/// `H[[f;k]]`: `f` is multiplicative on `R_k × R_k`, checked exhaustively.
pub fn brute_force_band(m: &AssembledMap, k: usize, caps: SizeCaps) -> Result<HomResult, HomError> {
    if !(k >= 1 && k <= m.r()) {
        return Err(HomError::Index { k, j: k, r: m.r() });
    }
    let all = m.band(k, caps)?;
    Ok(m.first_failure(&all, &all))
}

/// `f` is multiplicative on all of `G × G`.
pub fn brute_force_hom(m: &AssembledMap, caps: SizeCaps) -> Result<HomResult, HomError> {
    brute_force_band(m, m.r(), caps)
}

/// `f([a_k, b_j]) ≠ [f(a_k), f(b_j)]`, or the same for the action form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorWitness {
    pub k: usize,
    pub j: usize,
    pub a: Elem,
    pub b: Elem,
    pub lhs: Elem,
    pub rhs: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CommutatorWitness>,
    /// Pairs `(k, j)` with `^{H_k} H_j ⊆ H_j`, where the action form
    /// `f(^{a}b) = ^{f(a)} f(b)` was checked as well.
    pub action_pairs: Vec<(usize, usize)>,
    /// Agreement of the action form with the commutator form on those pairs.
    pub action_form_agrees: bool,
}

fn component_is_hom(m: &AssembledMap, level: usize) -> bool {
    let h = m.system.factor(level);
    h.elements().all(|x| {
        h.elements()
            .all(|y| m.component(level, h.mul(x, y)) == m.target.mul(m.component(level, x), m.component(level, y)))
    })
}

/// Commutator criterion: for an associative system, a group target and
/// component homomorphisms, `f` is a homomorphism iff it preserves every
/// `[a_k, b_j]` with `k > j`.
pub fn check_commutator_criterion(m: &AssembledMap) -> Result<CommutatorReport, HomError> {
    if !m.target.is_group() {
        return Err(HomError::TargetNotGroup);
    }
    if let Some(level) = (1..=m.r()).find(|&l| !component_is_hom(m, l)) {
        return Err(HomError::ComponentNotHom(level));
    }
    if let Some((c, _)) = assoc::check_all_elementary(&m.system).into_iter().find(|(_, res)| !res.holds) {
        return Err(HomError::NotAssociative(c.to_string()));
    }
    let t = &m.target;
    let mut witness = None;
    let mut action_pairs = Vec::new();
    let mut action_form_agrees = true;
    for k in 2..=m.r() {
        for j in 1..k {
            let hk = m.system.factor(k);
            let hj = m.system.factor(j);
            let stable = (1..j).all(|i| {
                hk.elements()
                    .all(|a| hj.elements().all(|b| m.system.factor(i).is_identity(m.system.bracket(k, j, i, a, b))))
            });
            let mut pair_holds = true;
            let mut action_holds = true;
            for a in hk.elements() {
                for b in hj.elements() {
                    let (fa, fb) = (m.component(k, a), m.component(j, b));
                    let c = mul::commutator_bracket(&m.system, k, a, j, b).expect("k > j");
                    let lhs = m.eval(&c);
                    let rhs = t.commutator(fa, fb).expect("group target");
                    if lhs != rhs {
                        pair_holds = false;
                        if witness.is_none() {
                            witness = Some(CommutatorWitness { k, j, a, b, lhs, rhs });
                        }
                    }
                    if stable {
                        let moved = m.component(j, m.system.act(k, j, a, b));
                        let conj = t.mul(t.mul(fa, fb), t.inv(fa).expect("group target"));
                        action_holds &= moved == conj;
                    }
                }
            }
            if stable {
                action_pairs.push((k, j));
                action_form_agrees &= pair_holds == action_holds;
            }
        }
    }
    Ok(CommutatorReport { holds: witness.is_none(), witness, action_pairs, action_form_agrees })
}
