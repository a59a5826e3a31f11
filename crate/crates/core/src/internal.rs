//! Internal semidirect products: recognising `G = H_1 ⋊ … ⋊ H_r` inside a
//! concrete group and reading off its total system.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assoc::{self, AssocError, SizeCaps};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::mul::{self, TupleCodec};
use crate::system::{SystemError, TotalSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InternalError {
    #[error("no factors given")]
    NoFactors,
    #[error("factor {index} is a subgroup of a group of order {found}, not {expected}")]
    ParentMismatch { index: usize, found: usize, expected: usize },
    #[error("the factors generate a subgroup of order {generated}, not the whole group of order {order}")]
    NotGenerating { generated: usize, order: usize },
    #[error("not an internal semidirect product: {0}")]
    NotAnSdp(Failure),
    #[error("h_{k} h_{j} for ({a}, {b}) has a nontrivial component at level {level}")]
    ShapeViolation { k: usize, j: usize, a: Elem, b: Elem, level: usize },
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Assoc(#[from] AssocError),
}

/// A group together with an ordered list of its subgroups.
#[derive(Debug, Clone)]
pub struct SdpCandidate {
    pub group: FiniteGroup,
    pub factors: Vec<Subgroup>,
}

impl SdpCandidate {
    pub fn new(group: FiniteGroup, factors: Vec<Subgroup>) -> Result<Self, InternalError> {
        if factors.is_empty() {
            return Err(InternalError::NoFactors);
        }
        for (n, h) in factors.iter().enumerate() {
            if h.parent_order() != group.order() {
                return Err(InternalError::ParentMismatch {
                    index: n + 1,
                    found: h.parent_order(),
                    expected: group.order(),
                });
            }
        }
        Ok(SdpCandidate { group, factors })
    }

    /// Factors given by generators.
    pub fn generated_by(group: FiniteGroup, gens: &[Vec<Elem>]) -> Result<Self, InternalError> {
        let factors = gens.iter().map(|g| group.generated_subgroup(g.iter().copied())).collect();
        Self::new(group, factors)
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    /// The set `H_1 H_2 … H_i`.
    pub fn prefix_product(&self, i: usize) -> BTreeSet<Elem> {
        let sets: Vec<BTreeSet<Elem>> = self.factors[..i].iter().map(Subgroup::to_set).collect();
        let refs: Vec<&BTreeSet<Elem>> = sets.iter().collect();
        self.group.complex_product(&refs)
    }

    /// Same candidate with the factors permuted: `order[n]` is the old index
    /// (0-based) of the new `n`-th factor.
    pub fn reordered(&self, order: &[usize]) -> Self {
        SdpCandidate { group: self.group.clone(), factors: order.iter().map(|&n| self.factors[n].clone()).collect() }
    }
}

/// The first condition that fails, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "lowercase")]
pub enum Failure {
    /// `H_1 … H_i` is not closed: `x y` falls outside it.
    Closure { i: usize, x: Elem, y: Elem },
    /// `H_1 … H_i` is a subgroup but `g x g⁻¹` leaves it.
    Normality { i: usize, g: Elem, x: Elem },
    /// `missing` is not a product `h_1 … h_r`.
    Surjectivity { missing: Elem },
    /// `h ≠ 1` lies in `H_1 … H_i ∩ H_{i+1}`.
    Uniqueness { i: usize, h: Elem },
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Closure { i, x, y } => write!(f, "H_1…H_{i} is not closed ({x}·{y})"),
            Failure::Normality { i, g, x } => write!(f, "H_1…H_{i} is not normal ({g} conjugates {x} outside)"),
            Failure::Surjectivity { missing } => write!(f, "{missing} is not a product of the factors"),
            Failure::Uniqueness { i, h } => write!(f, "{h} lies in H_1…H_{i} and H_{}", i + 1),
        }
    }
}

/// Outcome of [`check_internal_sdp`]. On success `factorization[g]` lists the
/// components `h_1, …, h_r` of `g` (as elements of `G`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdpReport {
    pub is_sdp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Vec<Vec<Elem>>>,
}

fn closure_witness(g: &FiniteGroup, set: &BTreeSet<Elem>) -> Option<(Elem, Elem)> {
    for &x in set {
        for &y in set {
            if !set.contains(&g.mul(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Subgroup closure for every prefix first, then normality.
fn condition_one(cand: &SdpCandidate) -> Option<Failure> {
    let g = &cand.group;
    let prefixes: Vec<BTreeSet<Elem>> = (1..=cand.r()).map(|i| cand.prefix_product(i)).collect();
    for (n, set) in prefixes.iter().enumerate() {
        if let Some((x, y)) = closure_witness(g, set) {
            return Some(Failure::Closure { i: n + 1, x, y });
        }
    }
    for (n, set) in prefixes.into_iter().enumerate() {
        let sub = g.subgroup(set).expect("closed finite subset containing 1");
        if let Some((h, x)) = g.normality_witness(&sub) {
            return Some(Failure::Normality { i: n + 1, g: h, x });
        }
    }
    None
}

/// Every product `h_1 h_2 … h_r`, with its components, in lexicographic order
/// of the components.
fn products(cand: &SdpCandidate) -> Vec<(Elem, Vec<Elem>)> {
    let mut out = vec![(cand.group.identity(), Vec::new())];
    for h in &cand.factors {
        let mut next = Vec::with_capacity(out.len() * h.order());
        for (p, comps) in &out {
            for x in h.iter() {
                let mut c = comps.clone();
                c.push(x);
                next.push((cand.group.mul(*p, x), c));
            }
        }
        out = next;
    }
    out
}

/// Checks conditions 1, 2a and 2b in that order and reports the first
/// failure.
pub fn check_internal_sdp(cand: &SdpCandidate) -> SdpReport {
    let fail = |f| SdpReport { is_sdp: false, failed: Some(f), factorization: None };
    if let Some(f) = condition_one(cand) {
        return fail(f);
    }
    let g = &cand.group;
    let all = cand.prefix_product(cand.r());
    if let Some(missing) = g.elements().find(|x| !all.contains(x)) {
        return fail(Failure::Surjectivity { missing });
    }
    for i in 1..cand.r() {
        let prefix = cand.prefix_product(i);
        if let Some(h) = cand.factors[i].iter().find(|&h| h != g.identity() && prefix.contains(&h)) {
            return fail(Failure::Uniqueness { i, h });
        }
    }
    let mut table = vec![Vec::new(); g.order()];
    for (p, comps) in products(cand) {
        table[p.idx()] = comps;
    }
    SdpReport { is_sdp: true, failed: None, factorization: Some(table) }
}

/// The original definition read literally: condition 1, and the product map
/// `H_1 × … × H_r → G` is a bijection.
pub fn check_definition(cand: &SdpCandidate) -> bool {
    if condition_one(cand).is_some() {
        return false;
    }
    let mut hit = vec![false; cand.group.order()];
    for (p, _) in products(cand) {
        if std::mem::replace(&mut hit[p.idx()], true) {
            return false;
        }
    }
    hit.into_iter().all(|b| b)
}

/// `x ∈ H_j`, `h ∈ H_i` with `value` outside `H_1 … H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermWitness {
    pub i: usize,
    pub j: usize,
    pub value: Elem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermwiseReport {
    /// `^{H_j} H_i ⊆ H_1 … H_i` for all `i < j`.
    pub conjugates: bool,
    /// `[H_j, H_i] ⊆ H_1 … H_i` for all `i < j`.
    pub commutators: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugate_witness: Option<TermWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator_witness: Option<TermWitness>,
}

/// Term-by-term form of condition 1, for factors that generate `G`.
pub fn check_termwise(cand: &SdpCandidate) -> Result<TermwiseReport, InternalError> {
    let g = &cand.group;
    let generated = g.generated_subgroup(cand.factors.iter().flat_map(|h| h.members()));
    if generated.order() != g.order() {
        return Err(InternalError::NotGenerating { generated: generated.order(), order: g.order() });
    }
    let mut conjugate_witness = None;
    let mut commutator_witness = None;
    'outer: for i in 1..cand.r() {
        let prefix = cand.prefix_product(i);
        let hi = cand.factors[i - 1].to_set();
        for j in i + 1..=cand.r() {
            let hj = cand.factors[j - 1].to_set();
            if conjugate_witness.is_none() {
                'conj: for &x in &hj {
                    for &h in &hi {
                        let value = g.conjugate(x, h);
                        if !prefix.contains(&value) {
                            conjugate_witness = Some(TermWitness { i, j, value, x: Some(x), h: Some(h) });
                            break 'conj;
                        }
                    }
                }
            }
            if commutator_witness.is_none() {
                let sub = g.commutator_subgroup(&hj, &hi);
                let outside = sub.iter().find(|v| !prefix.contains(v));
                if let Some(value) = outside {
                    commutator_witness = Some(TermWitness { i, j, value, x: None, h: None });
                }
            }
            if conjugate_witness.is_some() && commutator_witness.is_some() {
                break 'outer;
            }
        }
    }
    Ok(TermwiseReport {
        conjugates: conjugate_witness.is_none(),
        commutators: commutator_witness.is_none(),
        conjugate_witness,
        commutator_witness,
    })
}

/// Each `H_1 … H_i` is a subgroup, normal in `H_1 … H_{i+1}`, meeting
/// `H_{i+1}` trivially, and `H_1 … H_r = G`.
pub fn check_iterated_2sdp(cand: &SdpCandidate) -> bool {
    let g = &cand.group;
    let mut prev: Option<BTreeSet<Elem>> = None;
    for i in 1..=cand.r() {
        let set = cand.prefix_product(i);
        if closure_witness(g, &set).is_some() {
            return false;
        }
        if let Some(p) = &prev {
            let next = &cand.factors[i - 1];
            if next.iter().any(|h| h != g.identity() && p.contains(&h)) {
                return false;
            }
            let normal = set.iter().all(|&x| p.iter().all(|&y| p.contains(&g.conjugate(x, y))));
            if !normal {
                return false;
            }
        }
        prev = Some(set);
    }
    prev.is_some_and(|p| p.len() == g.order())
}

/// A candidate that passed [`check_internal_sdp`], with its factorization
/// table and the factors as standalone groups.
#[derive(Debug, Clone)]
pub struct InternalSdp {
    cand: SdpCandidate,
    table: Vec<Vec<Elem>>,
    // per factor: the standalone group, local → parent, parent → local
    locals: Vec<(FiniteGroup, Vec<Elem>, Vec<Option<Elem>>)>,
}

impl InternalSdp {
    pub fn new(cand: SdpCandidate) -> Result<Self, InternalError> {
        let report = check_internal_sdp(&cand);
        let table = match (report.factorization, report.failed) {
            (Some(t), _) => t,
            (None, Some(f)) => return Err(InternalError::NotAnSdp(f)),
            (None, None) => unreachable!("a report either factors or fails"),
        };
        let locals = cand
            .factors
            .iter()
            .map(|h| {
                let (grp, embed) = h.to_group(&cand.group);
                let mut back = vec![None; cand.group.order()];
                for (n, x) in embed.iter().enumerate() {
                    back[x.idx()] = Some(Elem::from(n));
                }
                (grp, embed, back)
            })
            .collect();
        Ok(InternalSdp { cand, table, locals })
    }

    pub fn candidate(&self) -> &SdpCandidate {
        &self.cand
    }

    /// The unique `(h_1, …, h_r)` with `g = h_1 … h_r`, as elements of `G`.
    pub fn factorize(&self, g: Elem) -> &[Elem] {
        &self.table[g.idx()]
    }

    /// Same, in the local indexing of each factor group.
    pub fn factorize_local(&self, g: Elem) -> Vec<Elem> {
        self.factorize(g).iter().enumerate().map(|(n, &x)| self.to_local(n + 1, x)).collect()
    }

    pub fn factor_group(&self, level: usize) -> &FiniteGroup {
        &self.locals[level - 1].0
    }

    fn to_local(&self, level: usize, x: Elem) -> Elem {
        self.locals[level - 1].2[x.idx()].expect("component lies in its factor")
    }

    pub fn to_parent(&self, level: usize, x: Elem) -> Elem {
        self.locals[level - 1].1[x.idx()]
    }

    /// Reads `φ_k^j` and the brackets off the factorizations of `h_k h_j`.
    pub fn extract_total_system(&self) -> Result<TotalSystem, InternalError> {
        let r = self.cand.r();
        let g = &self.cand.group;
        for k in 1..=r {
            for j in 1..k {
                for a in self.factor_group(k).elements() {
                    for b in self.factor_group(j).elements() {
                        let (pa, pb) = (self.to_parent(k, a), self.to_parent(j, b));
                        let comps = self.factorize(g.mul(pa, pb));
                        for (n, &c) in comps.iter().enumerate() {
                            let level = n + 1;
                            let ok = if level == k { c == pa } else { level <= j || c == g.identity() };
                            if !ok {
                                return Err(InternalError::ShapeViolation { k, j, a, b, level });
                            }
                        }
                    }
                }
            }
        }
        let component = |k: usize, j: usize, level: usize, a: Elem, b: Elem| {
            let product = g.mul(self.to_parent(k, a), self.to_parent(j, b));
            self.to_local(level, self.factorize(product)[level - 1])
        };
        let factors = (1..=r).map(|k| self.factor_group(k).clone()).collect();
        Ok(TotalSystem::from_fns(factors, |k, j, a, b| component(k, j, j, a, b), component)?)
    }

    /// The product map `(h_1, …, h_r) ↦ h_1 … h_r` from the external product
    /// of the extracted system onto `G`, as a table indexed like
    /// [`TupleCodec`].
    fn embedding(&self, sys: &TotalSystem) -> Vec<Elem> {
        let g = &self.cand.group;
        TupleCodec::new(sys)
            .tuples()
            .map(|t| t.levels().fold(g.identity(), |acc, (level, &x)| g.mul(acc, self.to_parent(level, x))))
            .collect()
    }
}

pub fn factorize(cand: &SdpCandidate, g: Elem) -> Result<Vec<Elem>, InternalError> {
    Ok(InternalSdp::new(cand.clone())?.factorize(g).to_vec())
}

pub fn extract_total_system(cand: &SdpCandidate) -> Result<TotalSystem, InternalError> {
    InternalSdp::new(cand.clone())?.extract_total_system()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundtripReport {
    pub bijective: bool,
    pub homomorphism: bool,
    pub associative: bool,
    pub normalized: bool,
}

impl RoundtripReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.homomorphism && self.associative && self.normalized
    }
}

/// Rebuilds `G` externally from its extracted system and compares laws.
pub fn roundtrip_report(cand: &SdpCandidate, caps: SizeCaps) -> Result<RoundtripReport, InternalError> {
    let sdp = InternalSdp::new(cand.clone())?;
    let sys = sdp.extract_total_system()?;
    let n = sys.order();
    if n > caps.pair {
        return Err(AssocError::SizeCapExceeded { size: n, cap: caps.pair }.into());
    }
    let embed = sdp.embedding(&sys);
    let mut seen = vec![false; cand.group.order()];
    for &x in &embed {
        seen[x.idx()] = true;
    }
    let bijective = embed.len() == cand.group.order() && seen.into_iter().all(|b| b);
    let codec = TupleCodec::new(&sys);
    let all: Vec<_> = codec.tuples().collect();
    let g = &cand.group;
    let homomorphism = all.iter().enumerate().all(|(x, u)| {
        all.iter().enumerate().all(|(y, v)| embed[codec.encode(&mul::mu(&sys, u, v))] == g.mul(embed[x], embed[y]))
    });
    let associative = assoc::brute_force_associative(&sys, caps)?.holds;
    Ok(RoundtripReport { bijective, homomorphism, associative, normalized: sys.is_normalized() })
}

pub fn roundtrip_verify(cand: &SdpCandidate) -> Result<bool, InternalError> {
    Ok(roundtrip_report(cand, SizeCaps::default())?.ok())
}
