//! Finite groups given by explicit multiplication tables.
//!
//! Elements are dense indices `0..order`. Every [`FiniteGroup`] is validated
//! on construction (identity, inverses and full associativity), so the rest of
//! the crate can treat the table as a genuine group law.

use std::collections::BTreeSet;
use std::fmt;

use bitvec::vec::BitVec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An element of a finite group, stored as its row index in the table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for Elem {
    fn from(i: usize) -> Self {
        Elem(i as u32)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({row},{col}) = {value} is out of range for order {order}")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
}

/// A finite group: multiplication table plus derived identity and inverses.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inv: Vec<Elem>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("identity", &self.identity).finish()
    }
}

/// Row-major table in the on-disk group file layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a square table and derives identity and inverses.
    ///
    /// Checks run in the order identity, inverses, associativity; the error
    /// names the first violation found in index order.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::OutOfRange { row, col, value, order });
                }
                table.push(Elem::from(value));
            }
        }
        Self::from_flat(order, table)
    }

    /// Builds a group from a closure `mul(x, y)` over indices `0..order`.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        let rows: Vec<Vec<usize>> = (0..order).map(|x| (0..order).map(|y| mul(x, y)).collect()).collect();
        Self::from_table(&rows)
    }

    fn from_flat(order: usize, table: Vec<Elem>) -> Result<Self, GroupError> {
        let at = |x: usize, y: usize| table[x * order + y];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x).idx() == x && at(x, e).idx() == x))
            .ok_or(GroupError::NoIdentity)?;
        let identity = Elem::from(identity);
        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(GroupError::NoInverse(Elem::from(x)))?;
            inv.push(Elem::from(y));
        }
        for x in 0..order {
            for y in 0..order {
                let xy = at(x, y).idx();
                for z in 0..order {
                    if at(xy, z) != at(x, at(y, z).idx()) {
                        return Err(GroupError::NotAssociative(x.into(), y.into(), z.into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, table, identity, inv })
    }

    pub fn from_file(file: &GroupFile) -> Result<Self, GroupError> {
        if file.order != file.table.len() {
            return Err(GroupError::NotSquare { row: file.table.len(), len: file.table.len(), order: file.order });
        }
        Self::from_table(&file.table)
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile { order: self.order, table: self.rows() }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| (0..self.order).map(|y| self.table[x * self.order + y].idx()).collect()).collect()
    }

    /// The trivial group of order 1.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, table: vec![Elem(0)], identity: Elem(0), inv: vec![Elem(0)] }
    }

    /// The cyclic group of order `n`, with `k` represented by index `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        Self::from_fn(n, |x, y| (x + y) % n).expect("cyclic table is a group")
    }

    /// Direct product with lexicographic element indices `x * |other| + y`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.order;
        Self::from_fn(self.order * m, |p, q| {
            let (a, b) = (p / m, p % m);
            let (c, d) = (q / m, q % m);
            self.mul(a.into(), c.into()).idx() * m + other.mul(b.into(), d.into()).idx()
        })
        .expect("direct product of groups is a group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x.idx() * self.order + y.idx()]
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x.idx()]
    }

    #[inline]
    pub fn is_identity(&self, x: Elem) -> bool {
        x == self.identity
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.idx() < self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    /// `x y x⁻¹`
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// `x y x⁻¹ y⁻¹`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.conjugate(x, y), self.inv(y))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Setwise product `S_1 S_2 … S_n`, taken in list order.
    pub fn complex_product(&self, subsets: &[&BTreeSet<Elem>]) -> BTreeSet<Elem> {
        let mut acc = BTreeSet::from([self.identity]);
        for s in subsets {
            let mut next = BTreeSet::new();
            for &x in &acc {
                for &y in s.iter() {
                    next.insert(self.mul(x, y));
                }
            }
            acc = next;
        }
        acc
    }

    /// `{ k h k⁻¹ : k ∈ K, h ∈ H }`
    pub fn conjugate_set(&self, k: &BTreeSet<Elem>, h: &BTreeSet<Elem>) -> BTreeSet<Elem> {
        let mut out = BTreeSet::new();
        for &x in k {
            for &y in h {
                out.insert(self.conjugate(x, y));
            }
        }
        out
    }

    /// Closure of `gens ∪ {1}` under multiplication. Finite, so this is also
    /// closed under inverses.
    pub fn generated_subgroup<I: IntoIterator<Item = Elem>>(&self, gens: I) -> Subgroup {
        let gens: Vec<Elem> = gens.into_iter().collect();
        let mut members: BitVec = BitVec::repeat(false, self.order);
        members.set(self.identity.idx(), true);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !members[y.idx()] {
                    members.set(y.idx(), true);
                    frontier.push(y);
                }
            }
        }
        Subgroup { members }
    }

    /// The subgroup generated by all commutators `k h k⁻¹ h⁻¹`.
    pub fn commutator_subgroup(&self, k: &BTreeSet<Elem>, h: &BTreeSet<Elem>) -> Subgroup {
        let mut gens = BTreeSet::new();
        for &x in k {
            for &y in h {
                gens.insert(self.commutator(x, y));
            }
        }
        self.generated_subgroup(gens)
    }

    /// Validates that `elems` is closed under multiplication and inversion and
    /// contains the identity.
    pub fn subgroup<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Option<Subgroup> {
        let mut members: BitVec = BitVec::repeat(false, self.order);
        for x in elems {
            if !self.contains(x) {
                return None;
            }
            members.set(x.idx(), true);
        }
        let sub = Subgroup { members };
        if !sub.contains(self.identity) {
            return None;
        }
        for x in sub.iter() {
            if !sub.contains(self.inv(x)) {
                return None;
            }
            for y in sub.iter() {
                if !sub.contains(self.mul(x, y)) {
                    return None;
                }
            }
        }
        Some(sub)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: BitVec::repeat(true, self.order) }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.generated_subgroup(std::iter::empty())
    }

    /// `g H g⁻¹ ⊆ H` for every `g`.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_witness(h).is_none()
    }

    /// First `(g, x)` in index order with `g x g⁻¹ ∉ H`.
    pub fn normality_witness(&self, h: &Subgroup) -> Option<(Elem, Elem)> {
        for g in self.elements() {
            for x in h.iter() {
                if !h.contains(self.conjugate(g, x)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut n = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }
}

/// A subgroup of some parent [`FiniteGroup`], as a membership bitset.
///
/// The parent is not stored; operations that need the group law take it as an
/// argument.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitVec,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

impl Subgroup {
    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.get(x.idx()).map(|b| *b).unwrap_or(false)
    }

    pub fn order(&self) -> usize {
        self.members.count_ones()
    }

    pub fn parent_order(&self) -> usize {
        self.members.len()
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter_ones().map(Elem::from)
    }

    pub fn members(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn to_set(&self) -> BTreeSet<Elem> {
        self.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// The subgroup as a standalone group. Local index `i` is the `i`-th
    /// member in increasing parent order; the returned vector maps local
    /// indices back into the parent.
    pub fn to_group(&self, parent: &FiniteGroup) -> (FiniteGroup, Vec<Elem>) {
        let embed = self.members();
        let mut local = vec![usize::MAX; parent.order()];
        for (i, x) in embed.iter().enumerate() {
            local[x.idx()] = i;
        }
        let group = FiniteGroup::from_fn(embed.len(), |a, b| local[parent.mul(embed[a], embed[b]).idx()])
            .expect("subgroup table is a group");
        (group, embed)
    }
}

/// Permutations of `0..n` in one-line notation, composed right to left:
/// `(p ∘ q)(x) = p(q(x))`.
pub type Perm = Vec<u8>;

pub fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// Permutation from disjoint cycles on 1-based points, e.g. `&[&[1, 2, 3]]` for
/// the 3-cycle `(123)`.
pub fn perm_from_cycles(n: usize, cycles: &[&[u8]]) -> Perm {
    let mut p: Perm = (0..n as u8).collect();
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            let y = cycle[(i + 1) % cycle.len()];
            p[(x - 1) as usize] = y - 1;
        }
    }
    p
}

/// A group table built from an explicit list of permutations, keeping the
/// permutations so tests can refer to elements by cycle notation.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Perm>,
}

impl PermGroup {
    /// The full symmetric group on `n` points, elements in lexicographic order
    /// of their one-line notation (so index 0 is the identity).
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Perm> = Vec::new();
        let mut current: Perm = (0..n as u8).collect();
        loop {
            perms.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        Self::from_perms(perms)
    }

    /// Closure of the given permutations under composition.
    pub fn generated(n: usize, gens: &[Perm]) -> Self {
        let id: Perm = (0..n as u8).collect();
        let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = compose(&p, g);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        Self::from_perms(seen.into_iter().collect())
    }

    fn from_perms(perms: Vec<Perm>) -> Self {
        let group = FiniteGroup::from_fn(perms.len(), |a, b| {
            let c = compose(&perms[a], &perms[b]);
            perms.iter().position(|p| *p == c).expect("permutation list is closed")
        })
        .expect("permutation composition is a group law");
        PermGroup { group, perms }
    }

    pub fn index_of(&self, p: &Perm) -> Option<Elem> {
        self.perms.iter().position(|q| q == p).map(Elem::from)
    }

    /// Element given by 1-based disjoint cycles.
    pub fn elem(&self, cycles: &[&[u8]]) -> Elem {
        let n = self.perms[0].len();
        self.index_of(&perm_from_cycles(n, cycles)).expect("permutation belongs to the group")
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All homomorphisms `src → dst`, as value tables indexed by `src` elements,
/// in lexicographic order of the tables. Returns `None` when the naive search
/// space `|dst|^(|src|-1)` exceeds `cap`.
pub fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup, cap: usize) -> Option<Vec<Vec<Elem>>> {
    let n = src.order();
    let m = dst.order();
    let space = (m as f64).powi(n.saturating_sub(1) as i32);
    if space > cap as f64 {
        return None;
    }
    let free: Vec<Elem> = src.elements().filter(|&x| x != src.identity()).collect();
    let mut out = Vec::new();
    let mut values = vec![dst.identity(); n];
    let mut counters = vec![0usize; free.len()];
    loop {
        for (slot, &x) in free.iter().enumerate() {
            values[x.idx()] = Elem::from(counters[slot]);
        }
        let is_hom = src
            .elements()
            .all(|x| src.elements().all(|y| values[src.mul(x, y).idx()] == dst.mul(values[x.idx()], values[y.idx()])));
        if is_hom {
            out.push(values.clone());
        }
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return Some(out);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < m {
                break;
            }
            counters[pos] = 0;
        }
    }
}

/// The automorphism group of `g` as a group of permutation tables. Element
/// `i` of the returned group acts by `autos[i]`; composition is
/// `(σ τ)(x) = σ(τ(x))`. `None` if `|g|` is too large for brute force.
pub fn automorphism_group(g: &FiniteGroup) -> Option<(FiniteGroup, Vec<Vec<Elem>>)> {
    if g.order() > 8 {
        return None;
    }
    let n = g.order();
    let mut autos = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    loop {
        let ok = g.elements().all(|x| {
            g.elements()
                .all(|y| p[g.mul(x, y).idx()] as usize == g.mul(Elem(p[x.idx()] as u32), Elem(p[y.idx()] as u32)).idx())
        });
        if ok {
            autos.push(p.iter().map(|&v| Elem(v as u32)).collect::<Vec<_>>());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    let group = FiniteGroup::from_fn(autos.len(), |a, b| {
        let c: Vec<Elem> = autos[b].iter().map(|x| autos[a][x.idx()]).collect();
        autos.iter().position(|s| *s == c).expect("automorphisms are closed under composition")
    })
    .expect("automorphisms form a group");
    Some((group, autos))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::symmetric(3)
    }

    fn set(xs: &[Elem]) -> BTreeSet<Elem> {
        xs.iter().copied().collect()
    }

    #[test]
    fn z2_table_is_valid() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), Elem(0));
    }

    #[test]
    fn missing_inverse_is_reported() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse(Elem(1)));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(FiniteGroup::from_table(&[]).unwrap_err(), GroupError::Empty);
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]]).unwrap_err(),
            GroupError::NotSquare { row: 1, .. }
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]).unwrap_err(),
            GroupError::OutOfRange { row: 0, col: 1, value: 2, .. }
        ));
        // x*y = 2x - y mod 3 style quasigroup: no identity
        assert_eq!(FiniteGroup::from_fn(3, |x, y| (2 * x + 3 - y) % 3).unwrap_err(), GroupError::NoIdentity);
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // The smallest non-associative loop (order 5) with identity 0.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&t).unwrap_err(), GroupError::NotAssociative(..)));
    }

    #[test]
    fn s3_is_a_nonabelian_group_of_order_6() {
        let s = s3();
        assert_eq!(s.group.order(), 6);
        assert!(!s.group.is_abelian());
        assert_eq!(s.group.identity(), Elem(0));
        // rebuilding from the stored table validates all axioms again
        assert!(FiniteGroup::from_table(&s.group.rows()).is_ok());
    }

    #[test]
    fn complex_products_in_s3() {
        let s = s3();
        let g = &s.group;
        let e = set(&[g.identity()]);
        assert_eq!(g.complex_product(&[&e, &e]), e);
        let c3 = g.generated_subgroup([s.elem(&[&[1, 2, 3]])]).to_set();
        let t = g.generated_subgroup([s.elem(&[&[1, 2]])]).to_set();
        assert_eq!(g.complex_product(&[&c3, &t]).len(), 6);
        assert_eq!(g.complex_product(&[&t, &t]), t);
    }

    #[test]
    fn normality_in_s3() {
        let s = s3();
        let g = &s.group;
        let a3 = g.generated_subgroup([s.elem(&[&[1, 2, 3]])]);
        let t = g.generated_subgroup([s.elem(&[&[1, 2]])]);
        assert!(g.is_normal(&a3));
        assert!(!g.is_normal(&t));
        assert!(g.is_normal(&g.whole()));
        // (13)(12)(13) = (23)
        let c = g.conjugate(s.elem(&[&[1, 3]]), s.elem(&[&[1, 2]]));
        assert_eq!(c, s.elem(&[&[2, 3]]));
    }

    #[test]
    fn conjugate_sets_in_s3() {
        let s = s3();
        let g = &s.group;
        let h = set(&[s.elem(&[&[1, 2]])]);
        assert_eq!(g.conjugate_set(&set(&[g.identity()]), &h), h);
        let c3 = g.generated_subgroup([s.elem(&[&[1, 2, 3]])]).to_set();
        let transpositions = set(&[s.elem(&[&[1, 2]]), s.elem(&[&[1, 3]]), s.elem(&[&[2, 3]])]);
        assert_eq!(g.conjugate_set(&c3, &h), transpositions);
        let e = set(&[g.identity()]);
        assert_eq!(g.conjugate_set(&c3, &e), e);
    }

    #[test]
    fn commutator_subgroups() {
        let s = s3();
        let g = &s.group;
        let all = g.whole().to_set();
        let e = set(&[g.identity()]);
        assert!(g.commutator_subgroup(&all, &e).is_trivial());
        assert!(g.commutator_subgroup(&e, &all).is_trivial());
        let derived = g.commutator_subgroup(&all, &all);
        assert_eq!(derived, g.generated_subgroup([s.elem(&[&[1, 2, 3]])]));
        let z6 = FiniteGroup::cyclic(6);
        let z6_all = z6.whole().to_set();
        assert!(z6.commutator_subgroup(&z6_all, &z6_all).is_trivial());
    }

    #[test]
    fn generated_subgroups() {
        let s = s3();
        let g = &s.group;
        assert!(g.generated_subgroup([]).is_trivial());
        assert_eq!(g.generated_subgroup([s.elem(&[&[1, 2, 3]])]).order(), 3);
        assert_eq!(g.generated_subgroup([s.elem(&[&[1, 2]]), s.elem(&[&[1, 2, 3]])]).order(), 6);
    }

    #[test]
    fn subgroup_validation_and_extraction() {
        let s = s3();
        let g = &s.group;
        assert!(g.subgroup([g.identity(), s.elem(&[&[1, 2]])]).is_some());
        assert!(g.subgroup([s.elem(&[&[1, 2]])]).is_none());
        assert!(g.subgroup([g.identity(), s.elem(&[&[1, 2, 3]])]).is_none());
        let a3 = g.generated_subgroup([s.elem(&[&[1, 2, 3]])]);
        let (h, embed) = a3.to_group(g);
        assert_eq!(h.order(), 3);
        assert!(h.is_abelian());
        assert_eq!(embed[h.identity().idx()], g.identity());
    }

    #[test]
    fn automorphisms_and_homomorphisms() {
        let (aut3, _) = automorphism_group(&FiniteGroup::cyclic(3)).unwrap();
        assert_eq!(aut3.order(), 2);
        let (aut_v4, _) = automorphism_group(&FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(aut_v4.order(), 6);
        // Hom(Z2, Z2) has two elements, Hom(Z3, Z2) only the trivial one.
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(homomorphisms(&z2, &z2, 1000).unwrap().len(), 2);
        assert_eq!(homomorphisms(&z3, &z2, 1000).unwrap().len(), 1);
        assert_eq!(homomorphisms(&z2, &PermGroup::symmetric(3).group, 1000).unwrap().len(), 4);
        assert!(homomorphisms(&z3, &z2, 1).is_none());
    }

    #[test]
    fn group_file_roundtrip() {
        let g = FiniteGroup::cyclic(4);
        let back = FiniteGroup::from_file(&g.to_file()).unwrap();
        assert_eq!(back, g);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_group() -> impl Strategy<Value = FiniteGroup> {
        prop_oneof![
            (1usize..7).prop_map(FiniteGroup::cyclic),
            Just(PermGroup::symmetric(3).group),
            Just(FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))),
        ]
    }

    proptest! {
        #[test]
        fn group_axioms_hold(g in small_group()) {
            for x in g.elements() {
                prop_assert_eq!(g.mul(x, g.identity()), x);
                prop_assert_eq!(g.mul(g.identity(), x), x);
                prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
                for y in g.elements() {
                    for z in g.elements() {
                        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }

        #[test]
        fn normality_matches_conjugate_set(g in small_group(), gens in proptest::collection::vec(0u32..6, 0..3)) {
            let gens: Vec<Elem> = gens.into_iter().filter(|&x| (x as usize) < g.order()).map(Elem).collect();
            let h = g.generated_subgroup(gens);
            let conj = g.conjugate_set(&g.whole().to_set(), &h.to_set());
            prop_assert_eq!(g.is_normal(&h), conj.is_subset(&h.to_set()));
        }

        #[test]
        fn complex_product_is_associative(
            xs in proptest::collection::btree_set(0u32..6, 0..4),
            ys in proptest::collection::btree_set(0u32..6, 0..4),
            zs in proptest::collection::btree_set(0u32..6, 0..4),
        ) {
            let g = PermGroup::symmetric(3).group;
            let conv = |s: BTreeSet<u32>| s.into_iter().map(Elem).collect::<BTreeSet<_>>();
            let (x, y, z) = (conv(xs), conv(ys), conv(zs));
            let xy = g.complex_product(&[&x, &y]);
            let yz = g.complex_product(&[&y, &z]);
            prop_assert_eq!(g.complex_product(&[&xy, &z]), g.complex_product(&[&x, &yz]));
        }
    }
}
