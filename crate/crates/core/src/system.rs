//! r-total systems: the actions `φ_k^j` and brackets `[·,·]_{kj}^i` that
//! describe how the factor groups of a semidirect product interact.
//!
//! An action is stored as its evaluated table `(h_k, h_j) ↦ ^{φ_k^j(h_k)} h_j`
//! rather than as a map into `Maps(H_j, H_j)`; nothing downstream needs the
//! function-space view.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::FactorAlgebra;
use crate::group::{Elem, FiniteGroup, GroupError, GroupFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("a total system needs at least one factor")]
    NoFactors,
    #[error("missing table {0}")]
    MissingTable(String),
    #[error("unexpected table {0}")]
    UnexpectedTable(String),
    #[error("table {key} has shape {rows}x{cols}, expected {want_rows}x{want_cols}")]
    Shape { key: String, rows: usize, cols: usize, want_rows: usize, want_cols: usize },
    #[error("table {key} entry ({row},{col}) = {value} is outside the codomain of order {order}")]
    ValueOutOfRange { key: String, row: usize, col: usize, value: usize, order: usize },
    #[error("bad table key {0:?}")]
    BadKey(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("rank {0} is too small for this operation")]
    RankTooSmall(usize),
    #[error("declared r = {declared} but {found} groups were given")]
    RankMismatch { declared: usize, found: usize },
    #[error("group {index}: {source}")]
    Group { index: usize, source: GroupError },
}

/// A dense `rows × cols` table of elements of some codomain group.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Table {
    cols: usize,
    data: Vec<Elem>,
}

impl Table {
    fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for x in 0..rows {
            for y in 0..cols {
                data.push(f(x.into(), y.into()));
            }
        }
        Table { cols, data }
    }

    #[inline]
    fn get(&self, x: Elem, y: Elem) -> Elem {
        self.data[x.idx() * self.cols + y.idx()]
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.data.chunks(self.cols).map(|row| row.iter().map(|e| e.idx()).collect()).collect()
    }
}

/// An r-total system over factor groups `H_1, …, H_r` (levels are 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalSystem {
    factors: Vec<FiniteGroup>,
    // phi[k-1][j-1] for j < k
    phi: Vec<Vec<Table>>,
    // bracket[k-1][j-1][i-1] for i < j < k
    bracket: Vec<Vec<Vec<Table>>>,
}

/// Which of the four unit conditions a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormCondition {
    /// `φ_k^j(1)` is the identity map.
    I,
    /// `φ_k^j(h)` fixes `1`.
    Ii,
    /// `[1, h]_{kj}^i = 1`.
    Iii,
    /// `[h, 1]_{kj}^i = 1`.
    Iv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormViolation {
    pub condition: NormCondition,
    pub indices: Vec<usize>,
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationReport {
    pub violations: Vec<NormViolation>,
}

impl NormalizationReport {
    pub fn is_normalized(&self) -> bool {
        self.violations.is_empty()
    }
}

pub(crate) fn pair_key(k: usize, j: usize) -> String {
    format!("{k},{j}")
}

pub(crate) fn triple_key(k: usize, j: usize, i: usize) -> String {
    format!("{k},{j},{i}")
}

impl TotalSystem {
    /// Builds a system from closures for every action and bracket. Values are
    /// range-checked against the codomain group.
    pub fn from_fns(
        factors: Vec<FiniteGroup>,
        mut phi: impl FnMut(usize, usize, Elem, Elem) -> Elem,
        mut bracket: impl FnMut(usize, usize, usize, Elem, Elem) -> Elem,
    ) -> Result<Self, SystemError> {
        let r = factors.len();
        if r == 0 {
            return Err(SystemError::NoFactors);
        }
        let mut phi_tables = Vec::with_capacity(r);
        let mut bracket_tables = Vec::with_capacity(r);
        for k in 1..=r {
            let hk = &factors[k - 1];
            let mut row = Vec::new();
            let mut brow = Vec::new();
            for j in 1..k {
                let hj = &factors[j - 1];
                let t = Table::from_fn(hk.order(), hj.order(), |a, b| phi(k, j, a, b));
                check_range(&pair_key(k, j), &t, hj.order())?;
                row.push(t);
                let mut bcol = Vec::new();
                for i in 1..j {
                    let hi = &factors[i - 1];
                    let t = Table::from_fn(hk.order(), hj.order(), |a, b| bracket(k, j, i, a, b));
                    check_range(&triple_key(k, j, i), &t, hi.order())?;
                    bcol.push(t);
                }
                brow.push(bcol);
            }
            phi_tables.push(row);
            bracket_tables.push(brow);
        }
        Ok(TotalSystem { factors, phi: phi_tables, bracket: bracket_tables })
    }

    /// Builds a system from explicit tables keyed by `(k, j)` and `(k, j, i)`.
    /// Every index in range must be present exactly once.
    pub fn from_tables(
        factors: Vec<FiniteGroup>,
        phi: &BTreeMap<(usize, usize), Vec<Vec<usize>>>,
        bracket: &BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    ) -> Result<Self, SystemError> {
        let r = factors.len();
        if r == 0 {
            return Err(SystemError::NoFactors);
        }
        for &(k, j) in phi.keys() {
            if !(k <= r && j >= 1 && j < k) {
                return Err(SystemError::UnexpectedTable(pair_key(k, j)));
            }
        }
        for &(k, j, i) in bracket.keys() {
            if !(k <= r && i >= 1 && i < j && j < k) {
                return Err(SystemError::UnexpectedTable(triple_key(k, j, i)));
            }
        }
        for k in 1..=r {
            for j in 1..k {
                let want = (factors[k - 1].order(), factors[j - 1].order());
                let t = phi.get(&(k, j)).ok_or_else(|| SystemError::MissingTable(pair_key(k, j)))?;
                check_shape(&pair_key(k, j), t, want)?;
                for i in 1..j {
                    let t = bracket.get(&(k, j, i)).ok_or_else(|| SystemError::MissingTable(triple_key(k, j, i)))?;
                    check_shape(&triple_key(k, j, i), t, want)?;
                }
            }
        }
        Self::from_fns(
            factors,
            |k, j, a, b| Elem::from(phi[&(k, j)][a.idx()][b.idx()]),
            |k, j, i, a, b| Elem::from(bracket[&(k, j, i)][a.idx()][b.idx()]),
        )
    }

    /// All actions trivial and all brackets constantly 1: the direct product.
    pub fn trivial(factors: Vec<FiniteGroup>) -> Self {
        let ids: Vec<Elem> = factors.iter().map(|g| g.identity()).collect();
        Self::from_fns(factors, |_, _, _, b| b, |_, _, i, _, _| ids[i - 1]).expect("trivial system is well formed")
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[FiniteGroup] {
        &self.factors
    }

    #[inline]
    pub fn factor(&self, level: usize) -> &FiniteGroup {
        &self.factors[level - 1]
    }

    /// `|G| = |H_1| ⋯ |H_r|`
    pub fn order(&self) -> usize {
        self.factors.iter().map(|g| g.order()).product()
    }

    /// Number of tuples of rank at most `k`.
    pub fn band_order(&self, k: usize) -> usize {
        self.factors[..k].iter().map(|g| g.order()).product()
    }

    /// `^{φ_k^j(a)} b`
    #[inline]
    pub fn act(&self, k: usize, j: usize, a: Elem, b: Elem) -> Elem {
        self.phi[k - 1][j - 1].get(a, b)
    }

    /// `[a, b]_{kj}^i`
    #[inline]
    pub fn bracket(&self, k: usize, j: usize, i: usize, a: Elem, b: Elem) -> Elem {
        self.bracket[k - 1][j - 1][i - 1].get(a, b)
    }

    pub fn phi_rows(&self, k: usize, j: usize) -> Vec<Vec<usize>> {
        self.phi[k - 1][j - 1].rows()
    }

    pub fn bracket_rows(&self, k: usize, j: usize, i: usize) -> Vec<Vec<usize>> {
        self.bracket[k - 1][j - 1][i - 1].rows()
    }

    /// Lists every violation of the four unit conditions, in index order.
    pub fn check_normalized(&self) -> NormalizationReport {
        let mut violations = Vec::new();
        let r = self.r();
        for k in 1..=r {
            let hk = self.factor(k);
            for j in 1..k {
                let hj = self.factor(j);
                for b in hj.elements() {
                    if self.act(k, j, hk.identity(), b) != b {
                        violations.push(NormViolation {
                            condition: NormCondition::I,
                            indices: vec![k, j],
                            witness: vec![b],
                        });
                    }
                }
                for a in hk.elements() {
                    if self.act(k, j, a, hj.identity()) != hj.identity() {
                        violations.push(NormViolation {
                            condition: NormCondition::Ii,
                            indices: vec![k, j],
                            witness: vec![a],
                        });
                    }
                }
                for i in 1..j {
                    let one = self.factor(i).identity();
                    for b in hj.elements() {
                        if self.bracket(k, j, i, hk.identity(), b) != one {
                            violations.push(NormViolation {
                                condition: NormCondition::Iii,
                                indices: vec![k, j, i],
                                witness: vec![b],
                            });
                        }
                    }
                    for a in hk.elements() {
                        if self.bracket(k, j, i, a, hj.identity()) != one {
                            violations.push(NormViolation {
                                condition: NormCondition::Iv,
                                indices: vec![k, j, i],
                                witness: vec![a],
                            });
                        }
                    }
                }
            }
        }
        violations.sort_by(|x, y| (x.condition, &x.indices).cmp(&(y.condition, &y.indices)));
        NormalizationReport { violations }
    }

    pub fn is_normalized(&self) -> bool {
        self.check_normalized().is_normalized()
    }

    /// The `(j+1)`-system over `H_1, …, H_j, H_k` that forgets every other
    /// factor; `H_k` becomes level `j + 1`.
    pub fn restrict(&self, j: usize, k: usize) -> Result<TotalSystem, SystemError> {
        if !(j >= 1 && j < k && k <= self.r()) {
            return Err(SystemError::IndexOutOfRange(format!("restrict needs 1 <= j < k <= r, got j={j}, k={k}")));
        }
        let old = |m: usize| if m <= j { m } else { k };
        let mut factors: Vec<FiniteGroup> = self.factors[..j].to_vec();
        factors.push(self.factor(k).clone());
        Self::from_fns(
            factors,
            |p, q, a, b| self.act(old(p), old(q), a, b),
            |p, q, t, a, b| self.bracket(old(p), old(q), old(t), a, b),
        )
    }

    /// The `(r-1)`-system on `H_2, …, H_r` obtained by forgetting `H_1`.
    pub fn quotient(&self) -> Result<TotalSystem, SystemError> {
        if self.r() < 2 {
            return Err(SystemError::RankTooSmall(self.r()));
        }
        Self::from_fns(
            self.factors[1..].to_vec(),
            |p, q, a, b| self.act(p + 1, q + 1, a, b),
            |p, q, t, a, b| self.bracket(p + 1, q + 1, t + 1, a, b),
        )
    }

    pub fn to_file(&self) -> SystemFile {
        let mut phi = BTreeMap::new();
        let mut bracket = BTreeMap::new();
        for k in 1..=self.r() {
            for j in 1..k {
                phi.insert(pair_key(k, j), self.phi_rows(k, j));
                for i in 1..j {
                    bracket.insert(triple_key(k, j, i), self.bracket_rows(k, j, i));
                }
            }
        }
        SystemFile {
            r: self.r(),
            groups: self.factors.iter().map(|g| GroupSpec::Inline(g.to_file())).collect(),
            phi,
            bracket,
        }
    }
}

fn check_range(key: &str, t: &Table, order: usize) -> Result<(), SystemError> {
    for (n, v) in t.data.iter().enumerate() {
        if v.idx() >= order {
            return Err(SystemError::ValueOutOfRange {
                key: key.to_string(),
                row: n / t.cols.max(1),
                col: n % t.cols.max(1),
                value: v.idx(),
                order,
            });
        }
    }
    Ok(())
}

fn check_shape(key: &str, t: &[Vec<usize>], (rows, cols): (usize, usize)) -> Result<(), SystemError> {
    let bad = t.len() != rows || t.iter().any(|row| row.len() != cols);
    if bad {
        return Err(SystemError::Shape {
            key: key.to_string(),
            rows: t.len(),
            cols: t.iter().map(|r| r.len()).find(|&l| l != cols).unwrap_or(cols),
            want_rows: rows,
            want_cols: cols,
        });
    }
    Ok(())
}

impl FactorAlgebra for TotalSystem {
    type Elem = Elem;

    fn rank(&self) -> usize {
        self.r()
    }

    #[inline]
    fn one(&self, level: usize) -> Elem {
        self.factor(level).identity()
    }

    #[inline]
    fn is_one(&self, level: usize, x: &Elem) -> bool {
        self.factor(level).is_identity(*x)
    }

    #[inline]
    fn mul(&self, level: usize, x: &Elem, y: &Elem) -> Elem {
        self.factor(level).mul(*x, *y)
    }

    #[inline]
    fn act(&self, k: usize, j: usize, a: &Elem, b: &Elem) -> Elem {
        TotalSystem::act(self, k, j, *a, *b)
    }

    #[inline]
    fn bracket(&self, k: usize, j: usize, i: usize, a: &Elem, b: &Elem) -> Elem {
        TotalSystem::bracket(self, k, j, i, *a, *b)
    }
}

/// A factor group in a system file: inline table or path to a group file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Inline(GroupFile),
    Path(String),
}

/// On-disk layout of a total system. `phi` is keyed `"k,j"`, `bracket` is
/// keyed `"k,j,i"`; each value is a `|H_k| × |H_j|` table of indices into the
/// codomain group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub r: usize,
    pub groups: Vec<GroupSpec>,
    #[serde(default)]
    pub phi: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default)]
    pub bracket: BTreeMap<String, Vec<Vec<usize>>>,
}

fn parse_key<const N: usize>(key: &str) -> Result<[usize; N], SystemError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(SystemError::BadKey(key.to_string()));
    }
    let mut out = [0usize; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| SystemError::BadKey(key.to_string()))?;
    }
    Ok(out)
}

impl SystemFile {
    /// Resolves group paths with `load` and validates everything.
    pub fn to_system<E>(
        &self,
        mut load: impl FnMut(&str) -> Result<GroupFile, E>,
    ) -> Result<TotalSystem, SystemFileError<E>> {
        if self.r != self.groups.len() {
            return Err(SystemError::RankMismatch { declared: self.r, found: self.groups.len() }.into());
        }
        let mut factors = Vec::with_capacity(self.r);
        for (n, entry) in self.groups.iter().enumerate() {
            let file = match entry {
                GroupSpec::Inline(f) => f.clone(),
                GroupSpec::Path(p) => load(p).map_err(SystemFileError::Load)?,
            };
            let g = FiniteGroup::from_file(&file).map_err(|source| SystemError::Group { index: n + 1, source })?;
            factors.push(g);
        }
        let mut phi = BTreeMap::new();
        for (key, t) in &self.phi {
            let [k, j] = parse_key::<2>(key)?;
            phi.insert((k, j), t.clone());
        }
        let mut bracket = BTreeMap::new();
        for (key, t) in &self.bracket {
            let [k, j, i] = parse_key::<3>(key)?;
            bracket.insert((k, j, i), t.clone());
        }
        Ok(TotalSystem::from_tables(factors, &phi, &bracket)?)
    }
}

#[derive(Debug, Error)]
pub enum SystemFileError<E> {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("loading group file: {0}")]
    Load(E),
}
