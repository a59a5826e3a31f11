//! The magma law on `G = H_1 × … × H_r` built from a total system.
//!
//! Everything here is generic over [`FactorAlgebra`], so the very same
//! recursion produces concrete products over group tables and symbolic normal
//! forms over free words. Products of several tuples are always folded from
//! the left; no other bracketing is ever used implicitly, since the law need
//! not be associative.

use thiserror::Error;

use crate::algebra::FactorAlgebra;
use crate::group::Elem;
use crate::system::TotalSystem;
use crate::tuple::{ElemTuple, Tuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MulError {
    #[error("pair is interfering: rank {rank} exceeds corank {corank}")]
    Interfering { rank: usize, corank: usize },
    #[error("conjugation needs k > j with both in 1..={r}, got k={k}, j={j}")]
    Index { k: usize, j: usize, r: usize },
    #[error("operand of rank {rank} is not below the acting level {k}")]
    Rank { rank: usize, k: usize },
}

pub fn unit<A: FactorAlgebra>(alg: &A) -> Tuple<A::Elem> {
    Tuple((1..=alg.rank()).map(|l| alg.one(l)).collect())
}

/// The tuple with `x` at `level` and units elsewhere.
pub fn elementary<A: FactorAlgebra>(alg: &A, level: usize, x: A::Elem) -> Tuple<A::Elem> {
    let mut t = unit(alg);
    t[level] = x;
    t
}

/// Largest level with a nontrivial entry, 0 for the unit.
pub fn rank<A: FactorAlgebra>(alg: &A, t: &Tuple<A::Elem>) -> usize {
    t.levels().filter(|(l, x)| !alg.is_one(*l, x)).map(|(l, _)| l).max().unwrap_or(0)
}

/// Smallest level with a nontrivial entry, `r + 1` for the unit.
pub fn corank<A: FactorAlgebra>(alg: &A, t: &Tuple<A::Elem>) -> usize {
    t.levels().find(|(l, x)| !alg.is_one(*l, x)).map(|(l, _)| l).unwrap_or(alg.rank() + 1)
}

/// Product of a noninterfering pair: plain concatenation, multiplying the one
/// possible overlap inside its factor.
pub fn mu_a<A: FactorAlgebra>(alg: &A, u: &Tuple<A::Elem>, v: &Tuple<A::Elem>) -> Result<Tuple<A::Elem>, MulError> {
    let (rk, ck) = (rank(alg, u), corank(alg, v));
    if rk > ck {
        return Err(MulError::Interfering { rank: rk, corank: ck });
    }
    Ok(Tuple((1..=alg.rank()).map(|l| alg.mul(l, &u[l], &v[l])).collect()))
}

/// `φ_a(h) = [a,h]^1 · … · [a,h]^{j-1} · ^{φ_k^j(a)} h`, for `a ∈ H_k`,
/// `h ∈ H_j`, `k > j`.
pub fn phi_conj<A: FactorAlgebra>(
    alg: &A,
    k: usize,
    a: &A::Elem,
    j: usize,
    h: &A::Elem,
) -> Result<Tuple<A::Elem>, MulError> {
    if !(j >= 1 && j < k && k <= alg.rank()) {
        return Err(MulError::Index { k, j, r: alg.rank() });
    }
    Ok(conj(alg, k, a, j, h))
}

fn conj<A: FactorAlgebra>(alg: &A, k: usize, a: &A::Elem, j: usize, h: &A::Elem) -> Tuple<A::Elem> {
    let mut t = unit(alg);
    for i in 1..j {
        t[i] = alg.bracket(k, j, i, a, h);
    }
    t[j] = alg.act(k, j, a, h);
    t
}

/// Extension of `φ_a` (for `a ∈ H_k`) to all of `R_{k-1}`:
/// `φ_a(b_1 ⋯ b_{k-1}) = (…(φ_a(b_1) · φ_a(b_2)) · …) · φ_a(b_{k-1})`.
pub fn phi_ext<A: FactorAlgebra>(
    alg: &A,
    k: usize,
    a: &A::Elem,
    v: &Tuple<A::Elem>,
) -> Result<Tuple<A::Elem>, MulError> {
    if !(k >= 2 && k <= alg.rank()) {
        return Err(MulError::Index { k, j: k.saturating_sub(1), r: alg.rank() });
    }
    let rv = rank(alg, v);
    if rv >= k {
        return Err(MulError::Rank { rank: rv, k });
    }
    Ok(ext(alg, k, a, v))
}

fn ext<A: FactorAlgebra>(alg: &A, k: usize, a: &A::Elem, v: &Tuple<A::Elem>) -> Tuple<A::Elem> {
    let mut acc = conj(alg, k, a, 1, &v[1]);
    for m in 2..k {
        let next = conj(alg, k, a, m, &v[m]);
        acc = mu_at(alg, k - 1, &acc, &next);
    }
    acc
}

/// The full law `μ = μ_r`.
pub fn mu<A: FactorAlgebra>(alg: &A, u: &Tuple<A::Elem>, v: &Tuple<A::Elem>) -> Tuple<A::Elem> {
    mu_at(alg, alg.rank(), u, v)
}

/// `μ_k` on `R_k × R_k`; entries of `u`, `v` above level `k` are ignored.
///
/// `μ_k(u'·a, v'·b) = μ_{k-1}(u', φ_a(v')) · (ab)` with `μ_1` the law of `H_1`.
pub fn mu_at<A: FactorAlgebra>(alg: &A, k: usize, u: &Tuple<A::Elem>, v: &Tuple<A::Elem>) -> Tuple<A::Elem> {
    if k == 0 {
        return unit(alg);
    }
    if k == 1 {
        return elementary(alg, 1, alg.mul(1, &u[1], &v[1]));
    }
    let a = &u[k];
    let b = &v[k];
    let u_low = truncate(alg, u, k - 1);
    let v_low = truncate(alg, v, k - 1);
    let moved = ext(alg, k, a, &v_low);
    let mut out = mu_at(alg, k - 1, &u_low, &moved);
    out[k] = alg.mul(k, a, b);
    out
}

/// Copy of `t` with every entry above `k` replaced by the unit.
pub fn truncate<A: FactorAlgebra>(alg: &A, t: &Tuple<A::Elem>, k: usize) -> Tuple<A::Elem> {
    let mut out = t.clone();
    for l in k + 1..=alg.rank() {
        out[l] = alg.one(l);
    }
    out
}

/// Left fold `μ(…μ(μ(t_1, t_2), t_3)…, t_n)`; `None` for an empty list.
pub fn mu_word<A: FactorAlgebra>(alg: &A, ts: &[Tuple<A::Elem>]) -> Option<Tuple<A::Elem>> {
    let (first, rest) = ts.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, t| mu(alg, &acc, t)))
}

/// `[a, h] = φ_a(h) · h⁻¹`; entry `j` is `^{φ_k^j(a)}h · h⁻¹`.
pub fn commutator_bracket(sys: &TotalSystem, k: usize, a: Elem, j: usize, h: Elem) -> Result<ElemTuple, MulError> {
    let mut t = phi_conj(sys, k, &a, j, &h)?;
    let hj = sys.factor(j);
    t[j] = hj.mul(t[j], hj.inv(h));
    Ok(t)
}

/// Mixed-radix codec between tuples and dense indices `0..|R_k|`, with level 1
/// most significant so that index order is lexicographic tuple order.
#[derive(Clone, Debug)]
pub struct TupleCodec {
    orders: Vec<usize>,
    r: usize,
}

impl TupleCodec {
    pub fn new(sys: &TotalSystem) -> Self {
        Self::for_band(sys, sys.r())
    }

    /// Codec for `R_k`, producing full-length r-tuples.
    pub fn for_band(sys: &TotalSystem, k: usize) -> Self {
        TupleCodec { orders: sys.factors()[..k].iter().map(|g| g.order()).collect(), r: sys.r() }
    }

    pub fn len(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, t: &ElemTuple) -> usize {
        self.orders.iter().enumerate().fold(0, |acc, (i, &n)| acc * n + t.0[i].idx())
    }

    pub fn decode(&self, mut n: usize) -> ElemTuple {
        let mut out = vec![Elem(0); self.r];
        for i in (0..self.orders.len()).rev() {
            out[i] = Elem::from(n % self.orders[i]);
            n /= self.orders[i];
        }
        Tuple(out)
    }

    pub fn tuples(&self) -> impl Iterator<Item = ElemTuple> + '_ {
        (0..self.len()).map(move |n| self.decode(n))
    }
}

/// Precomputed `|G| × |G|` table of `μ`. Lookups agree exactly with [`mu`].
#[derive(Clone, Debug)]
pub struct CayleyTable {
    codec: TupleCodec,
    table: Vec<u32>,
}

impl CayleyTable {
    /// Computes every product; `None` if `|G|` exceeds `cap`.
    pub fn build(sys: &TotalSystem, cap: usize) -> Option<Self> {
        let codec = TupleCodec::new(sys);
        let n = codec.len();
        if n > cap {
            return None;
        }
        let all: Vec<ElemTuple> = codec.tuples().collect();
        let mut table = Vec::with_capacity(n * n);
        for u in &all {
            for v in &all {
                table.push(codec.encode(&mu(sys, u, v)) as u32);
            }
        }
        Some(CayleyTable { codec, table })
    }

    pub fn order(&self) -> usize {
        self.codec.len()
    }

    pub fn codec(&self) -> &TupleCodec {
        &self.codec
    }

    #[inline]
    pub fn mul_index(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y] as usize
    }

    pub fn mul(&self, u: &ElemTuple, v: &ElemTuple) -> ElemTuple {
        self.codec.decode(self.mul_index(self.codec.encode(u), self.codec.encode(v)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|x| (0..n).map(|y| self.mul_index(x, y)).collect()).collect()
    }
}
