//! Seeded samplers for total systems and per-factor maps.
//!
//! All sampling goes through [`ChaCha8Rng`] seeded from a `u64`, so a seed
//! pins down the output on every platform.

use std::cell::RefCell;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::group::{automorphism_group, homomorphisms, Elem, FiniteGroup};
use crate::system::TotalSystem;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random tables subject only to the four unit conditions.
pub fn random_normalized(factors: Vec<FiniteGroup>, rng: &mut Rng64) -> TotalSystem {
    let ids: Vec<Elem> = factors.iter().map(|g| g.identity()).collect();
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    // Both table closures draw from the same stream.
    let cell = RefCell::new(rng);
    TotalSystem::from_fns(
        factors,
        |k, j, a, b| {
            if a == ids[k - 1] || b == ids[j - 1] {
                b
            } else {
                Elem::from(cell.borrow_mut().gen_range(0..orders[j - 1]))
            }
        },
        |k, j, i, a, b| {
            if a == ids[k - 1] || b == ids[j - 1] {
                ids[i - 1]
            } else {
                Elem::from(cell.borrow_mut().gen_range(0..orders[i - 1]))
            }
        },
    )
    .expect("sampled values lie in range")
}

/// A normalized system where each action is, with probability `p`, a genuine
/// action by automorphisms (a random homomorphism `H_k → Aut(H_j)`), and
/// each bracket is, with probability `p`, trivial. Everything else is
/// uniform as in [`random_normalized`]. Mixing the two populates both sides
/// of associativity experiments.
#[allow(clippy::needless_range_loop)]
pub fn random_mixed(factors: Vec<FiniteGroup>, p: f64, rng: &mut Rng64) -> TotalSystem {
    let r = factors.len();
    let mut automorphic = vec![vec![false; r + 1]; r + 1];
    let mut trivial = vec![vec![vec![false; r + 1]; r + 1]; r + 1];
    for k in 1..=r {
        for j in 1..k {
            automorphic[k][j] = rng.gen_bool(p);
        }
    }
    for k in 1..=r {
        for j in 1..k {
            for i in 1..j {
                trivial[k][j][i] = rng.gen_bool(p);
            }
        }
    }
    random_structured(factors, |k, j| automorphic[k][j], |k, j, i| trivial[k][j][i], rng)
}

/// Every action by a factor below `top` is by automorphisms; the remaining
/// actions and all brackets are uniform.
pub fn random_automorphic_below(factors: Vec<FiniteGroup>, top: usize, rng: &mut Rng64) -> TotalSystem {
    random_structured(factors, |k, _| k < top, |_, _, _| false, rng)
}

/// Normalized system whose action `φ_k^j` is a random homomorphism into
/// `Aut(H_j)` where `automorphic(k, j)` holds (and `Aut(H_j)` is small enough
/// to enumerate), and whose bracket `[·,·]_{kj}^i` is trivial where
/// `trivial(k, j, i)` holds. All other entries are uniform.
pub fn random_structured(
    factors: Vec<FiniteGroup>,
    automorphic: impl Fn(usize, usize) -> bool,
    trivial: impl Fn(usize, usize, usize) -> bool,
    rng: &mut Rng64,
) -> TotalSystem {
    let r = factors.len();
    let ids: Vec<Elem> = factors.iter().map(|g| g.identity()).collect();
    let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let auts: Vec<Option<(FiniteGroup, Vec<Vec<Elem>>)>> = factors.iter().map(automorphism_group).collect();

    let mut actions: Vec<Vec<Option<Vec<Vec<Elem>>>>> = vec![Vec::new(); r + 1];
    for k in 1..=r {
        actions[k] = vec![None; k];
        for j in 1..k {
            if !automorphic(k, j) {
                continue;
            }
            if let Some((aut, perms)) = &auts[j - 1] {
                if let Some(homs) = homomorphisms(&factors[k - 1], aut, 1 << 16) {
                    let h = homs.choose(rng).expect("trivial homomorphism always exists");
                    actions[k][j] = Some(h.iter().map(|x| perms[x.idx()].clone()).collect());
                }
            }
        }
    }
    let cell = RefCell::new(rng);
    TotalSystem::from_fns(
        factors,
        |k, j, a, b| {
            if let Some(perm_of) = &actions[k][j] {
                return perm_of[a.idx()][b.idx()];
            }
            if a == ids[k - 1] || b == ids[j - 1] {
                b
            } else {
                Elem::from(cell.borrow_mut().gen_range(0..orders[j - 1]))
            }
        },
        |k, j, i, a, b| {
            if trivial(k, j, i) || a == ids[k - 1] || b == ids[j - 1] {
                ids[i - 1]
            } else {
                Elem::from(cell.borrow_mut().gen_range(0..orders[i - 1]))
            }
        },
    )
    .expect("sampled values lie in range")
}

/// A uniformly random map `src → dst` sending the identity to the identity.
pub fn random_pointed_map(src: &FiniteGroup, dst: &FiniteGroup, rng: &mut Rng64) -> Vec<Elem> {
    src.elements()
        .map(|x| if x == src.identity() { dst.identity() } else { Elem::from(rng.gen_range(0..dst.order())) })
        .collect()
}

/// A uniformly chosen homomorphism `src → dst`, or `None` if enumerating them
/// is too expensive.
pub fn random_hom(src: &FiniteGroup, dst: &FiniteGroup, rng: &mut Rng64) -> Option<Vec<Elem>> {
    let homs = homomorphisms(src, dst, 1 << 16)?;
    homs.choose(rng).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mul::{self, CayleyTable};

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn samplers_are_normalized_and_deterministic() {
        for seed in 0..20 {
            let a = random_normalized(vec![z(2), z(3), z(2)], &mut rng(seed));
            let b = random_normalized(vec![z(2), z(3), z(2)], &mut rng(seed));
            assert_eq!(a, b);
            assert!(a.is_normalized());
            let m = random_mixed(vec![z(3), z(2), z(3)], 0.5, &mut rng(seed));
            assert!(m.is_normalized());
            let s = random_automorphic_below(vec![z(3), z(2), z(3)], 3, &mut rng(seed));
            assert!(s.is_normalized());
            assert!(crate::assoc::check_phi_composition(&s, 2, Default::default()).unwrap().holds);
        }
    }

    #[test]
    fn fully_structured_two_factor_systems_are_groups() {
        // With p = 1 every action is by automorphisms and, for r = 2, there
        // are no brackets, so the product is a classical semidirect product.
        for seed in 0..10 {
            let sys = random_mixed(vec![z(3), z(2)], 1.0, &mut rng(seed));
            let t = CayleyTable::build(&sys, 64).unwrap();
            assert!(FiniteGroup::from_table(&t.rows()).is_ok());
            let _ = mul::unit(&sys);
        }
    }

    #[test]
    fn random_maps() {
        let s3 = crate::group::PermGroup::symmetric(3).group;
        let f = random_pointed_map(&z(3), &s3, &mut rng(1));
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], s3.identity());
        let h = random_hom(&z(2), &s3, &mut rng(2)).unwrap();
        assert_eq!(s3.mul(h[1], h[1]), s3.identity());
    }
}
