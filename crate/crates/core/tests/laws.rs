use proptest::prelude::*;

use sdp::assoc::{self, SizeCaps};
use sdp::hom::{self, FiniteMonoid};
use sdp::mul::{self, CayleyTable};
use sdp::random::{self, random_hom, random_mixed, random_normalized};
use sdp::{FiniteGroup, TotalSystem};

fn system(seed: u64, shape: &[usize], mixed: bool) -> TotalSystem {
    let factors = shape.iter().map(|&n| FiniteGroup::cyclic(n)).collect();
    let mut rng = random::rng(seed);
    if mixed {
        random_mixed(factors, 0.8, &mut rng)
    } else {
        random_normalized(factors, &mut rng)
    }
}

fn shapes() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=3, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cached_table_agrees_with_the_recursion(seed: u64, shape in shapes(), mixed: bool) {
        let sys = system(seed, &shape, mixed);
        let t = CayleyTable::build(&sys, 64).unwrap();
        let all: Vec<_> = t.codec().tuples().collect();
        for u in &all {
            for v in &all {
                prop_assert_eq!(t.mul(u, v), mul::mu(&sys, u, v));
            }
        }
    }

    #[test]
    fn elementary_conditions_decide_associativity(seed: u64, shape in shapes(), mixed: bool) {
        let sys = system(seed, &shape, mixed);
        let elementary = assoc::all_pass(&assoc::check_all_elementary(&sys));
        let exhaustive = assoc::brute_force_associative(&sys, SizeCaps::default()).unwrap().holds;
        prop_assert_eq!(elementary, exhaustive);
    }

    #[test]
    fn associative_tables_are_groups(seed: u64, shape in shapes()) {
        let sys = system(seed, &shape, true);
        let t = CayleyTable::build(&sys, 64).unwrap();
        let as_group = FiniteGroup::from_table(&t.rows());
        let associative = assoc::brute_force_associative(&sys, SizeCaps::default()).unwrap().holds;
        prop_assert_eq!(as_group.is_ok(), associative);
    }

    #[test]
    fn truncations_of_associative_systems_are_associative(seed: u64, shape in prop::collection::vec(2usize..=3, 3)) {
        let sys = system(seed, &shape, true);
        prop_assume!(assoc::brute_force_associative(&sys, SizeCaps::default()).unwrap().holds);
        let low = sys.restrict(1, 2).unwrap();
        prop_assert!(assoc::brute_force_associative(&low, SizeCaps::default()).unwrap().holds);
        let high = sys.quotient().unwrap();
        prop_assert!(assoc::brute_force_associative(&high, SizeCaps::default()).unwrap().holds);
    }

    #[test]
    fn pairwise_hom_conditions_decide(seed: u64, shape in shapes(), n in 2usize..=6) {
        let sys = system(seed, &shape, true);
        prop_assume!(assoc::brute_force_associative(&sys, SizeCaps::default()).unwrap().holds);
        let target = FiniteGroup::cyclic(n);
        let mut rng = random::rng(seed ^ 1);
        let comps = (1..=sys.r()).map(|l| random_hom(sys.factor(l), &target, &mut rng).unwrap()).collect();
        let m = hom::assemble(sys, FiniteMonoid::from(&target), comps).unwrap();
        let pairs = hom::check_hom_all(&m).holds;
        prop_assert_eq!(pairs, hom::brute_force_hom(&m, SizeCaps::default()).unwrap().holds);
        prop_assert_eq!(pairs, hom::check_commutator_criterion(&m).unwrap().holds);
    }
}
