//! Seeded experiments that set the elementary conditions against exhaustive
//! checks on sampled instances.
//!
//! Every trial gets its own seed drawn from a master stream, so a report
//! names the seed of any disagreement and the trial can be replayed alone.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::assoc::{self, AssocCondition, AssocError, SizeCaps};
use crate::group::{perm_from_cycles, FiniteGroup, PermGroup};
use crate::hom::{self, FiniteMonoid, HomError};
use crate::internal::{InternalSdp, SdpCandidate};
use crate::random::{self, random_hom, random_mixed, random_normalized, random_pointed_map};
use crate::system::TotalSystem;

/// How systems are drawn. `Uniform` fills every table uniformly subject to
/// the unit conditions; `Mixed(p)` makes each action automorphic and each
/// bracket trivial with probability `p`, which yields associative systems
/// often enough to see both verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    Uniform,
    Mixed(f64),
}

impl Sampler {
    pub fn draw(&self, factors: Vec<FiniteGroup>, rng: &mut random::Rng64) -> TotalSystem {
        match *self {
            Sampler::Uniform => random_normalized(factors, rng),
            Sampler::Mixed(p) => random_mixed(factors, p, rng),
        }
    }
}

/// Counts of `(elementary verdict, exhaustive verdict)` pairs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub both_pass: u64,
    pub both_fail: u64,
    pub only_elementary_pass: u64,
    pub only_exhaustive_pass: u64,
}

impl Agreement {
    pub fn record(&mut self, elementary: bool, exhaustive: bool) {
        match (elementary, exhaustive) {
            (true, true) => self.both_pass += 1,
            (false, false) => self.both_fail += 1,
            (true, false) => self.only_elementary_pass += 1,
            (false, true) => self.only_exhaustive_pass += 1,
        }
    }

    pub fn disagreements(&self) -> u64 {
        self.only_elementary_pass + self.only_exhaustive_pass
    }

    pub fn total(&self) -> u64 {
        self.both_pass + self.both_fail + self.disagreements()
    }
}

fn trial_seeds(seed: u64, count: u64) -> impl Iterator<Item = u64> {
    let mut master = random::rng(seed);
    (0..count).map(move |_| master.gen())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocTrial {
    pub seed: u64,
    pub elementary: bool,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<AssocCondition>,
}

/// One system over cyclic factors of the given orders.
pub fn assoc_trial(shape: &[usize], sampler: Sampler, seed: u64) -> Result<AssocTrial, AssocError> {
    let factors = shape.iter().map(|&n| FiniteGroup::cyclic(n)).collect();
    let sys = sampler.draw(factors, &mut random::rng(seed));
    let results = assoc::check_all_elementary(&sys);
    let first_failure = results.iter().find(|(_, r)| !r.holds).map(|(c, _)| *c);
    let exhaustive = assoc::brute_force_associative(&sys, SizeCaps::default())?.holds;
    Ok(AssocTrial { seed, elementary: first_failure.is_none(), exhaustive, first_failure })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssocExperiment {
    pub seed: u64,
    pub count: u64,
    pub shape: Vec<usize>,
    pub sampler: Sampler,
    pub agreement: Agreement,
    /// Trial seeds on which the two verdicts differ.
    pub disagreements: Vec<u64>,
}

/// All elementary `A[k,j,i]` pass iff `μ` is associative on all of `G`.
pub fn assoc_experiment(
    seed: u64,
    count: u64,
    shape: &[usize],
    sampler: Sampler,
) -> Result<AssocExperiment, AssocError> {
    let mut agreement = Agreement::default();
    let mut disagreements = Vec::new();
    for s in trial_seeds(seed, count) {
        let t = assoc_trial(shape, sampler, s)?;
        agreement.record(t.elementary, t.exhaustive);
        if t.elementary != t.exhaustive {
            disagreements.push(s);
        }
    }
    Ok(AssocExperiment { seed, count, shape: shape.to_vec(), sampler, agreement, disagreements })
}

fn perm_group(n: usize, gens: &[&[&[u8]]]) -> PermGroup {
    let gens: Vec<_> = gens.iter().map(|c| perm_from_cycles(n, c)).collect();
    PermGroup::generated(n, &gens)
}

fn internal(p: &PermGroup, factors: &[&[&[&[u8]]]]) -> TotalSystem {
    let gens: Vec<Vec<_>> = factors.iter().map(|f| f.iter().map(|c| p.elem(c)).collect()).collect();
    let cand = SdpCandidate::generated_by(p.group.clone(), &gens).expect("factors of the same group");
    InternalSdp::new(cand).and_then(|s| s.extract_total_system()).expect("known decomposition")
}

/// Small associative systems: `Z2 × Z2`, `S3`, `D4` as a 3-fold product,
/// `A4` and `S4`.
pub fn associative_sources() -> Vec<(&'static str, TotalSystem)> {
    let z = FiniteGroup::cyclic;
    let s3 = PermGroup::symmetric(3);
    let d4 = perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]);
    let a4 = perm_group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
    let s4 = PermGroup::symmetric(4);
    let v4: [&[&[u8]]; 2] = [&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]];
    vec![
        ("Z2xZ2", TotalSystem::trivial(vec![z(2), z(2)])),
        ("S3", internal(&s3, &[&[&[&[1, 2, 3]]], &[&[&[1, 2]]]])),
        ("D4", internal(&d4, &[&[&[&[1, 3], &[2, 4]]], &[&[&[2, 4]]], &[&[&[1, 2], &[3, 4]]]])),
        ("A4", internal(&a4, &[&v4, &[&[&[1, 2, 3]]]])),
        ("S4", internal(&s4, &[&v4, &[&[&[1, 2, 3]]], &[&[&[1, 2]]]])),
    ]
}

/// Groups of order at most 8.
pub fn small_targets() -> Vec<(&'static str, FiniteGroup)> {
    let z = FiniteGroup::cyclic;
    vec![
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z6", z(6)),
        ("Z8", z(8)),
        ("Z2xZ2", z(2).direct_product(&z(2))),
        ("Z2xZ4", z(2).direct_product(&z(4))),
        ("S3", PermGroup::symmetric(3).group),
        ("D4", perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]).group),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomTrial {
    pub seed: u64,
    pub source: String,
    pub target: String,
    pub pairs: bool,
    pub exhaustive: bool,
    /// Commutator verdict, when its preconditions hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator: Option<bool>,
}

/// A random map out of a random source: each component is a homomorphism
/// with probability 3/4 and an arbitrary pointed map otherwise.
pub fn hom_trial(
    sources: &[(&'static str, TotalSystem)],
    targets: &[(&'static str, FiniteGroup)],
    seed: u64,
) -> Result<HomTrial, HomError> {
    let mut rng = random::rng(seed);
    let (sname, sys) = &sources[rng.gen_range(0..sources.len())];
    let (tname, target) = &targets[rng.gen_range(0..targets.len())];
    let comps = (1..=sys.r())
        .map(|l| {
            let h = sys.factor(l);
            if rng.gen_bool(0.75) {
                random_hom(h, target, &mut rng).expect("small hom search")
            } else {
                random_pointed_map(h, target, &mut rng)
            }
        })
        .collect();
    let m = hom::assemble(sys.clone(), FiniteMonoid::from(target), comps)?;
    let pairs = hom::check_hom_all(&m).holds;
    let exhaustive = hom::brute_force_hom(&m, SizeCaps::default())?.holds;
    let commutator = hom::check_commutator_criterion(&m).ok().map(|c| c.holds);
    Ok(HomTrial { seed, source: sname.to_string(), target: tname.to_string(), pairs, exhaustive, commutator })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomExperiment {
    pub seed: u64,
    pub count: u64,
    pub agreement: Agreement,
    pub commutator_checked: u64,
    pub commutator_disagreements: Vec<u64>,
    pub disagreements: Vec<u64>,
}

/// All `H[f;k,j]` pass iff `f` is a homomorphism, and the commutator
/// criterion gives the same verdict whenever it applies.
pub fn hom_experiment(seed: u64, count: u64) -> Result<HomExperiment, HomError> {
    let sources = associative_sources();
    let targets = small_targets();
    let mut agreement = Agreement::default();
    let (mut disagreements, mut commutator_disagreements) = (Vec::new(), Vec::new());
    let mut commutator_checked = 0;
    for s in trial_seeds(seed, count) {
        let t = hom_trial(&sources, &targets, s)?;
        agreement.record(t.pairs, t.exhaustive);
        if t.pairs != t.exhaustive {
            disagreements.push(s);
        }
        if let Some(c) = t.commutator {
            commutator_checked += 1;
            if c != t.exhaustive {
                commutator_disagreements.push(s);
            }
        }
    }
    Ok(HomExperiment { seed, count, agreement, commutator_checked, commutator_disagreements, disagreements })
}
