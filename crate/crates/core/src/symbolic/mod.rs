//! Symbolic evaluation of the law `μ` and the componentwise associativity
//! conditions `A[k,j,i;l]`.
//!
//! Symbols `a`, `b`, `c` stand for arbitrary elements of `H_k`, `H_j`, `H_i`.
//! Running the generic multiplication engine over [`FreeAlgebra`] expands
//! both sides of `a·(b·c) = (a·b)·c` into per-level [`Word`]s made of bracket
//! and action atoms. Words are compared syntactically, as elements of the free
//! monoid on atoms. In [`Mode::Literal`] nothing is simplified beyond the unit
//! conditions; [`Mode::Reduced`] also lets lower-level actors act by
//! automorphisms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::FactorAlgebra;
use crate::mul;
use crate::tuple::Tuple;

mod eval;
mod notation;
mod table;

pub use eval::{instantiate, Assignment, EvalError};
pub use notation::{parse_condition, parse_word, render, render_equation, render_form, render_word, ParseError};
pub use table::{
    adjudicate, reference_table, verify_reference_table, Adjudication, ReferenceRow, RowCheck, SideVerdict,
    TableReport, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sym {
    A,
    B,
    C,
}

impl Sym {
    pub fn letter(self) -> char {
        match self {
            Sym::A => 'a',
            Sym::B => 'b',
            Sym::C => 'c',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Atom {
    Base {
        sym: Sym,
        level: usize,
    },
    /// `[left, right]^level`.
    Bracket {
        left: Word,
        right: Word,
        level: usize,
    },
    /// `^{x_1·…·x_n} target`: the composite of the actions of the actors,
    /// the rightmost applied first. The target is never itself a lone action.
    Action {
        actors: Vec<Word>,
        target: Word,
    },
}

impl Atom {
    pub fn level(&self) -> usize {
        match self {
            Atom::Base { level, .. } | Atom::Bracket { level, .. } => *level,
            Atom::Action { target, .. } => target.level,
        }
    }

    fn map_levels(&self, f: &impl Fn(usize) -> usize) -> Atom {
        match self {
            Atom::Base { sym, level } => Atom::Base { sym: *sym, level: f(*level) },
            Atom::Bracket { left, right, level } => {
                Atom::Bracket { left: left.map_levels(f), right: right.map_levels(f), level: f(*level) }
            }
            Atom::Action { actors, target } => {
                Atom::Action { actors: actors.iter().map(|w| w.map_levels(f)).collect(), target: target.map_levels(f) }
            }
        }
    }

    fn collect_levels(&self, out: &mut BTreeSet<usize>) {
        out.insert(self.level());
        match self {
            Atom::Base { .. } => {}
            Atom::Bracket { left, right, .. } => {
                left.collect_levels(out);
                right.collect_levels(out);
            }
            Atom::Action { actors, target } => {
                actors.iter().for_each(|w| w.collect_levels(out));
                target.collect_levels(out);
            }
        }
    }
}

/// A product of atoms in `H_level`; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    pub level: usize,
    pub atoms: Vec<Atom>,
}

impl Word {
    pub fn one(level: usize) -> Self {
        Word { level, atoms: Vec::new() }
    }

    pub fn base(sym: Sym, level: usize) -> Self {
        Word { level, atoms: vec![Atom::Base { sym, level }] }
    }

    pub fn is_one(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.level, other.level);
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Word { level: self.level, atoms }
    }

    /// `^{actor} target`, flattening `^{x}(^{y}z)` into `^{x·y}z`.
    pub fn act(actor: &Word, target: &Word) -> Word {
        if actor.is_one() || target.is_one() {
            return target.clone();
        }
        let atom = match target.atoms.as_slice() {
            [Atom::Action { actors, target: inner }] => {
                let mut all = Vec::with_capacity(actors.len() + 1);
                all.push(actor.clone());
                all.extend(actors.iter().cloned());
                Atom::Action { actors: all, target: inner.clone() }
            }
            _ => Atom::Action { actors: vec![actor.clone()], target: target.clone() },
        };
        Word { level: target.level, atoms: vec![atom] }
    }

    /// `[left, right]^level`, trivial when either operand is.
    pub fn bracket(left: &Word, right: &Word, level: usize) -> Word {
        if left.is_one() || right.is_one() {
            return Word::one(level);
        }
        Word { level, atoms: vec![Atom::Bracket { left: left.clone(), right: right.clone(), level }] }
    }

    pub fn map_levels(&self, f: &impl Fn(usize) -> usize) -> Word {
        Word { level: f(self.level), atoms: self.atoms.iter().map(|a| a.map_levels(f)).collect() }
    }

    pub fn collect_levels(&self, out: &mut BTreeSet<usize>) {
        out.insert(self.level);
        self.atoms.iter().for_each(|a| a.collect_levels(out));
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

/// How far words are normalized beyond the unit conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The free expansion: nothing but the unit conditions is assumed.
    #[default]
    Literal,
    /// For a condition with top index `k`, every action by an actor below
    /// level `k` is taken to be an action by automorphisms, as it is once
    /// the law is associative on `R_{k-1}`: such actions distribute over
    /// products, and a product of actors acts by composition.
    Reduced,
}

/// The free total system on `r` levels: group laws are concatenation,
/// actions and brackets build atoms. With `automorphic_below = t`, actors of
/// level below `t` act by automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeAlgebra {
    pub r: usize,
    pub automorphic_below: usize,
}

impl FreeAlgebra {
    pub fn literal(r: usize) -> Self {
        FreeAlgebra { r, automorphic_below: 0 }
    }

    pub fn new(r: usize, mode: Mode) -> Self {
        match mode {
            Mode::Literal => Self::literal(r),
            Mode::Reduced => FreeAlgebra { r, automorphic_below: r },
        }
    }

    pub fn act_word(&self, actor: &Word, target: &Word) -> Word {
        if actor.level >= self.automorphic_below || actor.is_one() || target.is_one() {
            return Word::act(actor, target);
        }
        let mut acc = target.clone();
        for x in actor.atoms.iter().rev() {
            let x = Word { level: actor.level, atoms: vec![x.clone()] };
            let atoms =
                acc.atoms.iter().flat_map(|t| Word::act(&x, &Word { level: acc.level, atoms: vec![t.clone()] }).atoms);
            acc = Word { level: acc.level, atoms: atoms.collect() };
        }
        acc
    }
}

impl FactorAlgebra for FreeAlgebra {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.r
    }

    fn one(&self, level: usize) -> Word {
        Word::one(level)
    }

    fn is_one(&self, _level: usize, x: &Word) -> bool {
        x.is_one()
    }

    fn mul(&self, _level: usize, x: &Word, y: &Word) -> Word {
        x.concat(y)
    }

    fn act(&self, _k: usize, _j: usize, a: &Word, b: &Word) -> Word {
        self.act_word(a, b)
    }

    fn bracket(&self, _k: usize, _j: usize, i: usize, a: &Word, b: &Word) -> Word {
        Word::bracket(a, b, i)
    }
}

/// A symbolic tuple, one word per level.
pub type SymForm = Tuple<Word>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("indices must satisfy k >= j >= i >= 1, got ({k},{j},{i})")]
    Index { k: usize, j: usize, i: usize },
    #[error("actor level {actor} must exceed the rank {rank} of the operand")]
    Level { actor: usize, rank: usize },
    #[error("component {l} of A[{k},{j},{i}] differs although {l} > {i}")]
    InternalVacuousnessViolation { k: usize, j: usize, i: usize, l: usize },
}

/// The symbol `s` placed at `level` in an `r`-level form.
pub fn sym_elementary(r: usize, sym: Sym, level: usize) -> SymForm {
    mul::elementary(&FreeAlgebra::literal(r), level, Word::base(sym, level))
}

/// `φ_x(v)` for an actor word `x` above the rank of `v`.
pub fn sym_phi(x: &Word, v: &SymForm) -> Result<SymForm, SymbolicError> {
    sym_phi_in(&FreeAlgebra::literal(v.len()), x, v)
}

pub fn sym_phi_in(alg: &FreeAlgebra, x: &Word, v: &SymForm) -> Result<SymForm, SymbolicError> {
    let rank = mul::rank(alg, v);
    if x.level <= rank || x.level > v.len() {
        return Err(SymbolicError::Level { actor: x.level, rank });
    }
    if x.level < 2 {
        // Only the unit form lies below level 1.
        return Ok(v.clone());
    }
    Ok(mul::phi_ext(alg, x.level, x, v).expect("levels checked above"))
}

pub fn sym_mu(u: &SymForm, v: &SymForm) -> SymForm {
    mul::mu(&FreeAlgebra::literal(u.len()), u, v)
}

/// Both sides of `A[k,j,i]`, as `(a·(b·c), (a·b)·c)` over `k` levels.
pub fn evaluate_sides(k: usize, j: usize, i: usize) -> Result<(SymForm, SymForm), SymbolicError> {
    evaluate_sides_in(Mode::Literal, k, j, i)
}

pub fn evaluate_sides_in(mode: Mode, k: usize, j: usize, i: usize) -> Result<(SymForm, SymForm), SymbolicError> {
    if !(k >= j && j >= i && i >= 1) {
        return Err(SymbolicError::Index { k, j, i });
    }
    let alg = FreeAlgebra::new(k, mode);
    let (a, b, c) = (sym_elementary(k, Sym::A, k), sym_elementary(k, Sym::B, j), sym_elementary(k, Sym::C, i));
    let lhs = mul::mu(&alg, &a, &mul::mu(&alg, &b, &c));
    let rhs = mul::mu(&alg, &mul::mu(&alg, &a, &b), &c);
    Ok((lhs, rhs))
}

/// `A[k,j,i;l]`: the level-`l` words of `a·(b·c)` and `(a·b)·c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConditionForm {
    pub k: usize,
    pub j: usize,
    pub i: usize,
    pub l: usize,
    pub lhs: Word,
    pub rhs: Word,
    /// Both sides are the same word.
    pub vacuous: bool,
}

impl ConditionForm {
    pub fn new(k: usize, j: usize, i: usize, l: usize, lhs: Word, rhs: Word) -> Self {
        let vacuous = lhs == rhs;
        ConditionForm { k, j, i, l, lhs, rhs, vacuous }
    }

    pub fn label(&self) -> String {
        format!("A[{},{},{};{}]", self.k, self.j, self.i, self.l)
    }

    /// The symbol levels `(a, b, c)`.
    pub fn symbol_levels(&self) -> (usize, usize, usize) {
        (self.k, self.j, self.i)
    }

    /// Same condition with the two sides exchanged.
    pub fn swapped(&self) -> Self {
        ConditionForm { lhs: self.rhs.clone(), rhs: self.lhs.clone(), ..self.clone() }
    }
}

/// The conditions `A[k,j,i;l]` for `1 ≤ l ≤ i`, after confirming that the
/// two sides agree syntactically on every level above `i`.
pub fn generate_conditions(k: usize, j: usize, i: usize) -> Result<Vec<ConditionForm>, SymbolicError> {
    generate_conditions_in(Mode::Literal, k, j, i)
}

pub fn generate_conditions_in(mode: Mode, k: usize, j: usize, i: usize) -> Result<Vec<ConditionForm>, SymbolicError> {
    let (lhs, rhs) = evaluate_sides_in(mode, k, j, i)?;
    for l in i + 1..=k {
        if lhs[l] != rhs[l] {
            return Err(SymbolicError::InternalVacuousnessViolation { k, j, i, l });
        }
    }
    Ok((1..=i).map(|l| ConditionForm::new(k, j, i, l, lhs[l].clone(), rhs[l].clone())).collect())
}

/// One condition `A[k,j,i;l]`.
pub fn condition(k: usize, j: usize, i: usize, l: usize) -> Result<ConditionForm, SymbolicError> {
    condition_in(Mode::Literal, k, j, i, l)
}

pub fn condition_in(mode: Mode, k: usize, j: usize, i: usize, l: usize) -> Result<ConditionForm, SymbolicError> {
    if !(l >= 1 && l <= i) {
        return Err(SymbolicError::Index { k, j, i });
    }
    Ok(generate_conditions_in(mode, k, j, i)?.swap_remove(l - 1))
}

/// The shape of a condition with its levels replaced by their rank among
/// all levels occurring in it (the indices `k, j, i, l` included).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimilarityKey {
    pub indices: [usize; 4],
    pub lhs: Word,
    pub rhs: Word,
}

pub fn similarity_key(c: &ConditionForm) -> SimilarityKey {
    let mut levels = BTreeSet::from([c.k, c.j, c.i, c.l]);
    c.lhs.collect_levels(&mut levels);
    c.rhs.collect_levels(&mut levels);
    let rank: BTreeMap<usize, usize> = levels.iter().enumerate().map(|(n, &l)| (l, n + 1)).collect();
    let f = |l: usize| rank[&l];
    SimilarityKey { indices: [f(c.k), f(c.j), f(c.i), f(c.l)], lhs: c.lhs.map_levels(&f), rhs: c.rhs.map_levels(&f) }
}

/// `A[k,k-1,i;1]` for `1 ≤ i < k`, then `A[k,k,k-1;1]`, for each
/// `2 ≤ k ≤ max_k`.
pub fn canonical_representatives(mode: Mode, max_k: usize) -> Vec<ConditionForm> {
    let mut out = Vec::new();
    for k in 2..=max_k {
        for i in 1..k {
            out.push(condition_in(mode, k, k - 1, i, 1).expect("valid indices"));
        }
        out.push(condition_in(mode, k, k, k - 1, 1).expect("valid indices"));
    }
    out
}

/// A condition together with the representative of its similarity class,
/// or `None` for vacuous conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedCondition {
    pub form: ConditionForm,
    pub class: Option<String>,
}

/// Every `A[k,j,i;l]` with `max_k ≥ k ≥ j ≥ i ≥ l ≥ 1`, `k ≥ 2`, in
/// lexicographic index order, each tagged with its class representative.
/// A non-vacuous condition that matches no representative is an error in
/// the engine and panics.
pub fn classify_all(mode: Mode, max_k: usize) -> Vec<ClassifiedCondition> {
    let reps: BTreeMap<SimilarityKey, String> =
        canonical_representatives(mode, max_k).iter().map(|c| (similarity_key(c), c.label())).collect();
    let mut out = Vec::new();
    for k in 2..=max_k {
        for j in 1..=k {
            for i in 1..=j {
                for form in generate_conditions_in(mode, k, j, i).expect("valid indices") {
                    let class = if form.vacuous {
                        None
                    } else {
                        let key = similarity_key(&form);
                        let swapped = similarity_key(&form.swapped());
                        let hit = reps.get(&key).or_else(|| reps.get(&swapped));
                        Some(hit.unwrap_or_else(|| panic!("{} matches no representative", form.label())).clone())
                    };
                    out.push(ClassifiedCondition { form, class });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, levels: (usize, usize, usize), level: usize) -> Word {
        parse_word(s, levels, level).unwrap()
    }

    #[test]
    fn word_constructors_apply_the_unit_conditions() {
        let a = Word::base(Sym::A, 3);
        let b = Word::base(Sym::B, 2);
        assert_eq!(Word::act(&Word::one(3), &b), b);
        assert_eq!(Word::act(&a, &Word::one(2)), Word::one(2));
        assert_eq!(Word::bracket(&a, &Word::one(2), 1), Word::one(1));
        let ab = Word::act(&a, &Word::act(&Word::base(Sym::B, 2), &Word::base(Sym::C, 1)));
        assert_eq!(render_word(&ab), "^{a·b}c");
    }

    #[test]
    fn phi_of_a_single_letter() {
        let out = sym_phi(&Word::base(Sym::A, 3), &sym_elementary(3, Sym::B, 2)).unwrap();
        assert_eq!(render_word(&out[1]), "[a,b]^1");
        assert_eq!(render_word(&out[2]), "^{a}b");
        assert!(out[3].is_one());
        let unit = mul::unit(&FreeAlgebra::literal(3));
        assert_eq!(sym_phi(&Word::base(Sym::A, 3), &unit).unwrap(), unit);
        assert!(sym_phi(&Word::base(Sym::A, 2), &sym_elementary(3, Sym::B, 2)).is_err());
    }

    #[test]
    fn phi_over_a_product_follows_the_worked_expansion() {
        let (k, j, i) = (4, 3, 2);
        let bc = sym_mu(&sym_elementary(4, Sym::B, j), &sym_elementary(4, Sym::C, i));
        let out = sym_phi(&Word::base(Sym::A, k), &bc).unwrap();
        let lv = (k, j, i);
        assert_eq!(out[1], w("^{a}[b,c]^1·[a,^{b}c]^1·^{^{a·b}c}[a,b]^1", lv, 1));
        assert_eq!(out[2], w("^{a·b}c·[a,b]^2", lv, 2));
        assert_eq!(out[3], w("^{a}b", lv, 3));
    }

    #[test]
    fn mu_basics() {
        let alg = FreeAlgebra::literal(3);
        let unit = mul::unit(&alg);
        let v = sym_mu(&sym_elementary(3, Sym::B, 2), &sym_elementary(3, Sym::C, 1));
        assert_eq!(sym_mu(&unit, &v), v);
        assert_eq!(sym_mu(&v, &unit), v);
        // noninterfering: plain concatenation
        let p = sym_mu(&sym_elementary(3, Sym::C, 1), &sym_elementary(3, Sym::B, 2));
        assert_eq!(render_form(&p), vec!["c", "b", "1"]);
    }

    #[test]
    fn worked_example_left_side() {
        let (lhs, _) = evaluate_sides(4, 3, 2).unwrap();
        assert_eq!(
            render_form(&lhs),
            vec!["^{a}[b,c]^1·[a,^{b}c]^1·^{^{a·b}c}[a,b]^1", "^{a·b}c·[a,b]^2", "^{a}b", "a"]
        );
    }

    #[test]
    fn worked_example_right_side() {
        let (_, rhs) = evaluate_sides_in(Mode::Reduced, 4, 3, 2).unwrap();
        assert_eq!(
            render_form(&rhs),
            vec!["[a,b]^1·^{[a,b]^2·^{a}b}[a,c]^1·^{[a,b]^2}[^{a}b,^{a}c]^1", "[a,b]^2·^{^{a}b·a}c", "^{a}b", "a"]
        );
    }

    #[test]
    fn small_conditions() {
        let c = condition(2, 1, 1, 1).unwrap();
        assert_eq!(render_equation(&c), "^{a}(bc) = ^{a}b·^{a}c");
        let c = condition(2, 2, 1, 1).unwrap();
        assert_eq!(render_equation(&c), "^{a·b}c = ^{ab}c");
        let c = condition(3, 3, 2, 1).unwrap();
        assert_eq!(render_equation(&c), "^{a}[b,c]^1·[a,^{b}c]^1 = [ab,c]^1");
        let c = condition(4, 3, 2, 2).unwrap();
        assert_eq!(render_equation(&c), "^{a·b}c·[a,b]^2 = [a,b]^2·^{^{a}b·a}c");
        let c = condition(3, 2, 2, 1).unwrap();
        assert_eq!(render_equation(&c), "[a,bc]^1 = [a,b]^1·^{^{a}b}[a,c]^1");
    }

    #[test]
    fn vacuous_components_above_i() {
        for k in 1..=6 {
            for j in 1..=k {
                for i in 1..=j {
                    let forms = generate_conditions(k, j, i).unwrap();
                    assert_eq!(forms.len(), i);
                }
            }
        }
        assert!(generate_conditions(3, 3, 3).unwrap().iter().all(|c| c.vacuous));
        assert!(matches!(generate_conditions(2, 3, 1), Err(SymbolicError::Index { .. })));
    }

    fn key_in(mode: Mode, k: usize, j: usize, i: usize, l: usize) -> SimilarityKey {
        similarity_key(&condition_in(mode, k, j, i, l).unwrap())
    }

    const MODES: [Mode; 2] = [Mode::Literal, Mode::Reduced];

    #[test]
    fn named_similarities() {
        for mode in MODES {
            let key = |k, j, i, l| key_in(mode, k, j, i, l);
            assert_eq!(key(4, 2, 1, 1), key(4, 3, 2, 2));
            assert_ne!(key(3, 2, 1, 1), key(3, 2, 2, 1));
            assert_eq!(key(5, 3, 2, 1), key(4, 3, 2, 1));
        }
    }

    #[test]
    fn similarity_relations_up_to_six() {
        for mode in MODES {
            let key = |k, j, i, l| key_in(mode, k, j, i, l);
            for k in 1..=5 {
                for j in 1..k {
                    for i in 1..=j {
                        for l in 1..=i {
                            assert_eq!(key(k + 1, j, i, l), key(k, j, i, l), "1: A[{},{j},{i};{l}]", k + 1);
                            assert_eq!(key(k, j, i, l), key(k + 1, j + 1, i + 1, l + 1), "2: A[{k},{j},{i};{l}]");
                        }
                    }
                }
                for i in 1..k {
                    for l in 1..=i {
                        assert_eq!(key(k + 1, k + 1, i, l), key(k, k, i, l), "3: A[{k},{k},{i};{l}]");
                        assert_eq!(key(k, k, i, l), key(k + 1, k + 1, i + 1, l + 1), "4: A[{k},{k},{i};{l}]");
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_only_touches_lower_actions() {
        // The two classical rows and the k = 3 rows read the same either way.
        for (k, j, i) in [(2, 1, 1), (2, 2, 1), (3, 2, 1), (3, 2, 2), (3, 3, 2)] {
            assert_eq!(condition_in(Mode::Literal, k, j, i, 1), condition_in(Mode::Reduced, k, j, i, 1));
        }
        let lit = condition_in(Mode::Literal, 4, 3, 2, 1).unwrap();
        let red = condition_in(Mode::Reduced, 4, 3, 2, 1).unwrap();
        assert_eq!(render_word(&lit.rhs), "[a,b]^1·^{[a,b]^2}(^{^{a}b}[a,c]^1·[^{a}b,^{a}c]^1)");
        assert_eq!(render_word(&red.rhs), "[a,b]^1·^{[a,b]^2·^{a}b}[a,c]^1·^{[a,b]^2}[^{a}b,^{a}c]^1");
        assert_eq!(lit.lhs, red.lhs);
    }

    #[test]
    fn representatives_are_pairwise_dissimilar() {
        for mode in MODES {
            let reps = canonical_representatives(mode, 5);
            assert_eq!(reps.len(), 14);
            assert_eq!(canonical_representatives(mode, 2).len(), 2);
            assert_eq!(canonical_representatives(mode, 3).len(), 5);
            let keys: BTreeSet<_> = reps.iter().map(similarity_key).collect();
            assert_eq!(keys.len(), 14);
            assert!(reps.iter().all(|c| !c.vacuous));
        }
    }

    #[test]
    fn every_condition_has_a_class() {
        for mode in MODES {
            let all = classify_all(mode, 5);
            for c in &all {
                assert_eq!(c.class.is_none(), c.form.vacuous, "{}", c.form.label());
            }
            let classes: BTreeSet<_> = all.iter().filter_map(|c| c.class.clone()).collect();
            assert_eq!(classes.len(), 14);
        }
    }
}
