//! Numeric evaluation of symbolic words against a concrete total system.
//!
//! This is an independent evaluator: it reads atoms straight off the system's
//! tables and never goes through the multiplication engine, which makes it a
//! cross-check on the symbolic expansion.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Atom, ConditionForm, Sym, Word};
use crate::group::Elem;
use crate::system::TotalSystem;

/// Values for `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
}

fn mismatch<T>(msg: String) -> Result<T, EvalError> {
    Err(EvalError::LevelMismatch(msg))
}

struct Ctx<'a> {
    sys: &'a TotalSystem,
    levels: (usize, usize, usize),
    values: Assignment,
}

impl Ctx<'_> {
    fn word(&self, w: &Word) -> Result<Elem, EvalError> {
        if w.level == 0 || w.level > self.sys.r() {
            return mismatch(format!("word level {} outside 1..={}", w.level, self.sys.r()));
        }
        let g = self.sys.factor(w.level);
        let mut acc = g.identity();
        for atom in &w.atoms {
            if atom.level() != w.level {
                return mismatch(format!("atom of level {} in a level-{} word", atom.level(), w.level));
            }
            acc = g.mul(acc, self.atom(atom)?);
        }
        Ok(acc)
    }

    fn atom(&self, atom: &Atom) -> Result<Elem, EvalError> {
        match atom {
            Atom::Base { sym, level } => {
                let (want, value) = match sym {
                    Sym::A => (self.levels.0, self.values.a),
                    Sym::B => (self.levels.1, self.values.b),
                    Sym::C => (self.levels.2, self.values.c),
                };
                if *level != want {
                    return mismatch(format!("{} at level {level}, assigned at level {want}", sym.letter()));
                }
                if !self.sys.factor(want).contains(value) {
                    return mismatch(format!("value {value} for {} is not in H_{want}", sym.letter()));
                }
                Ok(value)
            }
            Atom::Bracket { left, right, level } => {
                let (p, q, n) = (left.level, right.level, *level);
                if !(p > q && q >= n && n >= 1) {
                    return mismatch(format!("bracket of levels {p},{q} landing in {n}"));
                }
                let (x, y) = (self.word(left)?, self.word(right)?);
                if n < q {
                    Ok(self.sys.bracket(p, q, n, x, y))
                } else {
                    // [x,y]^q is ^{x}y · y⁻¹
                    let g = self.sys.factor(q);
                    Ok(g.mul(self.sys.act(p, q, x, y), g.inv(y)))
                }
            }
            Atom::Action { actors, target } => {
                let mut v = self.word(target)?;
                for x in actors.iter().rev() {
                    if x.level <= target.level {
                        return mismatch(format!("actor at level {} on level {}", x.level, target.level));
                    }
                    v = self.sys.act(x.level, target.level, self.word(x)?, v);
                }
                Ok(v)
            }
        }
    }
}

/// Evaluates both sides of `c` in `H_l`.
pub fn instantiate(c: &ConditionForm, sys: &TotalSystem, values: Assignment) -> Result<(Elem, Elem), EvalError> {
    let ctx = Ctx { sys, levels: c.symbol_levels(), values };
    for w in [&c.lhs, &c.rhs] {
        if w.level != c.l {
            return mismatch(format!("side at level {} in a level-{} condition", w.level, c.l));
        }
    }
    Ok((ctx.word(&c.lhs)?, ctx.word(&c.rhs)?))
}

/// Evaluates a single word with the same conventions as [`instantiate`].
pub fn evaluate_word(
    w: &Word,
    sys: &TotalSystem,
    levels: (usize, usize, usize),
    values: Assignment,
) -> Result<Elem, EvalError> {
    Ctx { sys, levels, values }.word(w)
}
