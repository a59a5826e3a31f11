//! Compact text notation for words and conditions.
//!
//! ```text
//! [x,y]^n     bracket landing in level n
//! ^{x·y}z     x acting on (y acting on z)
//! ab          product of letters inside one level
//! (u·v)       parenthesized product, used inside brackets and superscripts
//! 1           the empty word
//! ```
//!
//! Levels are implicit: the letters `a`, `b`, `c` carry the levels of the
//! condition they belong to, a bracket carries its superscript, and an action
//! has the level of its target. The parser reconstructs canonical [`Word`]s,
//! so `parse(render(w)) == w`.

use thiserror::Error;

use super::{Atom, ConditionForm, Sym, SymForm, Word};

fn is_letters(w: &Word) -> bool {
    w.atoms.iter().all(|a| matches!(a, Atom::Base { .. }))
}

/// A word in operand position: letters are juxtaposed, anything longer than
/// one atom is parenthesized.
fn render_inner(w: &Word, out: &mut String) {
    match w.atoms.as_slice() {
        [] => out.push('1'),
        [atom] => render_atom(atom, out),
        atoms if is_letters(w) => atoms.iter().for_each(|a| render_atom(a, out)),
        atoms => {
            out.push('(');
            render_seq(atoms, out);
            out.push(')');
        }
    }
}

fn render_seq(atoms: &[Atom], out: &mut String) {
    for (n, a) in atoms.iter().enumerate() {
        if n > 0 {
            out.push('·');
        }
        render_atom(a, out);
    }
}

fn render_atom(atom: &Atom, out: &mut String) {
    match atom {
        Atom::Base { sym, .. } => out.push(sym.letter()),
        Atom::Bracket { left, right, level } => {
            out.push('[');
            render_inner(left, out);
            out.push(',');
            render_inner(right, out);
            out.push_str(&format!("]^{level}"));
        }
        Atom::Action { actors, target } => {
            out.push_str("^{");
            for (n, x) in actors.iter().enumerate() {
                if n > 0 {
                    out.push('·');
                }
                render_inner(x, out);
            }
            out.push('}');
            if target.len() == 1 {
                render_atom(&target.atoms[0], out);
            } else {
                out.push('(');
                if is_letters(target) {
                    target.atoms.iter().for_each(|a| render_atom(a, out));
                } else {
                    render_seq(&target.atoms, out);
                }
                out.push(')');
            }
        }
    }
}

pub fn render_word(w: &Word) -> String {
    if w.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    render_seq(&w.atoms, &mut out);
    out
}

/// One line per level, level 1 first.
pub fn render_form(t: &SymForm) -> Vec<String> {
    t.iter().map(render_word).collect()
}

/// `lhs = rhs`, always as an equation.
pub fn render_equation(c: &ConditionForm) -> String {
    format!("{} = {}", render_word(&c.lhs), render_word(&c.rhs))
}

/// Display form: prose for the two classical rows, `1 = 1` for vacuous
/// conditions, the equation otherwise.
pub fn render(c: &ConditionForm) -> String {
    match (c.k, c.j, c.i, c.l) {
        (2, 1, 1, 1) => "Image(φ_2^1) ⊆ End(H_1)".to_string(),
        (2, 2, 1, 1) => "φ_2^1 is a homomorphism".to_string(),
        _ if c.vacuous => "1 = 1".to_string(),
        _ => render_equation(c),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at offset {pos}, expected {expected}")]
    Unexpected { pos: usize, found: String, expected: &'static str },
    #[error("mixed levels {0} and {1} in one product")]
    MixedLevels(usize, usize),
    #[error("word at level {found} where level {expected} was required")]
    Level { found: usize, expected: usize },
    #[error("actor at level {actor} cannot act on level {target}")]
    ActorLevel { actor: usize, target: usize },
    #[error("missing '=' between the two sides")]
    NoEquation,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    levels: (usize, usize, usize),
}

impl Parser {
    fn new(s: &str, levels: (usize, usize, usize)) -> Self {
        Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, levels }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &'static str) -> Result<T, ParseError> {
        let found = self.peek().map_or_else(|| "end of input".to_string(), |c| format!("'{c}'"));
        Err(ParseError::Unexpected { pos: self.pos, found, expected })
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(what)
        }
    }

    fn is_dot(c: char) -> bool {
        matches!(c, '·' | '.' | '*')
    }

    fn letter(&self, c: char) -> Option<Atom> {
        let (ka, kb, kc) = self.levels;
        match c {
            'a' => Some(Atom::Base { sym: Sym::A, level: ka }),
            'b' => Some(Atom::Base { sym: Sym::B, level: kb }),
            'c' => Some(Atom::Base { sym: Sym::C, level: kc }),
            _ => None,
        }
    }

    fn word(atoms: Vec<Atom>) -> Result<Word, ParseError> {
        let level = atoms[0].level();
        if let Some(a) = atoms.iter().find(|a| a.level() != level) {
            return Err(ParseError::MixedLevels(level, a.level()));
        }
        Ok(Word { level, atoms })
    }

    /// Units separated by dots, up to a closing delimiter or the end.
    fn seq(&mut self) -> Result<Vec<Atom>, ParseError> {
        let mut atoms = self.unit()?;
        while self.peek().is_some_and(Self::is_dot) {
            self.pos += 1;
            atoms.extend(self.unit()?);
        }
        Ok(atoms)
    }

    /// A run of letters, a bracket, an action or a parenthesized product.
    fn unit(&mut self) -> Result<Vec<Atom>, ParseError> {
        match self.peek() {
            Some('[') => Ok(vec![self.bracket()?]),
            Some('^') => Ok(vec![self.action()?]),
            Some('(') => {
                self.pos += 1;
                let atoms = self.seq()?;
                self.expect(')', "')'")?;
                Ok(atoms)
            }
            Some(c) if self.letter(c).is_some() => {
                let mut atoms = Vec::new();
                while let Some(atom) = self.peek().and_then(|c| self.letter(c)) {
                    atoms.push(atom);
                    self.pos += 1;
                }
                Ok(atoms)
            }
            _ => self.err("a letter, '[', '^' or '('"),
        }
    }

    fn bracket(&mut self) -> Result<Atom, ParseError> {
        self.expect('[', "'['")?;
        let left = Self::word(self.seq()?)?;
        self.expect(',', "','")?;
        let right = Self::word(self.seq()?)?;
        self.expect(']', "']'")?;
        self.expect('^', "'^' after a bracket")?;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("a level");
        }
        let level: usize = self.chars[start..self.pos].iter().collect::<String>().parse().expect("digits");
        Ok(Atom::Bracket { left, right, level })
    }

    fn action(&mut self) -> Result<Atom, ParseError> {
        self.expect('^', "'^'")?;
        self.expect('{', "'{'")?;
        let mut actors = vec![Self::word(self.unit()?)?];
        while self.peek().is_some_and(Self::is_dot) {
            self.pos += 1;
            actors.push(Self::word(self.unit()?)?);
        }
        self.expect('}', "'}'")?;
        // A bare target is a single letter; longer targets are parenthesized.
        let target = match self.peek() {
            Some(c) if self.letter(c).is_some() => {
                self.pos += 1;
                vec![self.letter(c).expect("checked")]
            }
            _ => self.unit()?,
        };
        let mut acc = Self::word(target)?;
        for x in actors.iter().rev() {
            if x.level <= acc.level {
                return Err(ParseError::ActorLevel { actor: x.level, target: acc.level });
            }
            acc = Word::act(x, &acc);
        }
        Ok(acc.atoms.into_iter().next().expect("nonempty actor and target"))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            self.err("end of input")
        }
    }
}

/// Parses one side at `level`, with `a`, `b`, `c` at the given levels.
pub fn parse_word(s: &str, levels: (usize, usize, usize), level: usize) -> Result<Word, ParseError> {
    if s.trim() == "1" {
        return Ok(Word::one(level));
    }
    let mut p = Parser::new(s, levels);
    let atoms = p.seq()?;
    p.finish()?;
    let w = Parser::word(atoms)?;
    if w.level != level {
        return Err(ParseError::Level { found: w.level, expected: level });
    }
    Ok(w)
}

/// Parses `lhs = rhs` as the condition `A[k,j,i;l]`.
pub fn parse_condition(s: &str, k: usize, j: usize, i: usize, l: usize) -> Result<ConditionForm, ParseError> {
    let (lhs, rhs) = s.split_once('=').ok_or(ParseError::NoEquation)?;
    let levels = (k, j, i);
    Ok(ConditionForm::new(k, j, i, l, parse_word(lhs, levels, l)?, parse_word(rhs, levels, l)?))
}
