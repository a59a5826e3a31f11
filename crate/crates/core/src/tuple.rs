use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::group::Elem;

/// An r-tuple `(h_1, …, h_r)` with one entry per factor.
///
/// Indexing is by level, starting at 1, so `t[k]` is the `H_k` entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tuple<E>(pub Vec<E>);

/// Tuples over concrete group elements.
pub type ElemTuple = Tuple<Elem>;

impl<E> Tuple<E> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.0.iter()
    }

    /// `(level, entry)` pairs, levels starting at 1.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &E)> {
        self.0.iter().enumerate().map(|(i, e)| (i + 1, e))
    }
}

impl<E> Index<usize> for Tuple<E> {
    type Output = E;

    fn index(&self, level: usize) -> &E {
        &self.0[level - 1]
    }
}

impl<E> IndexMut<usize> for Tuple<E> {
    fn index_mut(&mut self, level: usize) -> &mut E {
        &mut self.0[level - 1]
    }
}

impl<E: fmt::Debug> fmt::Debug for Tuple<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl ElemTuple {
    pub fn from_indices(xs: &[usize]) -> Self {
        Tuple(xs.iter().map(|&x| Elem::from(x)).collect())
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|e| e.idx()).collect()
    }
}

impl fmt::Display for ElemTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
