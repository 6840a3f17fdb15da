//! Finite words over an alphabet, stored as letter indices.

use std::ops::Deref;

use crate::alphabet::Letter;

/// A finite word: a sequence of letter indices. The empty word is permitted.
///
/// Words do not carry their alphabet; operations that need one take it as an
/// argument and bound-check the indices they touch.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn single(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend_from(&mut self, other: &[Letter]) {
        self.0.extend_from_slice(other);
    }

    /// `self · other`.
    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn starts_with(&self, prefix: &[Letter]) -> bool {
        self.0.starts_with(prefix)
    }

    /// True when `self` and `other` agree on their common length.
    pub fn prefix_compatible(&self, other: &[Letter]) -> bool {
        let n = self.len().min(other.len());
        self.0[..n] == other[..n]
    }

    /// Longest common prefix length of two slices.
    pub fn lcp_len(x: &[Letter], y: &[Letter]) -> usize {
        let n = x.len().min(y.len());
        let mut i = 0;
        while i < n && x[i] == y[i] {
            i += 1;
        }
        i
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_and_lcp() {
        let w = Word::from_letters(vec![Letter(0), Letter(1)]);
        let v = w.concat(&[Letter(1)]);
        assert_eq!(v.len(), 3);
        assert_eq!(Word::lcp_len(&w, &v), 2);
        assert!(v.starts_with(&w));
        assert!(Word::empty().is_empty());
    }
}
