use std::fmt;
use std::ops::Index;

/// A finite word over an alphabet `A`. Words are values: every operation
/// returns a new word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<A> {
    letters: Vec<A>,
}

impl<A> Word<A> {
    pub fn new(letters: Vec<A>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[A] {
        &self.letters
    }

    pub fn iter(&self) -> std::slice::Iter<'_, A> {
        self.letters.iter()
    }

    pub fn into_letters(self) -> Vec<A> {
        self.letters
    }

    pub fn first(&self) -> Option<&A> {
        self.letters.first()
    }
}

impl<A: Clone> Word<A> {
    pub fn concat(&self, other: &Word<A>) -> Word<A> {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn reversed(&self) -> Word<A> {
        Word {
            letters: self.letters.iter().rev().cloned().collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Word<A> {
        Word {
            letters: (0..k).flat_map(|_| self.letters.iter().cloned()).collect(),
        }
    }

    /// The first `n` letters (the whole word if it is shorter).
    pub fn prefix(&self, n: usize) -> Word<A> {
        Word {
            letters: self.letters[..n.min(self.len())].to_vec(),
        }
    }
}

impl<A: PartialEq> Word<A> {
    pub fn is_prefix_of(&self, other: &Word<A>) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn count(&self, letter: &A) -> usize {
        self.letters.iter().filter(|x| *x == letter).count()
    }
}

impl<A> Default for Word<A> {
    fn default() -> Self {
        Word::empty()
    }
}

impl<A> From<Vec<A>> for Word<A> {
    fn from(letters: Vec<A>) -> Self {
        Word { letters }
    }
}

impl From<&str> for Word<char> {
    fn from(s: &str) -> Self {
        s.chars().collect()
    }
}

impl<A> FromIterator<A> for Word<A> {
    fn from_iter<I: IntoIterator<Item = A>>(iter: I) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

impl<'a, A> IntoIterator for &'a Word<A> {
    type Item = &'a A;
    type IntoIter = std::slice::Iter<'a, A>;

    fn into_iter(self) -> Self::IntoIter {
        self.letters.iter()
    }
}

impl<A> Index<usize> for Word<A> {
    type Output = A;

    fn index(&self, i: usize) -> &A {
        &self.letters[i]
    }
}

impl<A: fmt::Display> fmt::Display for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl<A: fmt::Debug> fmt::Debug for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Word").field(&self.letters).finish()
    }
}
