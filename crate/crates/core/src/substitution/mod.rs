//! Substitutions on finite alphabets and the combinatorics of their fixed
//! points.

mod assignment;
mod frequency;
mod stammer;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use assignment::NumericAssignment;
pub use frequency::Frequencies;
pub use stammer::{
    fold, folding_limit_prefix, folding_word, fractional_power, stammer_scan, StammerBound,
    StammerHit,
};

use crate::exact::Word;
use crate::{Error, Result};

/// Default cap on `j` when searching for the second occurrence of a seed.
pub const DEFAULT_STAMMER_HORIZON: usize = 24;

/// A substitution `ξ`: a total map from letters to nonempty words over the
/// same alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Substitution<A: Ord> {
    rules: BTreeMap<A, Word<A>>,
}

/// Square nonnegative matrix indexed by the alphabet in sorted order; entry
/// `(i, j)` counts letter `i` in the image of letter `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    fn column_sums(&self) -> Vec<u64> {
        (0..self.size())
            .map(|j| self.rows.iter().map(|row| row[j]).sum())
            .collect()
    }
}

impl<A: Ord + Clone + fmt::Display> Substitution<A> {
    pub fn new(rules: impl IntoIterator<Item = (A, Word<A>)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (letter, image) in rules {
            if image.is_empty() {
                return Err(Error::InvalidSubstitution(format!(
                    "image of {letter} is empty"
                )));
            }
            if map.contains_key(&letter) {
                return Err(Error::InvalidSubstitution(format!(
                    "{letter} has two rules"
                )));
            }
            map.insert(letter, image);
        }
        if map.is_empty() {
            return Err(Error::InvalidSubstitution("no rules".into()));
        }
        for image in map.values() {
            if let Some(stray) = image.iter().find(|x| !map.contains_key(*x)) {
                return Err(Error::InvalidSubstitution(format!(
                    "{stray} appears in an image but has no rule"
                )));
            }
        }
        Ok(Substitution { rules: map })
    }

    pub fn alphabet(&self) -> impl Iterator<Item = &A> {
        self.rules.keys()
    }

    pub fn alphabet_size(&self) -> usize {
        self.rules.len()
    }

    pub fn contains(&self, letter: &A) -> bool {
        self.rules.contains_key(letter)
    }

    pub fn image(&self, letter: &A) -> Result<&Word<A>> {
        self.rules
            .get(letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
    }

    /// Replaces every letter of `w` by its image.
    pub fn apply(&self, w: &Word<A>) -> Result<Word<A>> {
        let mut out = Vec::new();
        for letter in w {
            out.extend_from_slice(self.image(letter)?.letters());
        }
        Ok(Word::new(out))
    }

    /// `ξ^k(w)`.
    pub fn iterate(&self, w: &Word<A>, k: usize) -> Result<Word<A>> {
        (0..k).try_fold(w.clone(), |acc, _| self.apply(&acc))
    }

    /// `ξ^k` as a substitution.
    pub fn power(&self, k: usize) -> Result<Substitution<A>> {
        let rules = self
            .rules
            .keys()
            .map(|letter| {
                Ok((
                    letter.clone(),
                    self.iterate(&Word::new(vec![letter.clone()]), k)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Substitution::new(rules)
    }

    /// Lazily generated fixed point beginning with `seed`.
    pub fn fixed_point(&self, seed: A) -> Result<FixedPoint<A>> {
        FixedPoint::new(self.clone(), seed)
    }

    /// The first `n` letters of the fixed point beginning with `seed`.
    pub fn fixed_point_prefix(&self, seed: A, n: usize) -> Result<Word<A>> {
        if n == 0 {
            return Err(Error::precondition("prefix length must be at least 1"));
        }
        self.fixed_point(seed)?.prefix(n)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let letters: Vec<&A> = self.rules.keys().collect();
        let rows = letters
            .iter()
            .map(|target| {
                self.rules
                    .values()
                    .map(|image| image.count(target) as u64)
                    .collect()
            })
            .collect();
        IncidenceMatrix { rows }
    }

    /// True iff some power `k ≤ n²` of the incidence matrix is strictly
    /// positive, `n` being the alphabet size.
    pub fn is_primitive(&self) -> bool {
        let m = self.incidence_matrix();
        let n = m.size();
        let base: Vec<Vec<bool>> = m
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| x > 0).collect())
            .collect();
        let mut power = base.clone();
        for _ in 0..n * n {
            if power.iter().all(|row| row.iter().all(|&x| x)) {
                return true;
            }
            power = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).any(|k| power[i][k] && base[k][j]))
                        .collect()
                })
                .collect();
        }
        false
    }

    /// Letter frequencies of the fixed point beginning with `seed`: exact when
    /// the Perron eigenvalue is an integer, otherwise counted over the first
    /// `horizon` letters.
    pub fn letter_frequencies(&self, seed: A, horizon: usize) -> Result<Frequencies<A>> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        if let Some(exact) = frequency::exact_frequencies(self) {
            return Ok(exact);
        }
        Frequencies::empirical(self, seed, horizon)
    }

    /// Lower bound on the stammering exponent of the fixed point starting at
    /// `seed`: with `k` minimal such that `seed` begins `ξ^k(seed)` and `j`
    /// minimal such that `seed` occurs twice in `ξ^{jk}(seed)`, the bound is
    /// `1 + 1/(|ξ^{jk}(seed)| − 1)`. The search gives up after `max_j`
    /// iterations.
    pub fn stammer_bound(&self, seed: A, max_j: usize) -> Result<StammerBound> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        stammer::stammer_bound(self, seed, max_j)
    }
}

impl<A: Ord + fmt::Display> fmt::Display for Substitution<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, image)) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{letter}->{image}")?;
        }
        Ok(())
    }
}

impl<A: Ord + fmt::Debug> fmt::Debug for Substitution<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.rules.iter()).finish()
    }
}

/// Parses `a->ab;b->aa`. Letters are single ASCII characters.
impl FromStr for Substitution<char> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rules = Vec::new();
        for rule in s.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| Error::parse("rule", format!("missing '->' in {rule:?}")))?;
            let lhs = lhs.trim();
            let rhs = rhs.trim();
            let mut chars = lhs.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(Error::parse(
                        "rule",
                        format!("left side {lhs:?} must be a single letter"),
                    ))
                }
            };
            for c in std::iter::once(letter).chain(rhs.chars()) {
                if !c.is_ascii_graphic() || matches!(c, ';' | '-' | '>') {
                    return Err(Error::parse("rule", format!("invalid letter {c:?}")));
                }
            }
            if rhs.is_empty() {
                return Err(Error::parse("rule", format!("image of {letter} is empty")));
            }
            rules.push((letter, Word::from(rhs)));
        }
        Substitution::new(rules).map_err(|e| Error::parse("rule", e.to_string()))
    }
}

/// The fixed point `lim ξ^n(seed)` as a single-consumer stream of letters.
#[derive(Clone, Debug)]
pub struct FixedPoint<A: Ord> {
    subst: Substitution<A>,
    seed: A,
    /// Invariant: `buffer == ξ(buffer[..expanded])`.
    buffer: Vec<A>,
    expanded: usize,
    position: usize,
}

impl<A: Ord + Clone + fmt::Display> FixedPoint<A> {
    fn new(subst: Substitution<A>, seed: A) -> Result<Self> {
        let image = subst.image(&seed)?.clone();
        if image.first() != Some(&seed) {
            return Err(Error::SeedNotPrefix(seed.to_string()));
        }
        Ok(FixedPoint {
            subst,
            seed,
            buffer: image.into_letters(),
            expanded: 1,
            position: 0,
        })
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        while self.buffer.len() < n {
            if self.expanded >= self.buffer.len() {
                return Err(Error::FiniteFixedPoint(self.seed.to_string()));
            }
            let letter = self.buffer[self.expanded].clone();
            let image = self.subst.image(&letter)?;
            self.buffer.extend_from_slice(image.letters());
            self.expanded += 1;
        }
        Ok(())
    }

    /// The first `n` letters, independent of the stream position.
    pub fn prefix(&mut self, n: usize) -> Result<Word<A>> {
        self.ensure(n)?;
        Ok(Word::new(self.buffer[..n].to_vec()))
    }
}

impl<A: Ord + Clone + fmt::Display> Iterator for FixedPoint<A> {
    type Item = A;

    fn next(&mut self) -> Option<A> {
        self.ensure(self.position + 1).ok()?;
        let letter = self.buffer[self.position].clone();
        self.position += 1;
        Some(letter)
    }
}

/// `a->ab;b->aa`.
pub fn period_doubling() -> Substitution<char> {
    "a->ab;b->aa".parse().expect("valid rule")
}
