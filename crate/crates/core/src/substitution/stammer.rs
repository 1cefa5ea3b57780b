//! Folding, fractional word powers and stammering prefixes.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive};

use super::Substitution;
use crate::exact::{ratio, Rational, Word};
use crate::{Error, Result};

/// A prefix of the form `w^r` found in a scanned word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StammerHit<A> {
    pub word: Word<A>,
    /// Largest `r` such that `word^r` is a prefix of the scanned word.
    pub exponent: Rational,
}

/// Result of the second-occurrence argument for a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StammerBound {
    /// Least `k ≥ 1` with the seed a prefix of `ξ^k(seed)`.
    pub k: usize,
    /// Least `j ≥ 1` with the seed occurring twice in `ξ^{jk}(seed)`.
    pub j: usize,
    /// `|ξ^{jk}(seed)|`.
    pub image_len: usize,
    /// `1 + 1/(image_len − 1)`.
    pub exponent: Rational,
}

/// The folding `w ↦ w p w̃`.
pub fn fold<A: Clone>(w: &Word<A>, p: &Word<A>) -> Word<A> {
    w.concat(p).concat(&w.reversed())
}

/// The `generations`-th folded word over `{a, b}`: starting from `a`, fold
/// alternately with `b` and `a`, so generation 2 is `(F_a ∘ F_b)(a)` and
/// has length `2^{g+1} − 1`.
pub fn folding_word(generations: usize) -> Word<char> {
    let mut w = Word::from("a");
    for g in 1..=generations {
        let p = if g % 2 == 1 { 'b' } else { 'a' };
        w = fold(&w, &Word::new(vec![p]));
    }
    w
}

/// The first `n` letters of the limit of the folded words, which is the
/// period doubling sequence.
pub fn folding_limit_prefix(n: usize) -> Result<Word<char>> {
    if n == 0 {
        return Err(Error::precondition("prefix length must be at least 1"));
    }
    let mut w = Word::from("a");
    let mut g = 0;
    while w.len() < n {
        g += 1;
        let p = if g % 2 == 1 { 'b' } else { 'a' };
        w = fold(&w, &Word::new(vec![p]));
    }
    Ok(w.prefix(n))
}

/// `w^r`: `⌊r⌋` copies of `w` followed by its prefix of length
/// `⌈(r − ⌊r⌋)·|w|⌉`.
pub fn fractional_power<A: Clone>(w: &Word<A>, r: &Rational) -> Result<Word<A>> {
    if !r.is_positive() {
        return Err(Error::precondition(format!(
            "exponent {r} must be positive"
        )));
    }
    let whole = r.floor();
    let frac = r - &whole;
    let extra = (frac * Rational::from_integer(w.len().into())).ceil();
    let extra = extra.to_integer().to_usize().expect("bounded by |w|");
    if extra > w.len() {
        return Err(Error::precondition(
            "fractional prefix longer than the word",
        ));
    }
    let copies = whole
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::precondition(format!("exponent {r} too large")))?;
    Ok(w.pow(copies).concat(&w.prefix(extra)))
}

/// Every prefix `w` of `prefix` with `|w| ≥ min_len` such that `w^r` is
/// also a prefix, by direct comparison, ordered by `|w|`.
pub fn stammer_scan<A: Clone + PartialEq>(
    prefix: &Word<A>,
    r: &Rational,
    min_len: usize,
) -> Result<Vec<StammerHit<A>>> {
    if r <= &Rational::one() {
        return Err(Error::precondition(format!("exponent {r} must exceed 1")));
    }
    let letters = prefix.letters();
    let n = letters.len();
    let mut hits = Vec::new();
    for m in min_len.max(1)..=n {
        // |w^r| = ⌈r·m⌉ grows with m.
        let needed = (r * Rational::from_integer(m.into())).ceil().to_integer();
        if needed > n.into() {
            break;
        }
        let overlap = letters[m..]
            .iter()
            .zip(letters)
            .take_while(|(x, y)| x == y)
            .count();
        let reach = m + overlap;
        let exponent = ratio(reach as u64, m as u64);
        if &exponent >= r {
            hits.push(StammerHit {
                word: Word::new(letters[..m].to_vec()),
                exponent,
            });
        }
    }
    Ok(hits)
}

/// Cap on `|ξ^{jk}(seed)|` during the bound search.
const MAX_IMAGE_LEN: usize = 1 << 26;

pub(super) fn stammer_bound<A: Ord + Clone + fmt::Display>(
    s: &Substitution<A>,
    seed: A,
    max_j: usize,
) -> Result<StammerBound> {
    let mut letter = seed.clone();
    let mut k = None;
    for step in 1..=s.alphabet_size() {
        letter = s.image(&letter)?.first().expect("nonempty image").clone();
        if letter == seed {
            k = Some(step);
            break;
        }
    }
    let k = k.ok_or_else(|| Error::SeedNotPrefix(seed.to_string()))?;
    let xi_k = s.power(k)?;
    let mut w = Word::new(vec![seed.clone()]);
    for j in 1..=max_j {
        w = xi_k.apply(&w)?;
        if w.count(&seed) >= 2 {
            let len = w.len();
            let exponent = Rational::one() + ratio(1u64, (len - 1) as u64);
            return Ok(StammerBound {
                k,
                j,
                image_len: len,
                exponent,
            });
        }
        if w.len() > MAX_IMAGE_LEN {
            break;
        }
    }
    Err(Error::HorizonExceeded(format!(
        "no second occurrence of {seed} within j ≤ {max_j}"
    )))
}
