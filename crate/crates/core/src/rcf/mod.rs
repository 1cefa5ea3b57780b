//! Regular continued fraction partial quotients of `θ`, read off the greedy
//! `L/R` factorization of the letter-matrix product and, independently,
//! from nested rational enclosures.

mod beta;
mod crosscheck;
mod interval;

pub use beta::{beta_word, BetaLetter, BetaWord};
pub use crosscheck::{cross_check, cross_check_with, CrossCheck};
pub use interval::{interval_quotients, interval_report};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{Integer, Mat2, Word};
use crate::raney::{emit_matrix, Lr, LrRuns};
use crate::substitution::NumericAssignment;
use crate::{Error, Result};

/// Letter → matrix, each of the form `[[v, v], [1, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterEncoding {
    matrices: BTreeMap<char, Mat2>,
}

impl LetterEncoding {
    /// `a ↦ A = [[1,1],[1,0]]`, `b ↦ B = [[3,3],[1,0]]`.
    pub fn canonical() -> Self {
        LetterEncoding::from_assignment(&"a=1,b=3".parse().expect("valid assignment"))
    }

    pub fn from_assignment(values: &NumericAssignment<char>) -> Self {
        let matrices = values
            .iter()
            .map(|(letter, v)| (*letter, Mat2::partial(v.clone(), v.clone())))
            .collect();
        LetterEncoding { matrices }
    }

    pub fn matrix(&self, letter: char) -> Result<&Mat2> {
        self.matrices
            .get(&letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
    }
}

pub fn encode(w: &Word<char>, enc: &LetterEncoding) -> Result<Vec<Mat2>> {
    w.iter().map(|&c| enc.matrix(c).cloned()).collect()
}

/// `product(encoded word) = product(prefix) · residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub prefix: LrRuns,
    pub residual: Mat2,
    /// Number of absorbed letters mod 2; every letter matrix carries one `J`.
    pub parity: u8,
}

impl NormalForm {
    pub fn verify(&self, encoded: &[Mat2]) -> bool {
        Mat2::product(encoded) == &self.prefix.product() * &self.residual
    }
}

/// Streaming normalization: multiply one letter matrix at a time and emit
/// greedily after each step.
#[derive(Clone, Debug)]
pub struct Normalizer {
    enc: LetterEncoding,
    prefix: LrRuns,
    residual: Mat2,
    letters: usize,
}

impl Normalizer {
    pub fn new(enc: LetterEncoding) -> Self {
        Normalizer {
            enc,
            prefix: LrRuns::new(),
            residual: Mat2::identity(),
            letters: 0,
        }
    }

    /// Returns the letters emitted by this step.
    pub fn push(&mut self, letter: char) -> Result<LrRuns> {
        let m = &self.residual * self.enc.matrix(letter)?;
        let (out, residual) = emit_matrix(&m)?;
        self.prefix.extend(&out);
        self.residual = residual;
        self.letters += 1;
        Ok(out)
    }

    pub fn letters_read(&self) -> usize {
        self.letters
    }

    pub fn prefix(&self) -> &LrRuns {
        &self.prefix
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm {
            prefix: self.prefix.clone(),
            residual: self.residual.clone(),
            parity: (self.letters % 2) as u8,
        }
    }
}

pub fn normalize(w: &Word<char>, enc: &LetterEncoding) -> Result<NormalForm> {
    let mut n = Normalizer::new(enc.clone());
    for &c in w {
        n.push(c)?;
    }
    Ok(n.normal_form())
}

/// Run lengths of `R^{c_0} L^{c_1} R^{c_2}⋯`; a leading `L` gives `c_0 = 0`.
pub fn lr_to_quotients(w: &LrRuns) -> Vec<Integer> {
    let mut out = Vec::with_capacity(w.runs().len() + 1);
    if w.first() == Some(Lr::L) {
        out.push(Integer::zero());
    }
    out.extend(w.runs().iter().map(|(_, k)| k.clone()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientSource {
    Transducer,
    Interval,
}

impl fmt::Display for QuotientSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientSource::Transducer => "transducer",
            QuotientSource::Interval => "interval",
        })
    }
}

/// Partial quotients that are final, and a lower bound on the next one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub confirmed: Vec<Integer>,
    pub next_lower_bound: Integer,
    pub source: QuotientSource,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    confirmed: Vec<serde_json::Number>,
    next_lower_bound: serde_json::Number,
    source: &'a QuotientSource,
}

fn json_number(x: &Integer) -> serde_json::Number {
    x.to_string().parse().expect("decimal integer")
}

impl QuotientReport {
    pub fn to_json(&self) -> String {
        let report = JsonReport {
            confirmed: self.confirmed.iter().map(json_number).collect(),
            next_lower_bound: json_number(&self.next_lower_bound),
            source: &self.source,
        };
        serde_json::to_string(&report).expect("plain data")
    }

    /// `[c_0; c_1, …]` with `…` marking the unconfirmed tail.
    pub fn bracket(&self) -> String {
        let mut s = String::from("[");
        for (i, q) in self.confirmed.iter().enumerate() {
            match i {
                0 => s.push_str(&q.to_string()),
                1 => s.push_str(&format!("; {q}")),
                _ => s.push_str(&format!(", {q}")),
            }
        }
        s.push_str(if self.confirmed.is_empty() {
            "…]"
        } else {
            ", …]"
        });
        s
    }
}

/// Every run of the prefix but the last is final; the last run can still
/// grow, so its length only bounds the next quotient from below.
pub fn confirmed_quotients(nf: &NormalForm) -> QuotientReport {
    let mut confirmed = lr_to_quotients(&nf.prefix);
    let next_lower_bound = confirmed.pop().unwrap_or_else(Integer::zero);
    QuotientReport {
        confirmed,
        next_lower_bound,
        source: QuotientSource::Transducer,
    }
}

/// Normalizes the folding word of generation `g` (length `2^{g+1} − 1`).
pub fn folding_normal_form(g: usize, enc: &LetterEncoding) -> Result<NormalForm> {
    if g > 40 {
        return Err(Error::precondition("folding generation too large"));
    }
    normalize(&crate::substitution::folding_word(g), enc)
}
