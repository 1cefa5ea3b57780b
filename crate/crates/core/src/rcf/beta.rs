use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::NormalForm;
use crate::exact::{Integer, Mat2};

/// Factors of a residual core: the three determinant-3 states and `L`, `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BetaLetter {
    Beta1,
    Beta2,
    Beta3,
    L,
    R,
}

impl BetaLetter {
    const SEARCH_ORDER: [BetaLetter; 5] = [
        BetaLetter::Beta1,
        BetaLetter::Beta2,
        BetaLetter::L,
        BetaLetter::R,
        BetaLetter::Beta3,
    ];

    pub fn matrix(self) -> Mat2 {
        match self {
            BetaLetter::Beta1 => Mat2::new(3, 0, 0, 1),
            BetaLetter::Beta2 => Mat2::new(1, 0, 0, 3),
            BetaLetter::Beta3 => Mat2::new(2, 1, 1, 2),
            BetaLetter::L => Mat2::left(),
            BetaLetter::R => Mat2::right(),
        }
    }

    /// `self⁻¹·m` if it is a nonnegative integer matrix.
    fn left_divide(self, m: &Mat2) -> Option<Mat2> {
        let three = Integer::from(3);
        let exact = |x: Integer| x.is_multiple_of(&three).then(|| x / &three);
        let q = match self {
            BetaLetter::Beta1 => Mat2 {
                a: exact(m.a.clone())?,
                b: exact(m.b.clone())?,
                c: m.c.clone(),
                d: m.d.clone(),
            },
            BetaLetter::Beta2 => Mat2 {
                a: m.a.clone(),
                b: m.b.clone(),
                c: exact(m.c.clone())?,
                d: exact(m.d.clone())?,
            },
            BetaLetter::Beta3 => Mat2 {
                a: exact(&m.a * 2 - &m.c)?,
                b: exact(&m.b * 2 - &m.d)?,
                c: exact(&m.c * 2 - &m.a)?,
                d: exact(&m.d * 2 - &m.b)?,
            },
            BetaLetter::L => Mat2 {
                a: m.a.clone(),
                b: m.b.clone(),
                c: &m.c - &m.a,
                d: &m.d - &m.b,
            },
            BetaLetter::R => Mat2 {
                a: &m.a - &m.c,
                b: &m.b - &m.d,
                c: m.c.clone(),
                d: m.d.clone(),
            },
        };
        q.is_nonnegative().then_some(q)
    }
}

impl fmt::Display for BetaLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaLetter::Beta1 => "β1",
            BetaLetter::Beta2 => "β2",
            BetaLetter::Beta3 => "β3",
            BetaLetter::L => "L",
            BetaLetter::R => "R",
        })
    }
}

/// A factorization of a residual as a word over [`BetaLetter`], followed by
/// `RJ` when the parity is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaWord {
    pub letters: Vec<BetaLetter>,
    pub trailing_rj: bool,
}

impl BetaWord {
    pub fn uses_beta3(&self) -> bool {
        self.letters.contains(&BetaLetter::Beta3)
    }

    pub fn product(&self) -> Mat2 {
        let mut m = Mat2::product(&self.letters.iter().map(|l| l.matrix()).collect::<Vec<_>>());
        if self.trailing_rj {
            m = &m * &(&Mat2::right() * &Mat2::swap());
        }
        m
    }
}

impl fmt::Display for BetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.letters.len() {
            let x = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&y| y == x).count();
            if run == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{run}")?;
            }
            i += run;
        }
        if self.trailing_rj {
            f.write_str("RJ")?;
        }
        Ok(())
    }
}

fn search(m: &Mat2, word: &mut Vec<BetaLetter>, budget: &mut usize) -> bool {
    if m.is_identity() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for x in BetaLetter::SEARCH_ORDER {
        if let Some(rest) = x.left_divide(m) {
            word.push(x);
            if search(&rest, word, budget) {
                return true;
            }
            word.pop();
        }
    }
    false
}

/// Searches for a β-word matching the residual of `nf`. At odd parity the
/// trailing `RJ` is divided off first; an even-parity residual is factored
/// directly. `None` when no factorization is found within `budget` steps.
pub fn beta_word(nf: &NormalForm, budget: usize) -> Option<BetaWord> {
    let trailing_rj = nf.parity == 1;
    let core = if trailing_rj {
        // (RJ)⁻¹ = [[0, 1], [1, −1]].
        &nf.residual * &Mat2::new(0, 1, 1, -1)
    } else {
        nf.residual.clone()
    };
    if !core.is_nonnegative() || core.det().is_zero() || core.det().is_negative() {
        return None;
    }
    let mut letters = Vec::new();
    let mut budget = budget;
    search(&core, &mut letters, &mut budget).then_some(BetaWord {
        letters,
        trailing_rj,
    })
}
