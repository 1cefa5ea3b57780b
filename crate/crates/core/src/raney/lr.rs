use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{Integer, Mat2, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lr {
    L,
    R,
}

impl Lr {
    pub fn matrix(self) -> Mat2 {
        match self {
            Lr::L => Mat2::left(),
            Lr::R => Mat2::right(),
        }
    }

    /// `L^k` or `R^k`.
    pub fn power(self, k: &Integer) -> Mat2 {
        match self {
            Lr::L => Mat2::new(1, 0, k.clone(), 1),
            Lr::R => Mat2::new(1, k.clone(), 0, 1),
        }
    }

    pub fn other(self) -> Lr {
        match self {
            Lr::L => Lr::R,
            Lr::R => Lr::L,
        }
    }
}

impl fmt::Display for Lr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lr::L => "L",
            Lr::R => "R",
        })
    }
}

impl TryFrom<char> for Lr {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'L' => Ok(Lr::L),
            'R' => Ok(Lr::R),
            other => Err(Error::UnknownLetter(other.to_string())),
        }
    }
}

/// A word over `{L, R}` stored as maximal runs, so that `L^{10^40}` costs
/// one entry.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrRuns {
    runs: Vec<(Lr, Integer)>,
}

impl LrRuns {
    pub fn new() -> Self {
        LrRuns::default()
    }

    pub fn runs(&self) -> &[(Lr, Integer)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters.
    pub fn len(&self) -> Integer {
        self.runs.iter().map(|(_, k)| k).sum()
    }

    pub fn push(&mut self, x: Lr) {
        self.push_count(x, Integer::one());
    }

    pub fn push_count(&mut self, x: Lr, k: Integer) {
        if k.is_zero() {
            return;
        }
        match self.runs.last_mut() {
            Some((last, count)) if *last == x => *count += k,
            _ => self.runs.push((x, k)),
        }
    }

    pub fn extend(&mut self, other: &LrRuns) {
        for (x, k) in &other.runs {
            self.push_count(*x, k.clone());
        }
    }

    pub fn first(&self) -> Option<Lr> {
        self.runs.first().map(|(x, _)| *x)
    }

    /// Letter-by-letter iteration. Runs beyond `u64` are not supported.
    pub fn letters(&self) -> impl Iterator<Item = Lr> + '_ {
        self.runs.iter().flat_map(|(x, k)| {
            let k = k.to_u64().expect("run length fits in u64");
            std::iter::repeat(*x).take(k as usize)
        })
    }

    pub fn to_word(&self) -> Word<Lr> {
        self.letters().collect()
    }

    /// Letters without exponents, e.g. `LLRRRR`.
    pub fn to_plain(&self) -> String {
        self.letters()
            .map(|x| if x == Lr::L { 'L' } else { 'R' })
            .collect()
    }

    pub fn product(&self) -> Mat2 {
        self.runs
            .iter()
            .fold(Mat2::identity(), |acc, (x, k)| &acc * &x.power(k))
    }
}

impl From<&Word<Lr>> for LrRuns {
    fn from(w: &Word<Lr>) -> Self {
        w.iter().copied().collect()
    }
}

impl FromIterator<Lr> for LrRuns {
    fn from_iter<I: IntoIterator<Item = Lr>>(iter: I) -> Self {
        let mut out = LrRuns::new();
        for x in iter {
            out.push(x);
        }
        out
    }
}

/// `RL^4RL^10`; the empty word prints as `ε`.
impl fmt::Display for LrRuns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("ε");
        }
        for (x, k) in &self.runs {
            if k.is_one() {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LrRuns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LrRuns({self})")
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴'..='⁹' => Some(c as u32 - '⁴' as u32 + 4),
        _ => None,
    }
}

/// Accepts plain letters (`RLLR`), caret exponents (`RL^2R`) and superscript
/// exponents (`RL²R`). `ε` and the empty string denote the empty word.
impl FromStr for LrRuns {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse("word", msg);
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = LrRuns::new();
        let mut i = 0;
        if chars == ['ε'] {
            return Ok(out);
        }
        while i < chars.len() {
            let x = Lr::try_from(chars[i]).map_err(|_| {
                bad(format!(
                    "unexpected {:?} in {s:?}; expected L or R",
                    chars[i]
                ))
            })?;
            i += 1;
            let mut exponent = String::new();
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    exponent.push(chars[i]);
                    i += 1;
                }
                if exponent.is_empty() {
                    return Err(bad(format!("missing exponent after ^ in {s:?}")));
                }
            } else {
                while let Some(d) = chars.get(i).and_then(|&c| superscript_digit(c)) {
                    exponent.push(char::from_digit(d, 10).expect("digit"));
                    i += 1;
                }
            }
            let k = if exponent.is_empty() {
                Integer::one()
            } else {
                exponent
                    .parse::<Integer>()
                    .map_err(|e| bad(e.to_string()))?
            };
            if k.is_zero() {
                return Err(bad(format!("zero exponent in {s:?}")));
            }
            out.push_count(x, k);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms_agree() {
        let a: LrRuns = "RLLR".parse().unwrap();
        let b: LrRuns = "RL^2R".parse().unwrap();
        let c: LrRuns = "RL²R".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string(), "RL^2R");
        assert_eq!(a.to_plain(), "RLLR");
        assert_eq!("L¹¹".parse::<LrRuns>().unwrap().len(), 11.into());
        assert_eq!(
            "RL^4RL^10".parse::<LrRuns>().unwrap().to_string(),
            "RL^4RL^10"
        );
    }

    #[test]
    fn parse_rejects() {
        assert!("RXL".parse::<LrRuns>().is_err());
        assert!("L^".parse::<LrRuns>().is_err());
        assert!("L^0".parse::<LrRuns>().is_err());
        assert!("".parse::<LrRuns>().unwrap().is_empty());
        assert_eq!(LrRuns::new().to_string(), "ε");
        assert!("ε".parse::<LrRuns>().unwrap().is_empty());
    }

    #[test]
    fn products() {
        let w: LrRuns = "RL^3".parse().unwrap();
        let expanded = Mat2::product(&[Mat2::right(), Mat2::left(), Mat2::left(), Mat2::left()]);
        assert_eq!(w.product(), expanded);
        assert_eq!(w.product(), Mat2::new(4, 1, 3, 1));
    }

    #[test]
    fn runs_merge() {
        let mut w = LrRuns::new();
        w.push(Lr::L);
        w.push(Lr::L);
        w.push_count(Lr::R, 0.into());
        w.push(Lr::L);
        assert_eq!(w.runs(), &[(Lr::L, Integer::from(3))]);
    }
}
