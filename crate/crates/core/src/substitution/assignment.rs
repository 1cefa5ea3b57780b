use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::exact::Integer;
use crate::{Error, Result};

/// Positive integer values attached to letters, e.g. `a=1,b=3`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericAssignment<A: Ord> {
    values: BTreeMap<A, Integer>,
}

impl<A: Ord + Clone + fmt::Display> NumericAssignment<A> {
    pub fn new(values: impl IntoIterator<Item = (A, Integer)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (letter, value) in values {
            if value < Integer::one() {
                return Err(Error::precondition(format!(
                    "value of {letter} must be a positive integer, got {value}"
                )));
            }
            if map.insert(letter.clone(), value).is_some() {
                return Err(Error::precondition(format!("{letter} is assigned twice")));
            }
        }
        if map.is_empty() {
            return Err(Error::precondition("empty assignment"));
        }
        Ok(NumericAssignment { values: map })
    }

    pub fn value(&self, letter: &A) -> Result<&Integer> {
        self.values
            .get(letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
    }

    /// Smallest assigned value (α).
    pub fn min_value(&self) -> &Integer {
        self.values.values().min().expect("nonempty")
    }

    /// Largest assigned value (β).
    pub fn max_value(&self) -> &Integer {
        self.values.values().max().expect("nonempty")
    }

    pub fn letters(&self) -> impl Iterator<Item = &A> {
        self.values.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A, &Integer)> {
        self.values.iter()
    }
}

impl<A: Ord + fmt::Display> fmt::Display for NumericAssignment<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, value)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{letter}={value}")?;
        }
        Ok(())
    }
}

impl<A: Ord + fmt::Display> fmt::Debug for NumericAssignment<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericAssignment({self})")
    }
}

impl FromStr for NumericAssignment<char> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (letter, value) = item.split_once('=').ok_or_else(|| {
                Error::parse("assign", format!("expected letter=value, got {item:?}"))
            })?;
            let mut chars = letter.trim().chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::parse("assign", format!("bad letter in {item:?}"))),
            };
            let value: Integer = value
                .trim()
                .parse()
                .map_err(|_| Error::parse("assign", format!("bad value in {item:?}")))?;
            if !value.is_positive() {
                return Err(Error::parse(
                    "assign",
                    format!("value in {item:?} must be positive"),
                ));
            }
            values.push((letter, value));
        }
        NumericAssignment::new(values).map_err(|e| Error::parse("assign", e.to_string()))
    }
}
