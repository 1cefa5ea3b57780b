use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{Signed, Zero};

use super::{Integer, Rational};
use crate::{Error, Result};

/// A point of the extended nonnegative real axis `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtReal {
    Finite(Rational),
    Infinity,
}

impl ExtReal {
    /// Rejects negative values.
    pub fn finite(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::precondition(format!("{value} is negative")));
        }
        Ok(ExtReal::Finite(value))
    }

    pub fn from_integer(value: impl Into<Integer>) -> Self {
        let value = Rational::from_integer(value.into());
        assert!(
            !value.is_negative(),
            "ExtReal::from_integer on a negative value"
        );
        ExtReal::Finite(value)
    }

    pub fn zero() -> Self {
        ExtReal::Finite(Rational::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Finite(r) => Some(r),
            ExtReal::Infinity => None,
        }
    }

    /// Division with `a/∞ = 0`, `a/0 = ∞` for `a > 0`; `∞/∞` and `0/0`
    /// are rejected.
    pub fn checked_div(&self, rhs: &ExtReal) -> Result<ExtReal> {
        match (self, rhs) {
            (ExtReal::Infinity, ExtReal::Infinity) => Err(Error::Indeterminate),
            (ExtReal::Finite(_), ExtReal::Infinity) => Ok(ExtReal::zero()),
            (ExtReal::Infinity, ExtReal::Finite(_)) => Ok(ExtReal::Infinity),
            (ExtReal::Finite(x), ExtReal::Finite(y)) if y.is_zero() => {
                if x.is_zero() {
                    Err(Error::precondition("0/0 is undefined"))
                } else {
                    Ok(ExtReal::Infinity)
                }
            }
            (ExtReal::Finite(x), ExtReal::Finite(y)) => Ok(ExtReal::Finite(x / y)),
        }
    }
}

impl Add for &ExtReal {
    type Output = ExtReal;

    fn add(self, rhs: &ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(x), ExtReal::Finite(y)) => ExtReal::Finite(x + y),
            _ => ExtReal::Infinity,
        }
    }
}

impl Mul for &ExtReal {
    type Output = ExtReal;

    /// `0·∞ = 0`.
    fn mul(self, rhs: &ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(x), ExtReal::Finite(y)) => ExtReal::Finite(x * y),
            (ExtReal::Finite(x), ExtReal::Infinity) | (ExtReal::Infinity, ExtReal::Finite(x))
                if x.is_zero() =>
            {
                ExtReal::zero()
            }
            _ => ExtReal::Infinity,
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtReal::Finite(x), ExtReal::Finite(y)) => x.cmp(y),
            (ExtReal::Finite(_), ExtReal::Infinity) => Ordering::Less,
            (ExtReal::Infinity, ExtReal::Finite(_)) => Ordering::Greater,
            (ExtReal::Infinity, ExtReal::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(r) => write!(f, "{r}"),
            ExtReal::Infinity => f.write_str("∞"),
        }
    }
}
