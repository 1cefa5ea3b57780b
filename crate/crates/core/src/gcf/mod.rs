//! Generalized continued fractions `θ(a, b) = a_0 + b_0/(a_1 + b_1/(a_2 + …))`
//! with coefficients drawn from a finite alphabet of positive integers.

mod convergents;
mod diagnostics;
mod enclosure;
mod quadratic;
mod series;

pub use convergents::{ConvergentPair, Convergents, Recurrence};
pub use diagnostics::{
    diagnostics, write_csv, write_jsonl, Diagnostics, DiagnosticsRow, CSV_HEADER,
};
pub use enclosure::{enclosure, enclosures, evaluate, Enclosure};
pub use quadratic::{
    positive_root, quadratic_approximant, quadratic_approximant_with, quadratic_coefficients,
    root_width, Quadratic, QuadraticApproximant, QuadraticForm,
};
pub use series::{rho, rhos, series_partial, series_partials};

use num_traits::{One, Signed, Zero};

use crate::exact::Integer;
use crate::substitution::{FixedPoint, NumericAssignment, Substitution};
use crate::{Error, Result};

/// Where a coefficient sequence comes from.
#[derive(Clone, Debug)]
pub enum Coefficients {
    /// A finite list; running past its end is an error.
    Explicit(Vec<Integer>),
    /// The list repeated forever.
    Periodic(Vec<Integer>),
    /// The fixed point of `rule` starting at `seed`, read through `values`.
    Substitution {
        rule: Substitution<char>,
        seed: char,
        values: NumericAssignment<char>,
    },
}

impl Coefficients {
    pub fn iter(&self) -> CoeffIter {
        match self {
            Coefficients::Explicit(v) => CoeffIter::Explicit(v.clone().into_iter()),
            Coefficients::Periodic(v) => CoeffIter::Periodic {
                values: v.clone(),
                index: 0,
            },
            Coefficients::Substitution { rule, seed, values } => CoeffIter::Substitution {
                letters: rule.fixed_point(*seed).expect("validated at construction"),
                values: values.clone(),
            },
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Coefficients::Explicit(_) => Ok(()),
            Coefficients::Periodic(v) if v.is_empty() => Err(Error::precondition("empty period")),
            Coefficients::Periodic(_) => Ok(()),
            Coefficients::Substitution { rule, seed, values } => {
                rule.fixed_point(*seed)?;
                for letter in rule.alphabet() {
                    values.value(letter)?;
                }
                Ok(())
            }
        }
    }

    /// Bounds of the values taken from index `from` on.
    fn bounds(&self, from: usize) -> Option<(Integer, Integer)> {
        let (lo, hi) = match self {
            Coefficients::Explicit(v) => (
                v.iter().skip(from).min()?.clone(),
                v.iter().skip(from).max()?.clone(),
            ),
            Coefficients::Periodic(v) => (v.iter().min()?.clone(), v.iter().max()?.clone()),
            Coefficients::Substitution { rule, values, .. } => {
                let used = || rule.alphabet().map(|l| values.value(l).expect("validated"));
                (used().min()?.clone(), used().max()?.clone())
            }
        };
        Some((lo, hi))
    }
}

/// Stream of coefficient values.
#[derive(Clone, Debug)]
pub enum CoeffIter {
    Explicit(std::vec::IntoIter<Integer>),
    Periodic {
        values: Vec<Integer>,
        index: usize,
    },
    Substitution {
        letters: FixedPoint<char>,
        values: NumericAssignment<char>,
    },
}

impl Iterator for CoeffIter {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        match self {
            CoeffIter::Explicit(it) => it.next(),
            CoeffIter::Periodic { values, index } => {
                let v = values[*index % values.len()].clone();
                *index += 1;
                Some(v)
            }
            CoeffIter::Substitution { letters, values } => letters
                .next()
                .map(|l| values.value(&l).expect("validated").clone()),
        }
    }
}

/// The pair of sequences `(a_n)`, `(b_n)` defining `θ(a, b)`, together with
/// the bounds `α ≤ a_n, b_n ≤ β` (for `n ≥ 1` on the `a` side; `a_0 ≥ 0` is
/// unconstrained).
#[derive(Clone, Debug)]
pub struct GcfInput {
    a: Coefficients,
    b: Coefficients,
    alpha: Integer,
    beta: Integer,
}

impl GcfInput {
    pub fn new(a: Coefficients, b: Coefficients) -> Result<Self> {
        a.validate()?;
        b.validate()?;
        if let Coefficients::Periodic(values) = &a {
            if values.iter().any(|v| !v.is_positive()) {
                return Err(Error::precondition("periodic a_n must all be positive"));
            }
        }
        let first_a = a
            .iter()
            .next()
            .ok_or_else(|| Error::precondition("a is empty"))?;
        if first_a.is_negative() {
            return Err(Error::precondition("a_0 must be nonnegative"));
        }
        let (a_lo, a_hi) = a
            .bounds(1)
            .ok_or_else(|| Error::precondition("a needs a_1"))?;
        let (b_lo, b_hi) = b
            .bounds(0)
            .ok_or_else(|| Error::precondition("b is empty"))?;
        let alpha = a_lo.min(b_lo);
        let beta = a_hi.max(b_hi);
        if alpha < Integer::one() {
            return Err(Error::precondition(
                "a_n (n ≥ 1) and b_n must be positive integers",
            ));
        }
        Ok(GcfInput { a, b, alpha, beta })
    }

    /// `a = b =` the fixed point of `rule` from `seed`, read through `values`.
    pub fn from_substitution(
        rule: Substitution<char>,
        seed: char,
        values: NumericAssignment<char>,
    ) -> Result<Self> {
        let coeffs = Coefficients::Substitution { rule, seed, values };
        GcfInput::new(coeffs.clone(), coeffs)
    }

    pub fn explicit(a: Vec<Integer>, b: Vec<Integer>) -> Result<Self> {
        GcfInput::new(Coefficients::Explicit(a), Coefficients::Explicit(b))
    }

    pub fn periodic(a: Vec<Integer>, b: Vec<Integer>) -> Result<Self> {
        GcfInput::new(Coefficients::Periodic(a), Coefficients::Periodic(b))
    }

    /// The period doubling sequence over `{1, 3}` on both sides.
    pub fn period_doubling_13() -> Self {
        GcfInput::from_substitution(
            crate::substitution::period_doubling(),
            'a',
            "a=1,b=3".parse().expect("valid assignment"),
        )
        .expect("valid input")
    }

    pub fn a(&self) -> &Coefficients {
        &self.a
    }

    pub fn b(&self) -> &Coefficients {
        &self.b
    }

    /// Lower bound α of the coefficient alphabet.
    pub fn alpha(&self) -> &Integer {
        &self.alpha
    }

    /// Upper bound β of the coefficient alphabet.
    pub fn beta(&self) -> &Integer {
        &self.beta
    }

    /// `a_0, …, a_{len−1}`.
    pub fn a_prefix(&self, len: usize) -> Result<Vec<Integer>> {
        take(self.a.iter(), len)
    }

    /// `b_0, …, b_{len−1}`.
    pub fn b_prefix(&self, len: usize) -> Result<Vec<Integer>> {
        take(self.b.iter(), len)
    }

    pub fn convergents(&self, n_max: usize) -> Convergents {
        Convergents::new(self, Some(n_max))
    }

    /// The purely periodic continuation `ψ_k` repeating the first `k`
    /// coefficient pairs.
    pub fn periodic_continuation(&self, k: usize) -> Result<GcfInput> {
        if k == 0 {
            return Err(Error::precondition("period must be at least 1"));
        }
        let a = self.a_prefix(k)?;
        if a[0].is_zero() {
            return Err(Error::precondition(
                "a_0 = 0 cannot be repeated as a partial denominator",
            ));
        }
        GcfInput::periodic(a, self.b_prefix(k)?)
    }
}

fn take(iter: CoeffIter, len: usize) -> Result<Vec<Integer>> {
    let v: Vec<Integer> = iter.take(len).collect();
    if v.len() < len {
        return Err(Error::SequenceExhausted(v.len()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn period_doubling_coefficients() {
        let input = GcfInput::period_doubling_13();
        assert_eq!(input.a_prefix(8).unwrap(), ints(&[1, 3, 1, 1, 1, 3, 1, 3]));
        assert_eq!(input.b_prefix(8).unwrap(), ints(&[1, 3, 1, 1, 1, 3, 1, 3]));
        assert_eq!(input.alpha(), &Integer::from(1));
        assert_eq!(input.beta(), &Integer::from(3));
    }

    #[test]
    fn validation() {
        assert!(GcfInput::explicit(ints(&[0, 1, 2]), ints(&[1, 1])).is_ok());
        assert!(GcfInput::explicit(ints(&[-1, 1]), ints(&[1])).is_err());
        assert!(GcfInput::explicit(ints(&[1, 0, 2]), ints(&[1, 1])).is_err());
        assert!(GcfInput::explicit(ints(&[1, 1]), ints(&[0])).is_err());
        assert!(GcfInput::explicit(ints(&[1]), ints(&[1])).is_err());
        assert!(GcfInput::periodic(ints(&[0, 1]), ints(&[1, 1])).is_err());
        let missing: NumericAssignment<char> = "a=1".parse().unwrap();
        assert!(
            GcfInput::from_substitution(crate::substitution::period_doubling(), 'a', missing)
                .is_err()
        );
    }

    #[test]
    fn bounds_skip_a0() {
        let input = GcfInput::explicit(ints(&[0, 2, 5]), ints(&[3, 4])).unwrap();
        assert_eq!(input.alpha(), &Integer::from(2));
        assert_eq!(input.beta(), &Integer::from(5));
    }

    #[test]
    fn periodic_continuation_repeats() {
        let psi = GcfInput::period_doubling_13()
            .periodic_continuation(3)
            .unwrap();
        assert_eq!(psi.a_prefix(7).unwrap(), ints(&[1, 3, 1, 1, 3, 1, 1]));
    }
}
