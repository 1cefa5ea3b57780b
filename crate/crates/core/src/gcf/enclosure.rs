use std::fmt;

use super::{GcfInput, Recurrence};
use crate::exact::Rational;
use crate::numeric::format_real;
use crate::{Error, Result};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    /// Depth of the convergent pair (or refinement step) that produced it.
    pub depth: usize,
}

impl Enclosure {
    /// Orders the endpoints.
    pub fn new(x: Rational, y: Rational, depth: usize) -> Self {
        if x <= y {
            Enclosure {
                lo: x,
                hi: y,
                depth,
            }
        } else {
            Enclosure {
                lo: y,
                hi: x,
                depth,
            }
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_within(&self, outer: &Enclosure) -> bool {
        outer.lo <= self.lo && self.hi <= outer.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    fn from_recurrence(rec: &Recurrence) -> Self {
        // rec sits at n + 1.
        Enclosure::new(
            Rational::new(rec.p_prev().clone(), rec.q_prev().clone()),
            Rational::new(rec.p().clone(), rec.q().clone()),
            rec.n() - 1,
        )
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_real(&self.lo), format_real(&self.hi))
    }
}

/// `[p_n/q_n, p_{n+1}/q_{n+1}]` (ordered). Contains `θ` since the series
/// terms alternate in sign with shrinking magnitude.
pub fn enclosure(input: &GcfInput, n: usize) -> Result<Enclosure> {
    if n == 0 {
        return Err(Error::precondition("enclosure depth must be at least 1"));
    }
    let mut rec = Recurrence::new(input)?;
    rec.advance_to(n + 1)?;
    Ok(Enclosure::from_recurrence(&rec))
}

/// Enclosures at depths `1..=n_max`.
pub fn enclosures(input: &GcfInput, n_max: usize) -> Result<Vec<Enclosure>> {
    let mut rec = Recurrence::new(input)?;
    rec.advance()?;
    let mut out = Vec::with_capacity(n_max);
    for _ in 1..=n_max {
        rec.advance()?;
        out.push(Enclosure::from_recurrence(&rec));
    }
    Ok(out)
}

/// The enclosure at the smallest depth `n ≥ 1` whose width
/// `b_0⋯b_n/(q_n q_{n+1})` is at most `eps`.
pub fn evaluate(input: &GcfInput, eps: &Rational) -> Result<Enclosure> {
    if eps <= &Rational::from_integer(0.into()) {
        return Err(Error::precondition("eps must be positive"));
    }
    let mut rec = Recurrence::new(input)?;
    rec.advance()?;
    loop {
        let q_n = rec.q().clone();
        rec.advance()?;
        let lhs = rec.b_product() * eps.denom();
        let rhs = eps.numer() * &q_n * rec.q();
        if lhs <= rhs {
            return Ok(Enclosure::from_recurrence(&rec));
        }
    }
}
