use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::{QuotientReport, QuotientSource};
use crate::exact::{Integer, Rational};
use crate::gcf::Enclosure;
use crate::{Error, Result};

fn floor(x: &Rational) -> Integer {
    x.numer().div_floor(x.denom())
}

/// Runs the regular continued fraction algorithm on both endpoints together
/// and keeps the quotients on which they agree. Stops at the first
/// disagreement, or once an endpoint is an exact integer.
pub fn interval_report(e: &Enclosure) -> Result<QuotientReport> {
    if !e.lo.is_positive() || e.lo > e.hi {
        return Err(Error::precondition("interval must satisfy 0 < lo ≤ hi"));
    }
    let mut x = e.lo.clone();
    let mut y = e.hi.clone();
    let mut confirmed = Vec::new();
    let next_lower_bound = loop {
        let (fx, fy) = (floor(&x), floor(&y));
        if fx != fy {
            break fx.min(fy);
        }
        let rx = &x - Rational::from_integer(fx.clone());
        let ry = &y - Rational::from_integer(fy);
        confirmed.push(fx);
        match (rx.is_zero(), ry.is_zero()) {
            (true, true) => break Integer::zero(),
            (true, false) => break floor(&ry.recip()),
            (false, true) => break floor(&rx.recip()),
            (false, false) => {
                x = rx.recip();
                y = ry.recip();
            }
        }
    };
    Ok(QuotientReport {
        confirmed,
        next_lower_bound,
        source: QuotientSource::Interval,
    })
}

pub fn interval_quotients(e: &Enclosure) -> Result<Vec<Integer>> {
    Ok(interval_report(e)?.confirmed)
}
