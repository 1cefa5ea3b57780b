use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Enclosure, GcfInput, Recurrence};
use crate::exact::{Integer, Mat2, Rational};
use crate::{Error, Result};

/// Which polynomial to attach to the period-`k` continuation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum QuadraticForm {
    /// `R x² + (S − P) x − Q` for `M_0⋯M_{k−1} = [[P, Q], [R, S]]`, i.e. the
    /// fixed-point equation `x = M(x)`.
    #[default]
    FixedPoint,
    /// `q_{k−1} x² + (q_k − p_{k−1}) x − p_k` with the convergents of the
    /// periodic continuation. Kept for comparison only: at `k = 1` its root
    /// is `√(a_0² + b_0)` rather than the fixed point of `x = a_0 + b_0/x`.
    ConvergentForm,
}

/// `a x² + b x + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
}

impl Quadratic {
    pub fn new(a: Integer, b: Integer, c: Integer) -> Self {
        Quadratic { a, b, c }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let a = Rational::from_integer(self.a.clone());
        let b = Rational::from_integer(self.b.clone());
        let c = Rational::from_integer(self.c.clone());
        (a * x + b) * x + c
    }

    /// Whether `[lo, hi]` witnesses a root: the values at the endpoints have
    /// opposite signs or one of them vanishes.
    pub fn brackets(&self, e: &Enclosure) -> bool {
        let lo = self.eval(&e.lo);
        let hi = self.eval(&e.hi);
        lo.is_zero() || hi.is_zero() || lo.is_negative() != hi.is_negative()
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^2", self.a)?;
        for (coeff, suffix) in [(&self.b, "x"), (&self.c, "")] {
            if coeff.is_negative() {
                write!(f, " - {}{suffix}", -coeff)?;
            } else {
                write!(f, " + {coeff}{suffix}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticApproximant {
    pub k: usize,
    pub form: QuadraticForm,
    pub coefficients: Quadratic,
    pub root: Enclosure,
}

/// Default enclosure width for the positive root.
pub fn root_width() -> Rational {
    Rational::new(Integer::one(), num_traits::pow(Integer::from(10), 30))
}

pub fn quadratic_coefficients(
    input: &GcfInput,
    k: usize,
    form: QuadraticForm,
) -> Result<Quadratic> {
    if k == 0 {
        return Err(Error::precondition("period must be at least 1"));
    }
    match form {
        QuadraticForm::FixedPoint => {
            let a = input.a_prefix(k)?;
            let b = input.b_prefix(k)?;
            let factors: Vec<Mat2> = a
                .into_iter()
                .zip(b)
                .map(|(a, b)| Mat2::partial(a, b))
                .collect();
            let m = Mat2::product(&factors);
            Ok(Quadratic::new(m.c.clone(), &m.d - &m.a, -m.b))
        }
        QuadraticForm::ConvergentForm => {
            let psi = input.periodic_continuation(k)?;
            let mut rec = Recurrence::new(&psi)?;
            rec.advance_to(k)?;
            Ok(Quadratic::new(
                rec.q_prev().clone(),
                rec.q() - rec.p_prev(),
                -rec.p().clone(),
            ))
        }
    }
}

/// Encloses the unique positive root of `q` by bisection until the width is
/// at most `width`.
pub fn positive_root(q: &Quadratic, width: &Rational) -> Result<Enclosure> {
    if !width.is_positive() {
        return Err(Error::precondition("root width must be positive"));
    }
    if !q.a.is_positive() {
        return Err(Error::precondition("leading coefficient must be positive"));
    }
    if q.c.is_zero() {
        // Roots 0 and −b/a.
        if !q.b.is_negative() {
            return Err(Error::precondition(format!("{q} has no positive root")));
        }
        let r = Rational::new(-q.b.clone(), q.a.clone());
        return Ok(Enclosure::new(r.clone(), r, 0));
    }
    if q.c.is_positive() {
        return Err(Error::precondition(format!(
            "{q} has no unique positive root (constant term must be ≤ 0)"
        )));
    }
    // f(0) = c < 0 and f > 0 beyond the Cauchy bound.
    let mut lo = Rational::zero();
    let mut hi = Rational::new(Integer::one(), Integer::one())
        + Rational::new(q.b.abs().max(q.c.abs()), q.a.clone());
    let two = Rational::from_integer(2.into());
    let mut steps = 0;
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let v = q.eval(&mid);
        if v.is_zero() {
            return Ok(Enclosure::new(mid.clone(), mid, steps + 1));
        }
        if v.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }
    Ok(Enclosure::new(lo, hi, steps))
}

/// The fixed-point quadratic of the period-`k` continuation and its
/// positive root to width `10^{−30}`.
pub fn quadratic_approximant(input: &GcfInput, k: usize) -> Result<QuadraticApproximant> {
    quadratic_approximant_with(input, k, QuadraticForm::FixedPoint, &root_width())
}

pub fn quadratic_approximant_with(
    input: &GcfInput,
    k: usize,
    form: QuadraticForm,
    width: &Rational,
) -> Result<QuadraticApproximant> {
    let coefficients = quadratic_coefficients(input, k, form)?;
    let root = positive_root(&coefficients, width)?;
    Ok(QuadraticApproximant {
        k,
        form,
        coefficients,
        root,
    })
}
