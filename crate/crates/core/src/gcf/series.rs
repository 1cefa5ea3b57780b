//! The ρ-series: `p_n/q_n = a_0 + (b_0/a_1)(1 + Σ_{k=1}^{n−1} ρ_1⋯ρ_k)` with
//! `ρ_k = −b_k q_{k−1}/q_{k+1}`.
//!
//! Only denominators enter here, so the partial sums are an independent
//! route to the convergents.

use num_traits::{One, Zero};

use super::GcfInput;
use crate::exact::{Integer, Rational};
use crate::{Error, Result};

/// `q_{−1}, q_0, …, q_{last}` from the denominator recurrence alone.
fn denominators(a: &[Integer], b: &[Integer], last: usize) -> Vec<Integer> {
    let mut q = Vec::with_capacity(last + 2);
    q.push(Integer::zero());
    q.push(Integer::one());
    for n in 0..last {
        // q_{n+1} = a_{n+1} q_n + b_n q_{n−1}; q_m sits at index m + 1.
        let next = &a[n + 1] * &q[n + 1] + &b[n] * &q[n];
        q.push(next);
    }
    q
}

/// `ρ_1, …, ρ_{k_max}`.
pub fn rhos(input: &GcfInput, k_max: usize) -> Result<Vec<Rational>> {
    let a = input.a_prefix(k_max + 2)?;
    let b = input.b_prefix(k_max + 1)?;
    let q = denominators(&a, &b, k_max + 1);
    Ok((1..=k_max)
        .map(|k| Rational::new(-(&b[k] * &q[k]), q[k + 2].clone()))
        .collect())
}

/// `ρ_k` for `k ≥ 1`.
pub fn rho(input: &GcfInput, k: usize) -> Result<Rational> {
    if k == 0 {
        return Err(Error::precondition("ρ_k is defined for k ≥ 1"));
    }
    Ok(rhos(input, k)?.pop().expect("k ≥ 1"))
}

/// The partial sums `S_1, …, S_{n_max}`.
pub fn series_partials(input: &GcfInput, n_max: usize) -> Result<Vec<Rational>> {
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let a = input.a_prefix(2)?;
    let b0 = input.b_prefix(1)?.remove(0);
    let lead = Rational::from_integer(a[0].clone());
    let scale = Rational::new(b0, a[1].clone());
    let rho = rhos(input, n_max - 1)?;
    let mut sums = Vec::with_capacity(n_max);
    let mut term = Rational::one();
    let mut acc = Rational::one();
    sums.push(&lead + &scale * &acc);
    for r in &rho {
        term *= r;
        acc += &term;
        sums.push(&lead + &scale * &acc);
    }
    Ok(sums)
}

/// `S_n` for `n ≥ 1`; equals `p_n/q_n`.
pub fn series_partial(input: &GcfInput, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::precondition("the series starts at n = 1"));
    }
    Ok(series_partials(input, n)?.pop().expect("n ≥ 1"))
}
