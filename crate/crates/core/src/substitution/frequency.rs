use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::Substitution;
use crate::exact::{ratio, Rational};
use crate::Result;

/// Letter frequencies of a substitution fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frequencies<A: Ord> {
    /// Normalized Perron eigenvector for an integral Perron eigenvalue.
    Exact {
        eigenvalue: u64,
        values: BTreeMap<A, Rational>,
    },
    /// Counts over the first `horizon` letters; never presented as exact.
    Empirical {
        horizon: usize,
        values: BTreeMap<A, Rational>,
    },
}

impl<A: Ord + Clone + fmt::Display> Frequencies<A> {
    pub fn values(&self) -> &BTreeMap<A, Rational> {
        match self {
            Frequencies::Exact { values, .. } | Frequencies::Empirical { values, .. } => values,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Frequencies::Exact { .. })
    }

    /// Counts letters over the first `horizon` letters of the fixed point.
    pub fn empirical(s: &Substitution<A>, seed: A, horizon: usize) -> Result<Self> {
        let prefix = s.fixed_point_prefix(seed, horizon)?;
        let values = s
            .alphabet()
            .map(|letter| {
                (
                    letter.clone(),
                    ratio(prefix.count(letter) as u64, horizon as u64),
                )
            })
            .collect();
        Ok(Frequencies::Empirical { horizon, values })
    }
}

/// Tries every integer between the smallest and largest image length (the
/// Perron root lies in that range) and keeps the first one whose eigenspace
/// is a single strictly positive ray.
pub(super) fn exact_frequencies<A: Ord + Clone + fmt::Display>(
    s: &Substitution<A>,
) -> Option<Frequencies<A>> {
    let m = s.incidence_matrix();
    let sums = m.column_sums();
    let (lo, hi) = (*sums.iter().min()?, *sums.iter().max()?);
    for lambda in (lo..=hi).rev() {
        let shifted: Vec<Vec<Rational>> = m
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| {
                        let diag = if i == j { lambda } else { 0 };
                        ratio(x as i128 - diag as i128, 1)
                    })
                    .collect()
            })
            .collect();
        let kernel = null_space(shifted);
        if kernel.len() != 1 {
            continue;
        }
        let v = &kernel[0];
        let total: Rational = v.iter().sum();
        if total.is_zero() {
            continue;
        }
        let normalized: Vec<Rational> = v.iter().map(|x| x / &total).collect();
        if normalized.iter().all(|x| x.is_positive()) {
            let values = s.alphabet().cloned().zip(normalized).collect();
            return Some(Frequencies::Exact {
                eigenvalue: lambda,
                values,
            });
        }
    }
    None
}

/// Basis of the null space, by reduction to row echelon form.
fn null_space(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = ratio(1, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}
