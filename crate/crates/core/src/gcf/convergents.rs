use num_traits::{One, Zero};

use super::{CoeffIter, GcfInput};
use crate::exact::{Integer, Rational};
use crate::{Error, Result};

/// The convergent `p_n/q_n` (not necessarily in lowest terms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub n: usize,
    pub p: Integer,
    pub q: Integer,
}

impl ConvergentPair {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }
}

/// The three-term recurrence
///
/// ```text
/// p_{-1} = 1, q_{-1} = 0, p_0 = a_0, q_0 = 1,
/// p_{n+1} = a_{n+1} p_n + b_n p_{n-1},  q_{n+1} = a_{n+1} q_n + b_n q_{n-1},
/// ```
///
/// checking `p_n q_{n-1} − p_{n-1} q_n = (−1)^{n−1} b_0⋯b_{n−1}` at every step.
#[derive(Clone, Debug)]
pub struct Recurrence {
    a: CoeffIter,
    b: CoeffIter,
    n: usize,
    p: Integer,
    q: Integer,
    p_prev: Integer,
    q_prev: Integer,
    a_n: Integer,
    /// `b_{n−1}`, absent at `n = 0`.
    b_last: Option<Integer>,
    /// `b_0 ⋯ b_{n−1}`.
    b_product: Integer,
}

impl Recurrence {
    /// Starts at `n = 0`.
    pub fn new(input: &GcfInput) -> Result<Self> {
        let mut a = input.a.iter();
        let a0 = a.next().ok_or(Error::SequenceExhausted(0))?;
        let rec = Recurrence {
            a,
            b: input.b.iter(),
            n: 0,
            p: a0.clone(),
            q: Integer::one(),
            p_prev: Integer::one(),
            q_prev: Integer::zero(),
            a_n: a0,
            b_last: None,
            b_product: Integer::one(),
        };
        rec.check_determinant()?;
        Ok(rec)
    }

    fn check_determinant(&self) -> Result<()> {
        let lhs = &self.p * &self.q_prev - &self.p_prev * &self.q;
        // (−1)^{n−1}: negative for even n.
        let rhs = if self.n % 2 == 0 {
            -self.b_product.clone()
        } else {
            self.b_product.clone()
        };
        if lhs != rhs {
            return Err(Error::invariant(format!(
                "determinant identity fails at n = {}: {lhs} ≠ {rhs}",
                self.n
            )));
        }
        Ok(())
    }

    /// Moves from `n` to `n + 1`.
    pub fn advance(&mut self) -> Result<()> {
        let a_next = self.a.next().ok_or(Error::SequenceExhausted(self.n + 1))?;
        let b_n = self.b.next().ok_or(Error::SequenceExhausted(self.n))?;
        let p_next = &a_next * &self.p + &b_n * &self.p_prev;
        let q_next = &a_next * &self.q + &b_n * &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p, p_next);
        self.q_prev = std::mem::replace(&mut self.q, q_next);
        self.b_product *= &b_n;
        self.b_last = Some(b_n);
        self.a_n = a_next;
        self.n += 1;
        self.check_determinant()
    }

    pub fn advance_to(&mut self, n: usize) -> Result<()> {
        while self.n < n {
            self.advance()?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> &Integer {
        &self.p
    }

    pub fn q(&self) -> &Integer {
        &self.q
    }

    /// `p_{n−1}`.
    pub fn p_prev(&self) -> &Integer {
        &self.p_prev
    }

    /// `q_{n−1}`.
    pub fn q_prev(&self) -> &Integer {
        &self.q_prev
    }

    pub fn a_n(&self) -> &Integer {
        &self.a_n
    }

    /// `b_{n−1}`.
    pub fn b_last(&self) -> Option<&Integer> {
        self.b_last.as_ref()
    }

    /// `b_0 ⋯ b_{n−1}` (empty product at `n = 0`).
    pub fn b_product(&self) -> &Integer {
        &self.b_product
    }

    pub fn pair(&self) -> ConvergentPair {
        ConvergentPair {
            n: self.n,
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

/// Single-consumer stream of convergents `n = 0, 1, …, n_max`.
#[derive(Clone, Debug)]
pub struct Convergents {
    state: std::result::Result<Recurrence, Option<Error>>,
    n_max: Option<usize>,
    started: bool,
}

impl Convergents {
    pub(super) fn new(input: &GcfInput, n_max: Option<usize>) -> Self {
        Convergents {
            state: Recurrence::new(input).map_err(Some),
            n_max,
            started: false,
        }
    }

    /// Unbounded stream.
    pub fn unbounded(input: &GcfInput) -> Self {
        Convergents::new(input, None)
    }
}

impl Iterator for Convergents {
    type Item = Result<ConvergentPair>;

    fn next(&mut self) -> Option<Self::Item> {
        let rec = match &mut self.state {
            Ok(rec) => rec,
            Err(pending) => return pending.take().map(Err),
        };
        if self.started {
            if self.n_max.is_some_and(|max| rec.n() >= max) {
                return None;
            }
            if let Err(e) = rec.advance() {
                self.state = Err(None);
                return Some(Err(e));
            }
        }
        self.started = true;
        Some(Ok(rec.pair()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(input: &GcfInput, n: usize) -> Vec<(i64, i64)> {
        input
            .convergents(n)
            .map(|c| {
                let c = c.unwrap();
                (c.p.try_into().unwrap(), c.q.try_into().unwrap())
            })
            .collect()
    }

    #[test]
    fn period_doubling_table() {
        let input = GcfInput::period_doubling_13();
        assert_eq!(
            pairs(&input, 7),
            vec![
                (1, 1),
                (4, 3),
                (7, 6),
                (11, 9),
                (18, 15),
                (65, 54),
                (119, 99),
                (422, 351)
            ]
        );
    }

    #[test]
    fn determinant_at_three() {
        let input = GcfInput::period_doubling_13();
        let mut rec = Recurrence::new(&input).unwrap();
        rec.advance_to(3).unwrap();
        let det = rec.p() * rec.q_prev() - rec.p_prev() * rec.q();
        assert_eq!(det, Integer::from(3));
        assert_eq!(rec.b_product(), &Integer::from(3));
    }

    #[test]
    fn all_ones_gives_fibonacci() {
        let input = GcfInput::periodic(vec![1.into()], vec![1.into()]).unwrap();
        let qs: Vec<i64> = pairs(&input, 6).into_iter().map(|(_, q)| q).collect();
        assert_eq!(qs, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn depth_zero() {
        let input = GcfInput::explicit(vec![5.into(), 1.into()], vec![2.into()]).unwrap();
        assert_eq!(pairs(&input, 0), vec![(5, 1)]);
    }

    #[test]
    fn exhaustion_is_reported_once() {
        let input = GcfInput::explicit(vec![1.into(), 2.into()], vec![1.into()]).unwrap();
        let items: Vec<_> = input.convergents(5).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[2], Err(Error::SequenceExhausted(2)));
    }
}
