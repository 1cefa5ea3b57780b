//! Raney transducers: doubly balanced matrices as states, greedy
//! factorization over `L = [[1,0],[1,1]]` and `R = [[1,1],[0,1]]`, streaming
//! execution and automatic derivation of transition tables.

mod lr;
mod table;

pub use lr::{Lr, LrRuns};
pub use table::{derive_table, enumerate_states, Edge, TransducerTable};

use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::exact::{Integer, Mat2};
use crate::{Error, Result};

/// A nonnegative nonsingular matrix carried through a run. Pending input
/// that cannot yet be emitted is absorbed into it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config(Mat2);

impl Config {
    pub fn new(m: Mat2) -> Result<Self> {
        if !m.is_nonnegative() {
            return Err(Error::InvalidMatrix {
                matrix: m.literal(),
                reason: "entries must be nonnegative".into(),
            });
        }
        if m.det().is_zero() {
            return Err(Error::InvalidMatrix {
                matrix: m.literal(),
                reason: "singular".into(),
            });
        }
        Ok(Config(m))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2 {
        self.0
    }

    pub fn det(&self) -> Integer {
        self.0.det()
    }

    pub fn class(&self) -> BalanceClass {
        balanced_class(&self.0)
    }

    pub fn is_state(&self) -> bool {
        self.class() == BalanceClass::Doubly
    }

    /// `[[3,0],[0,1]]`.
    pub fn beta1() -> Self {
        Config(Mat2::new(3, 0, 0, 1))
    }

    /// `[[1,0],[0,3]]`.
    pub fn beta2() -> Self {
        Config(Mat2::new(1, 0, 0, 3))
    }

    /// `[[2,1],[1,2]]`.
    pub fn beta3() -> Self {
        Config(Mat2::new(2, 1, 1, 2))
    }
}

impl fmt::Debug for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Config({})", self.0)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<Mat2> for Config {
    type Error = Error;

    fn try_from(m: Mat2) -> Result<Self> {
        Config::new(m)
    }
}

impl std::str::FromStr for Config {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Config::new(s.parse()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BalanceClass {
    Doubly,
    ColumnOnly,
    RowOnly,
    None,
}

impl fmt::Display for BalanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BalanceClass::Doubly => "doubly",
            BalanceClass::ColumnOnly => "column-only",
            BalanceClass::RowOnly => "row-only",
            BalanceClass::None => "none",
        })
    }
}

/// Column balanced: `(a−b)(c−d) < 0`. Row balanced: `(a−c)(b−d) < 0`.
pub fn balanced_class(m: &Mat2) -> BalanceClass {
    let column = ((&m.a - &m.b) * (&m.c - &m.d)).is_negative();
    let row = ((&m.a - &m.c) * (&m.b - &m.d)).is_negative();
    match (column, row) {
        (true, true) => BalanceClass::Doubly,
        (true, false) => BalanceClass::ColumnOnly,
        (false, true) => BalanceClass::RowOnly,
        (false, false) => BalanceClass::None,
    }
}

/// `m = L^k·m'` for the largest `k`, or `None` if `L` does not divide `m`.
fn strip(top: (&Integer, &Integer), bottom: (&Integer, &Integer)) -> Option<Integer> {
    if bottom.0 < top.0 || bottom.1 < top.1 {
        return None;
    }
    let quot = |num: &Integer, den: &Integer| (!den.is_zero()).then(|| num.div_floor(den));
    match (quot(bottom.0, top.0), quot(bottom.1, top.1)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// Greedy factorization `m = product(output)·residual`; the residual admits
/// no further left factor `L` or `R`.
pub fn emit_matrix(m: &Mat2) -> Result<(LrRuns, Mat2)> {
    if !m.is_nonnegative() {
        return Err(Error::InvalidMatrix {
            matrix: m.literal(),
            reason: "entries must be nonnegative".into(),
        });
    }
    let mut out = LrRuns::new();
    let mut m = m.clone();
    loop {
        let by_l = strip((&m.a, &m.b), (&m.c, &m.d));
        let by_r = strip((&m.c, &m.d), (&m.a, &m.b));
        match (by_l, by_r) {
            (Some(_), Some(_)) => {
                return Err(Error::invariant(format!(
                    "{m} is divisible by both L and R (determinant {})",
                    m.det()
                )));
            }
            (Some(k), None) => {
                m.c -= &k * &m.a;
                m.d -= &k * &m.b;
                out.push_count(Lr::L, k);
            }
            (None, Some(k)) => {
                m.a -= &k * &m.c;
                m.b -= &k * &m.d;
                out.push_count(Lr::R, k);
            }
            (None, None) => return Ok((out, m)),
        }
    }
}

/// Greedy emission from a configuration.
pub fn emit(c: &Config) -> Result<(LrRuns, Config)> {
    let (out, m) = emit_matrix(&c.0)?;
    Ok((out, Config(m)))
}

/// Reads one letter: `c·x`, then emits.
pub fn feed(c: &Config, x: Lr) -> Result<(LrRuns, Config)> {
    emit(&Config(&c.0 * &x.matrix()))
}

/// Feeds every letter of `input` in order.
pub fn run(start: &Config, input: &LrRuns) -> Result<(LrRuns, Config)> {
    let mut out = LrRuns::new();
    let mut c = start.clone();
    for x in input.letters() {
        let (o, next) = feed(&c, x)?;
        out.extend(&o);
        c = next;
    }
    Ok((out, c))
}

/// One step of [`run_trace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub input: Lr,
    pub output: LrRuns,
    pub config: Config,
}

/// Like [`run`] but records the configuration after every letter.
pub fn run_trace(start: &Config, input: &LrRuns) -> Result<Vec<TraceStep>> {
    let mut steps = Vec::new();
    let mut c = start.clone();
    for x in input.letters() {
        let (output, next) = feed(&c, x)?;
        steps.push(TraceStep {
            input: x,
            output,
            config: next.clone(),
        });
        c = next;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LrRuns {
        s.parse().unwrap()
    }

    fn cfg(a: i64, b: i64, c: i64, d: i64) -> Config {
        Config::new(Mat2::new(a, b, c, d)).unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(
            balanced_class(Config::beta1().matrix()),
            BalanceClass::Doubly
        );
        assert_eq!(
            balanced_class(&Mat2::new(3, 0, 1, 1)),
            BalanceClass::RowOnly
        );
        // (1 − 0)(0 − 1) < 0 on both tests.
        assert_eq!(balanced_class(&Mat2::identity()), BalanceClass::Doubly);
        assert_eq!(
            balanced_class(&Mat2::new(2, 3, 1, 0)),
            BalanceClass::ColumnOnly
        );
        assert_eq!(balanced_class(&Mat2::new(2, 1, 1, 1)), BalanceClass::None);
    }

    #[test]
    fn config_rejects_bad_matrices() {
        assert!(Config::new(Mat2::new(1, 1, 1, 1)).is_err());
        assert!(Config::new(Mat2::new(-1, 0, 0, 1)).is_err());
        assert!(emit_matrix(&Mat2::new(-1, 0, 0, 1)).is_err());
    }

    #[test]
    fn emit_examples() {
        assert_eq!(emit(&cfg(3, 0, 3, 1)).unwrap(), (w("L"), Config::beta1()));
        assert_eq!(
            emit(&cfg(4, 3, 3, 3)).unwrap(),
            (w("RL^3"), Config::beta2())
        );
        assert_eq!(emit(&Config::beta3()).unwrap(), (w(""), Config::beta3()));
    }

    #[test]
    fn emit_singular_is_invariant_error() {
        let err = emit_matrix(&Mat2::new(1, 1, 1, 1)).unwrap_err();
        assert!(err.is_invariant_violation());
    }

    #[test]
    fn feed_examples() {
        assert_eq!(
            feed(&Config::beta1(), Lr::R).unwrap(),
            (w("RRR"), Config::beta1())
        );
        assert_eq!(
            feed(&Config::beta2(), Lr::L).unwrap(),
            (w("LLL"), Config::beta2())
        );
        assert_eq!(
            feed(&Config::beta1(), Lr::L).unwrap(),
            (w(""), cfg(3, 0, 1, 1))
        );
    }

    #[test]
    fn run_examples() {
        assert_eq!(
            run(&Config::beta2(), &w("RL²R")).unwrap(),
            (w("L²R⁴"), Config::beta1())
        );
        assert_eq!(
            run(&Config::beta1(), &w("L¹¹")).unwrap(),
            (w("LLL"), cfg(3, 0, 2, 1))
        );
        assert_eq!(
            run(&Config::beta3(), &w("")).unwrap(),
            (w(""), Config::beta3())
        );
    }

    #[test]
    fn trace_ends_where_run_ends() {
        let input = w("RLLRLRRRL");
        let trace = run_trace(&Config::beta2(), &input).unwrap();
        let (out, last) = run(&Config::beta2(), &input).unwrap();
        assert_eq!(trace.last().unwrap().config, last);
        let mut joined = LrRuns::new();
        for step in &trace {
            joined.extend(&step.output);
        }
        assert_eq!(joined, out);
    }
}
