use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{ExtReal, Integer, Rational};
use crate::{Error, Result};

/// A 2×2 integer matrix `[[a, b], [c, d]]`, identified with the Möbius map
/// `x ↦ (a·x + b)/(c·x + d)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

impl Mat2 {
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
        d: impl Into<Integer>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// The swap `J = [[0, 1], [1, 0]]`.
    pub fn swap() -> Self {
        Mat2::new(0, 1, 1, 0)
    }

    /// `L = [[1, 0], [1, 1]]`.
    pub fn left() -> Self {
        Mat2::new(1, 0, 1, 1)
    }

    /// `R = [[1, 1], [0, 1]]`.
    pub fn right() -> Self {
        Mat2::new(1, 1, 0, 1)
    }

    /// The matrix `[[a_k, b_k], [1, 0]]` of the map `x ↦ a_k + b_k/x`.
    pub fn partial(a: impl Into<Integer>, b: impl Into<Integer>) -> Self {
        Mat2::new(a, b, 1, 0)
    }

    pub fn det(&self) -> Integer {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn entries(&self) -> [&Integer; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn pow(&self, mut exp: u64) -> Mat2 {
        let mut base = self.clone();
        let mut acc = Mat2::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Mat2>) -> Mat2 {
        factors
            .into_iter()
            .fold(Mat2::identity(), |acc, m| &acc * m)
    }

    /// Comma-separated row-major literal `a,b,c,d`.
    pub fn literal(&self) -> String {
        format!("{},{},{},{}", self.a, self.b, self.c, self.d)
    }

    /// Möbius action on the extended nonnegative reals.
    ///
    /// `x` is read as the ray through `(x, 1)`, or `(1, 0)` for `∞`, so
    /// `M(∞) = a/c`. The only rejected case is a zero image vector, which
    /// cannot happen for a nonsingular matrix.
    pub fn apply(&self, x: &ExtReal) -> Result<ExtReal> {
        if !self.is_nonnegative() {
            return Err(Error::InvalidMatrix {
                matrix: self.literal(),
                reason: "Möbius action is defined for nonnegative entries only".into(),
            });
        }
        let (num, den) = match x {
            ExtReal::Finite(r) => (
                &self.a * r.numer() + &self.b * r.denom(),
                &self.c * r.numer() + &self.d * r.denom(),
            ),
            ExtReal::Infinity => (self.a.clone(), self.c.clone()),
        };
        match (num.is_zero(), den.is_zero()) {
            (true, true) => Err(Error::Indeterminate),
            (false, true) => Ok(ExtReal::Infinity),
            _ => ExtReal::finite(Rational::new(num, den)),
        }
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::parse(
                "matrix",
                format!("expected a,b,c,d, got {s:?}"),
            ));
        }
        let mut entries = Vec::with_capacity(4);
        for part in parts {
            entries.push(
                part.parse::<Integer>()
                    .map_err(|_| Error::parse("matrix", format!("bad entry {part:?}")))?,
            );
        }
        let [a, b, c, d]: [Integer; 4] = entries.try_into().expect("four entries");
        Ok(Mat2 { a, b, c, d })
    }
}
