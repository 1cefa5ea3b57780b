//! Exact arithmetic primitives: big integers and rationals, 2×2 integer
//! matrices with their Möbius action on `[0, ∞]`, and finite words.

mod ext_real;
mod mat2;
mod word;

pub use ext_real::ExtReal;
pub use mat2::Mat2;
pub use word::Word;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Rational number, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from anything convertible to [`Integer`].
pub fn ratio(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds an integral rational.
pub fn rational(value: impl Into<Integer>) -> Rational {
    Rational::from_integer(value.into())
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(field: &'static str, text: &str) -> crate::Result<Rational> {
    let text = text.trim();
    let bad = || crate::Error::parse(field, format!("expected a rational like 4/3, got {text:?}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let num: Integer = num.trim().parse().map_err(|_| bad())?;
            let den: Integer = den.trim().parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&den) {
                return Err(crate::Error::parse(field, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}
