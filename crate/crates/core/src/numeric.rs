//! Decimal rendering of exact rationals and high-precision logarithms of
//! exact integers.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::exact::{Integer, Rational};

/// Significant digits of every derived real printed by the library.
pub const SIG_DIGITS: usize = 30;

/// Working precision for logarithms: enough bits for [`SIG_DIGITS`] plus 64
/// guard bits.
const WORK_BITS: usize = 100 + 64;

pub(crate) type Float = FBig<HalfEven, 2>;

fn to_ibig(x: &BigInt) -> IBig {
    let (sign, bytes) = x.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

fn to_bigint(x: &IBig) -> BigInt {
    let negative = *x < IBig::ZERO;
    let mag = BigInt::from_bytes_le(Sign::Plus, &x.unsigned_abs().to_le_bytes());
    if negative {
        -mag
    } else {
        mag
    }
}

fn float(x: &BigInt) -> Float {
    Float::from(to_ibig(x)).with_precision(WORK_BITS).value()
}

/// Natural logarithm of a positive integer.
pub(crate) fn ln_integer(x: &Integer) -> Float {
    assert!(x.is_positive(), "logarithm of a non-positive integer");
    float(x).ln()
}

/// Natural logarithm of a positive rational.
pub(crate) fn ln_rational(x: &Rational) -> Float {
    ln_integer(x.numer()) - ln_integer(x.denom())
}

pub(crate) fn exp(x: &Float) -> Float {
    x.exp()
}

pub(crate) fn from_usize(n: usize) -> Float {
    Float::from(n).with_precision(WORK_BITS).value()
}

/// The exact value of a binary float.
pub(crate) fn float_to_rational(x: &Float) -> Rational {
    let repr = x.repr();
    let significand = to_bigint(repr.significand());
    let exponent = repr.exponent();
    if exponent >= 0 {
        Rational::from_integer(significand << exponent as usize)
    } else {
        Rational::new(significand, BigInt::one() << exponent.unsigned_abs())
    }
}

/// Rounds a float to [`SIG_DIGITS`] significant decimal digits.
pub(crate) fn approx(x: &Float) -> Rational {
    round_sig(&float_to_rational(x), SIG_DIGITS)
}

fn pow10(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u8), k)
}

fn digit_count(x: &BigInt) -> i64 {
    if x.is_zero() {
        1
    } else {
        x.magnitude().to_str_radix(10).len() as i64
    }
}

/// `floor(log10(x))` for positive `x`.
fn decimal_exponent(x: &Rational) -> i64 {
    let mut e = digit_count(x.numer()) - digit_count(x.denom());
    let ten = Rational::from_integer(10.into());
    let power = |k: i64| {
        if k >= 0 {
            Rational::from_integer(pow10(k as usize))
        } else {
            Rational::new(BigInt::one(), pow10((-k) as usize))
        }
    };
    let mut p = power(e);
    while &p > x {
        e -= 1;
        p /= &ten;
    }
    while &(&p * &ten) <= x {
        e += 1;
        p *= &ten;
    }
    e
}

/// Rounds a nonnegative rational to the nearest integer, ties to even.
fn round_half_even(x: &Rational) -> BigInt {
    let (q, r) = x.numer().div_rem(x.denom());
    let twice: BigInt = &r * 2;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

/// Splits `|x|` into a `digits`-digit integer mantissa and decimal exponent,
/// rounded half to even.
fn decompose(x: &Rational, digits: usize) -> (BigInt, i64) {
    let mut e = decimal_exponent(x);
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        x * Rational::from_integer(pow10(shift as usize))
    } else {
        x / Rational::from_integer(pow10((-shift) as usize))
    };
    let mut mantissa = round_half_even(&scaled);
    if mantissa == pow10(digits) {
        mantissa /= 10;
        e += 1;
    }
    (mantissa, e)
}

/// Rounds to `digits` significant decimal digits, ties to even.
pub fn round_sig(x: &Rational, digits: usize) -> Rational {
    if x.is_zero() {
        return x.clone();
    }
    let (mantissa, e) = decompose(&x.abs(), digits);
    let shift = e - (digits as i64 - 1);
    let value = if shift >= 0 {
        Rational::from_integer(mantissa * pow10(shift as usize))
    } else {
        Rational::new(mantissa, pow10((-shift) as usize))
    };
    if x.is_negative() {
        -value
    } else {
        value
    }
}

/// Renders `x` with `digits` significant digits, ties to even. Plain
/// positional notation for decimal exponents in `[-5, digits)`, scientific
/// (`d.ddd…e-N`) otherwise.
pub fn format_sig(x: &Rational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (mantissa, e) = decompose(&x.abs(), digits);
    let m = mantissa.to_str_radix(10);
    let sign = if x.is_negative() { "-" } else { "" };
    let body = if (-5..digits as i64).contains(&e) {
        if e >= 0 {
            let int_len = e as usize + 1;
            if int_len >= m.len() {
                m.clone()
            } else {
                format!("{}.{}", &m[..int_len], &m[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), m)
        }
    } else if m.len() > 1 {
        format!("{}.{}e{}", &m[..1], &m[1..], e)
    } else {
        format!("{m}e{e}")
    };
    format!("{sign}{body}")
}

/// [`format_sig`] with [`SIG_DIGITS`].
pub fn format_real(x: &Rational) -> String {
    format_sig(x, SIG_DIGITS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rounding_ties_to_even() {
        assert_eq!(format_sig(&ratio(125, 1000), 2), "0.12");
        assert_eq!(format_sig(&ratio(135, 1000), 2), "0.14");
        assert_eq!(format_sig(&ratio(-135, 1000), 2), "-0.14");
        assert_eq!(format_sig(&ratio(999, 1), 2), "1.0e3");
        assert_eq!(format_sig(&ratio(7, 6), 6), "1.16667");
        assert_eq!(format_sig(&ratio(1, 300), 3), "0.00333");
        assert_eq!(format_sig(&ratio(1, 3_000_000), 3), "3.33e-7");
        assert_eq!(format_sig(&ratio(42, 1), 5), "42.000");
        assert_eq!(format_sig(&ratio(0, 1), 5), "0");
    }

    #[test]
    fn round_sig_is_exact_decimal() {
        assert_eq!(round_sig(&ratio(2, 3), 3), ratio(667, 1000));
        assert_eq!(round_sig(&ratio(10, 1), 1), ratio(10, 1));
    }

    #[test]
    fn logarithms() {
        let ln_e100 = ln_integer(&pow10(100));
        let expected = "230.258509299404568401799145468";
        assert_eq!(format_real(&float_to_rational(&ln_e100)), expected);
        let ratio_root = exp(&(ln_integer(&BigInt::from(99)) / from_usize(6)));
        assert_eq!(
            format_real(&approx(&ratio_root)),
            "2.15082891211336049240338456278"
        );
        assert_eq!(
            format_real(&float_to_rational(&ln_rational(&ratio(1, 1)))),
            "0"
        );
    }
}
