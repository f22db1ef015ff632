use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
///
/// `BigRational` keeps every value in lowest terms with a positive
/// denominator, so two scalars are equal exactly when their
/// numerators and denominators agree.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as a scalar. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses a rational literal of the form `p` or `p/q` with `q > 0`.
///
/// Signs are allowed only on the numerator. Column offsets in the
/// returned error are relative to the start of `text` (1-based).
pub fn parse_rational(text: &str) -> Result<Scalar> {
    let syntax = |column: usize, message: &str| Error::Syntax {
        line: 0,
        column,
        message: format!("{message} in rational literal {text:?}"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numerator: BigInt = parse_integer(num, true).ok_or_else(|| syntax(1, "bad numerator"))?;
    let denominator = match den {
        None => BigInt::one(),
        Some(d) => {
            let col = num.len() + 2;
            let d = parse_integer(d, false).ok_or_else(|| syntax(col, "bad denominator"))?;
            if d.is_zero() {
                return Err(syntax(col, "zero denominator"));
            }
            d
        }
    };
    Ok(Scalar::new(numerator, denominator))
}

fn parse_integer(text: &str, signed: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix(['-', '+']) {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Canonical text form, the inverse of [`parse_rational`].
pub fn format_rational(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
