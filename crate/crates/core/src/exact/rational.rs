use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parse `"p/q"` or `"n"` into a reduced rational. Whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim())
            .map_err(|_| Error::Input(format!("bad rational numerator in {s:?}")))?;
        let d = BigInt::from_str(d.trim())
            .map_err(|_| Error::Input(format!("bad rational denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Input(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|_| Error::Input(format!("bad rational {s:?}")))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Comma separated list of rationals, e.g. `1/2,-3,4/5`.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(parse_rational).collect()
}

/// Canonical `"p/q"` rendering, `"n"` for integers.
pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`, also for negative inputs.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Least common multiple of the denominators (1 for an empty slice).
pub fn denominator_lcm<'a, I>(xs: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigRational>,
{
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Decimal approximation with `digits` places after the point, rounded
/// half away from zero. Human-facing output only.
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let neg = rounded.is_negative();
    let (q, r) = rounded.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{q}")
    } else {
        format!("{sign}{q}.{:0>width$}", r.to_string(), width = digits)
    }
}
