//! Exact rational input (`"1/10"`, `"0.1"`, `"1e-9"`) and fixed-point output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

fn ten_pow(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = exp.checked_sub(i32::try_from(frac.len()).ok()?)?;
    let mut r = BigRational::from_integer(all);
    if scale >= 0 {
        r *= BigRational::from_integer(ten_pow(scale as u32));
    } else {
        r /= BigRational::from_integer(ten_pow(scale.unsigned_abs()));
    }
    Some(if neg { -r } else { r })
}

/// Parses `"p/q"`, a decimal such as `"0.25"`, or scientific notation.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::param(format!("{s:?} is not a rational number"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::param(format!("{s:?} has a zero denominator")));
        }
        return Ok(BigRational::new(p, q));
    }
    parse_decimal(s).ok_or_else(bad)
}

/// Parses a probability in `[0, 1]`.
pub fn parse_probability(s: &str) -> Result<BigRational> {
    let q = parse_rational(s)?;
    if q.is_negative() || q > BigRational::one() {
        return Err(Error::param(format!("{s:?} is outside [0, 1]")));
    }
    Ok(q)
}

/// Comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Fixed-point rendering with `digits` places, rounding half away from zero.
pub fn format_decimal(x: &BigRational, digits: u32) -> String {
    let scaled = (x * BigRational::from_integer(ten_pow(digits)))
        .round()
        .to_integer();
    let neg = scaled.is_negative();
    let mut body = scaled.abs().to_string();
    if digits > 0 {
        let d = digits as usize;
        if body.len() <= d {
            body = format!("{}{body}", "0".repeat(d + 1 - body.len()));
        }
        body.insert(body.len() - d, '.');
    }
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("1/10").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-2.50").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse_rational("2.5E2").unwrap(), rat(250, 1));
        for bad in ["", ".", "1/0", "abc", "1.2.3", "0x10", "1e", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn probabilities() {
        assert!(parse_probability("1").is_ok());
        assert!(parse_probability("0").is_ok());
        assert!(parse_probability("1.01").is_err());
        assert!(parse_probability("-1/3").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_decimal(&rat(81, 100), 4), "0.8100");
        assert_eq!(format_decimal(&rat(2, 3), 3), "0.667");
        assert_eq!(format_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&rat(7, 1), 0), "7");
        assert_eq!(format_decimal(&rat(1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&rat(123, 10), 1), "12.3");
    }
}
