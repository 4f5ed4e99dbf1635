use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Shorthand constructor for small literals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the literal grammar `-?[0-9]+(/[0-9]+)?` with a positive denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational literal {text:?}"));
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num * sign, den))
}

/// Binary operation selector for [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(x: &Rational, y: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => checked_div(x, y)?,
    })
}

pub fn rat_cmp(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational> {
    if y.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(x / y)
    }
}

/// Splits `x` into `(n, b)` with `x = n + b`, `n` an integer and `0 <= b < 1`.
pub fn split_floor(x: &Rational) -> (BigInt, Rational) {
    let n = x.numer().div_floor(x.denom());
    let frac = x - Rational::from_integer(n.clone());
    (n, frac)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    match x.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // Fall back to logs for values outside the f64 range of numer/denom.
            let sign = if x.is_negative() { -1.0 } else { 1.0 };
            sign * (bigint_ln(x.numer()) - bigint_ln(x.denom())).exp()
        }
    }
}

fn bigint_ln(n: &BigInt) -> f64 {
    let n = n.abs();
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (&n >> shift).to_f64().unwrap_or(f64::MAX);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!(parse_rational("-5/2").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0/7").unwrap(), int(0));
        for bad in ["", "-", "+1", "1/", "/2", "1/-2", "1.5", " 1", "1/0", "a"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(rat(-10, 4).to_string(), "-5/2");
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(0, 9).to_string(), "0");
        assert_eq!(rat(3, -4).to_string(), "-3/4");
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Add).unwrap(), rat(5, 6));
        assert_eq!(rat_arith(&rat(1, 2), &rat(1, 3), RatOp::Sub).unwrap(), rat(1, 6));
        assert_eq!(rat_arith(&rat(-7, 3), &int(1), RatOp::Mul).unwrap(), rat(-7, 3));
        assert_eq!(
            rat_arith(&rat(7, 2), &int(0), RatOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(rat_cmp(&rat(1, 3), &rat(1, 2)), Ordering::Less);
    }

    #[test]
    fn floor_split() {
        assert_eq!(split_floor(&rat(7, 2)), (BigInt::from(3), rat(1, 2)));
        assert_eq!(split_floor(&rat(-1, 2)), (BigInt::from(-1), rat(1, 2)));
        assert_eq!(split_floor(&rat(-7, 3)), (BigInt::from(-3), rat(2, 3)));
        assert_eq!(split_floor(&int(-4)), (BigInt::from(-4), int(0)));
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::new(factorial(200), factorial(198));
        assert_eq!(rational_to_f64(&big), 39800.0);
        let r = Rational::new(factorial(400) * 3, factorial(400) * 4);
        assert!((rational_to_f64(&r) - 0.75).abs() < 1e-15);
    }
}
