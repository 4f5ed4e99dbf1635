use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{factorial, rational_to_f64, split_floor};
use super::ln_gamma_unit;
use crate::error::{Error, Result};
use crate::Rational;

/// Product of Gamma factors `Γ(b1)^e1 · Γ(b2)^e2 · …` with every base in
/// the open interval (0, 1) and every exponent nonzero.
///
/// Ordered by bases ascending, then exponents, which is the term order of the
/// canonical polynomial rendering.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(BTreeMap<Rational, i64>);

impl Signature {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `Γ(base)^exp`; `base` must lie strictly between 0 and 1.
    pub fn single(base: Rational, exp: i64) -> Self {
        let mut sig = Self::empty();
        sig.add_factor(base, exp);
        sig
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.0.iter().map(|(b, e)| (b, *e))
    }

    pub fn exponent(&self, base: &Rational) -> i64 {
        self.0.get(base).copied().unwrap_or(0)
    }

    fn add_factor(&mut self, base: Rational, exp: i64) {
        debug_assert!(base.is_positive() && base < Rational::one());
        if exp == 0 {
            return;
        }
        let entry = self.0.entry(base).or_insert(0);
        *entry += exp;
        if *entry == 0 {
            self.0.retain(|_, e| *e != 0);
        }
    }

    pub fn combine(&self, other: &Signature, sign: i64) -> Signature {
        let mut out = self.clone();
        for (b, e) in other.factors() {
            out.add_factor(b.clone(), sign * e);
        }
        out
    }

    pub fn inverse(&self) -> Signature {
        Signature(self.0.iter().map(|(b, e)| (b.clone(), -e)).collect())
    }

    /// `ln ∏ Γ(b)^e`; every `Γ(b)` with `b` in (0,1) is positive.
    pub fn ln_value(&self) -> f64 {
        self.factors()
            .map(|(b, e)| e as f64 * ln_gamma_unit(rational_to_f64(b)))
            .sum()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "G({b})^{e}")?;
        }
        Ok(())
    }
}

/// Exact value `coeff · ∏ Γ(b)^e` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaMonomial {
    coeff: Rational,
    signature: Signature,
}

impl GammaMonomial {
    pub fn new(coeff: Rational, signature: Signature) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { coeff, signature }
    }

    pub fn constant(coeff: Rational) -> Self {
        Self::new(coeff, Signature::empty())
    }

    pub fn zero() -> Self {
        Self {
            coeff: Rational::zero(),
            signature: Signature::empty(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Rational value when the factor map is empty.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.signature.is_empty().then_some(&self.coeff)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.coeff * q, self.signature.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            coeff: self.coeff.recip(),
            signature: self.signature.inverse(),
        })
    }

    pub fn checked_div(&self, rhs: &GammaMonomial) -> Result<Self> {
        gmono_div(self, rhs)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.signature.is_empty() {
            return rational_to_f64(&self.coeff);
        }
        let c = rational_to_f64(&self.coeff);
        if c.is_finite() && c != 0.0 {
            c * self.signature.ln_value().exp()
        } else {
            let sign = if self.coeff.is_negative() { -1.0 } else { 1.0 };
            sign * (log_abs(&self.coeff) + self.signature.ln_value()).exp()
        }
    }
}

fn log_abs(q: &Rational) -> f64 {
    let num = rational_to_f64(&Rational::from_integer(q.numer().abs()));
    let den = rational_to_f64(&Rational::from_integer(q.denom().clone()));
    num.ln() - den.ln()
}

impl Mul for &GammaMonomial {
    type Output = GammaMonomial;

    fn mul(self, rhs: &GammaMonomial) -> GammaMonomial {
        GammaMonomial::new(
            &self.coeff * &rhs.coeff,
            self.signature.combine(&rhs.signature, 1),
        )
    }
}

impl Mul for GammaMonomial {
    type Output = GammaMonomial;

    fn mul(self, rhs: GammaMonomial) -> GammaMonomial {
        &self * &rhs
    }
}

impl fmt::Display for GammaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signature.is_empty() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*{}", self.coeff, self.signature)
        }
    }
}

/// `Γ(x)` reduced to `q·Γ(b)` with `b = x − ⌊x⌋`, or to `(x−1)!` when `x` is
/// a positive integer.
pub fn gamma_of(x: &Rational) -> Result<GammaMonomial> {
    let (n, base) = split_floor(x);
    if base.is_zero() {
        if n <= BigInt::zero() {
            return Err(Error::GammaPole(x.clone()));
        }
        let n = n
            .to_u64()
            .ok_or_else(|| Error::domain(format!("Gamma argument {x} too large")))?;
        return Ok(GammaMonomial::constant(Rational::from_integer(factorial(n - 1))));
    }
    // Γ(b + n) = b(b+1)…(b+n−1) Γ(b) for n ≥ 0; Γ(x) = Γ(b) / (x(x+1)…(b−1)) for n < 0.
    let steps = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::domain(format!("Gamma argument {x} too large")))?;
    let coeff = if n.is_negative() {
        shifted_product(x, steps).recip()
    } else {
        shifted_product(&base, steps)
    };
    Ok(GammaMonomial::new(coeff, Signature::single(base, 1)))
}

fn shifted_product(start: &Rational, steps: u64) -> Rational {
    let mut acc = Rational::one();
    let mut cur = start.clone();
    for _ in 0..steps {
        acc *= &cur;
        cur += Rational::one();
    }
    acc
}

/// Monomial division: coefficient quotient and exponent-wise difference.
pub fn gmono_div(p: &GammaMonomial, q: &GammaMonomial) -> Result<GammaMonomial> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(GammaMonomial::new(
        &p.coeff / &q.coeff,
        p.signature.combine(&q.signature, -1),
    ))
}
