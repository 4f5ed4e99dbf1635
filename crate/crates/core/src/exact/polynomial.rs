use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::monomial::{GammaMonomial, Signature};
use super::rational::parse_rational;
use crate::error::{Error, Result};
use crate::scalar::Module;
use crate::Rational;

/// Finite formal sum of Gamma monomials, keyed by factor signature.
///
/// Distinct Gamma bases are treated as independent symbols, so two values are
/// equal exactly when their term maps coincide and `p - q` is zero exactly
/// when the term map of the difference is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GammaPolynomial {
    terms: BTreeMap<Signature, Rational>,
}

impl GammaPolynomial {
    pub fn constant(q: Rational) -> Self {
        GammaMonomial::constant(q).into()
    }

    pub fn terms(&self) -> impl Iterator<Item = GammaMonomial> + '_ {
        self.terms
            .iter()
            .map(|(sig, c)| GammaMonomial::new(c.clone(), sig.clone()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rational value when the polynomial has at most a constant term.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Signature::empty()).cloned(),
            _ => None,
        }
    }

    /// The single monomial, if there is exactly one term (or none).
    pub fn as_monomial(&self) -> Option<GammaMonomial> {
        match self.terms.len() {
            0 => Some(GammaMonomial::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    fn add_term(&mut self, coeff: Rational, sig: &Signature) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(sig) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(sig);
                }
            }
            None => {
                self.terms.insert(sig.clone(), coeff);
            }
        }
    }

    pub fn add_monomial(&mut self, m: &GammaMonomial) {
        self.add_term(m.coeff().clone(), m.signature());
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * q)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &GammaMonomial) -> Self {
        let mut out = Self::zero();
        for (sig, c) in &self.terms {
            out.add_term(c * m.coeff(), &sig.combine(m.signature(), 1));
        }
        out
    }

    /// Numeric value; terms are summed in canonical signature order.
    pub fn to_float(&self) -> f64 {
        self.terms().map(|m| m.to_f64()).sum()
    }
}

/// Free-function form of [`GammaPolynomial::to_float`].
pub fn to_float(p: &GammaPolynomial) -> f64 {
    p.to_float()
}

/// Operation selector for [`gpoly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn gpoly_arith(p: &GammaPolynomial, q: &GammaPolynomial, op: PolyOp) -> GammaPolynomial {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

impl From<GammaMonomial> for GammaPolynomial {
    fn from(m: GammaMonomial) -> Self {
        let mut p = Self::zero();
        p.add_monomial(&m);
        p
    }
}

impl From<Rational> for GammaPolynomial {
    fn from(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl Add for &GammaPolynomial {
    type Output = GammaPolynomial;

    fn add(self, rhs: &GammaPolynomial) -> GammaPolynomial {
        let mut out = self.clone();
        for (sig, c) in &rhs.terms {
            out.add_term(c.clone(), sig);
        }
        out
    }
}

impl Sub for &GammaPolynomial {
    type Output = GammaPolynomial;

    fn sub(self, rhs: &GammaPolynomial) -> GammaPolynomial {
        let mut out = self.clone();
        for (sig, c) in &rhs.terms {
            out.add_term(-c, sig);
        }
        out
    }
}

impl Mul for &GammaPolynomial {
    type Output = GammaPolynomial;

    fn mul(self, rhs: &GammaPolynomial) -> GammaPolynomial {
        let mut out = GammaPolynomial::zero();
        for (s1, c1) in &self.terms {
            for (s2, c2) in &rhs.terms {
                out.add_term(c1 * c2, &s1.combine(s2, 1));
            }
        }
        out
    }
}

impl Neg for &GammaPolynomial {
    type Output = GammaPolynomial;

    fn neg(self) -> GammaPolynomial {
        GammaPolynomial {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for GammaPolynomial {
            type Output = GammaPolynomial;
            fn $method(self, rhs: GammaPolynomial) -> GammaPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GammaPolynomial {
    type Output = GammaPolynomial;

    fn neg(self) -> GammaPolynomial {
        -&self
    }
}

impl Zero for GammaPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GammaPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Module<Rational> for GammaPolynomial {
    fn scale(&self, s: &Rational) -> Self {
        GammaPolynomial::scale(self, s)
    }
}

impl fmt::Display for GammaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for GammaPolynomial {
    type Err = Error;

    /// Parses the canonical rendering produced by `Display`.
    fn from_str(text: &str) -> Result<Self> {
        let mut out = GammaPolynomial::zero();
        for term in text.split(" + ") {
            let mut parts = term.split('*');
            let coeff = parse_rational(parts.next().unwrap_or_default())?;
            let mut sig = Signature::empty();
            for factor in parts {
                let (base, exp) = parse_factor(factor)
                    .ok_or_else(|| Error::Parse(format!("invalid Gamma factor {factor:?}")))?;
                let base = parse_rational(base)?;
                if base <= Rational::zero() || base >= Rational::one() {
                    return Err(Error::Parse(format!("Gamma base {base} outside (0,1)")));
                }
                let exp: i64 = exp
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid exponent in {factor:?}")))?;
                sig = sig.combine(&Signature::single(base, exp), 1);
            }
            out.add_term(coeff, &sig);
        }
        Ok(out)
    }
}

fn parse_factor(s: &str) -> Option<(&str, &str)> {
    let inner = s.strip_prefix("G(")?;
    let (base, rest) = inner.split_once(")^")?;
    Some((base, rest))
}
