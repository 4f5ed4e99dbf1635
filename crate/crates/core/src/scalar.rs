//! Scalar abstraction shared by the exact and floating-point code paths.
//!
//! Everything that only needs a field with integer shifts (integer-order
//! Pochhammer products, binomial weights, fractional kernel weights,
//! terminating hypergeometric sums, forward differences) is written against
//! [`Scalar`]. The Gamma-monomial algebra is exact-only and lives in
//! [`crate::exact`].

use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};

use crate::Rational;

/// A field element that can be shifted by integers and classified as
/// integer or not: `f32`, `f64` and the exact [`Rational`].
pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// `Some(n)` if the value is exactly the integer `n` and fits an `i64`.
    fn as_integer(&self) -> Option<i64>;

    /// Lossy conversion used by the floating cross-check path.
    fn to_f64_lossy(&self) -> f64;

    /// `⌈x⌉`, if it fits an `i64`.
    fn ceil_int(&self) -> Option<i64>;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }

    fn is_integer_value(&self) -> bool {
        self.as_integer().is_some()
    }

    /// Member of {1, 2, 3, ...}.
    fn is_in_n1(&self) -> bool {
        matches!(self.as_integer(), Some(n) if n >= 1)
    }

    /// Member of {..., -2, -1, 0}.
    fn is_in_n0_down(&self) -> bool {
        matches!(self.as_integer(), Some(n) if n <= 0)
    }

    /// Member of {..., -3, -2, -1}.
    fn is_in_nm1_down(&self) -> bool {
        matches!(self.as_integer(), Some(n) if n <= -1)
    }
}

impl Scalar for f64 {
    fn as_integer(&self) -> Option<i64> {
        if self.is_finite() && self.fract() == 0.0 && self.abs() < 9.0e18 {
            Some(*self as i64)
        } else {
            None
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn ceil_int(&self) -> Option<i64> {
        self.ceil().as_integer()
    }
}

impl Scalar for f32 {
    fn as_integer(&self) -> Option<i64> {
        if self.is_finite() && self.fract() == 0.0 && self.abs() < 9.0e18 {
            Some(*self as i64)
        } else {
            None
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }

    fn ceil_int(&self) -> Option<i64> {
        self.ceil().as_integer()
    }
}

impl Scalar for Rational {
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        crate::exact::rational_to_f64(self)
    }

    fn ceil_int(&self) -> Option<i64> {
        self.ceil().numer().to_i64()
    }

    fn is_integer_value(&self) -> bool {
        self.is_integer()
    }

    // The three predicates below stay exact even for integers beyond i64.
    fn is_in_n1(&self) -> bool {
        self.is_integer() && self.numer() >= &BigInt::one()
    }

    fn is_in_n0_down(&self) -> bool {
        self.is_integer() && self.numer() <= &BigInt::zero()
    }

    fn is_in_nm1_down(&self) -> bool {
        self.is_integer() && self.numer() <= &-BigInt::one()
    }
}

/// Values that can be added, subtracted and scaled by a scalar `S`.
///
/// Grid functions are generic over their value type through this trait:
/// plain scalars for the floating path, [`crate::GammaPolynomial`] over
/// [`Rational`] for the exact path.
pub trait Module<S>:
    Clone + Debug + Zero + Add<Output = Self> + Sub<Output = Self> + Send + Sync
{
    fn scale(&self, s: &S) -> Self;
}

impl<S: Scalar> Module<S> for S {
    fn scale(&self, s: &S) -> Self {
        self.clone() * s.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn integer_classes_rational() {
        assert!(rat(1, 1).is_in_n1());
        assert!(!rat(0, 1).is_in_n1());
        assert!(rat(0, 1).is_in_n0_down());
        assert!(!rat(0, 1).is_in_nm1_down());
        assert!(rat(-1, 1).is_in_nm1_down());
        assert!(!rat(-1, 2).is_in_n0_down());
        assert!(!rat(7, 2).is_integer_value());
        assert_eq!(rat(-6, 3).as_integer(), Some(-2));
    }

    #[test]
    fn integer_classes_float() {
        assert!(3.0_f64.is_in_n1());
        assert!((-0.0_f64).is_in_n0_down());
        assert!(!(-0.5_f64).is_in_nm1_down());
        assert_eq!(2.5_f32.as_integer(), None);
        assert_eq!(f64::NAN.as_integer(), None);
    }
}
