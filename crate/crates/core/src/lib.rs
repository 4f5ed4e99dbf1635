//! Exact discrete fractional calculus.
//!
//! Falling and Pochhammer functions with their full piecewise case analysis,
//! the Miller–Ross sum-difference operator, the Atici–Eloe difference and a
//! nabla Pochhammer-kernel operator, all evaluated exactly on shifted integer
//! grids. Identity verifiers compare two independent evaluation routes with
//! exact equality of canonical Gamma polynomials.
//!
//! ```
//! use fracdiff::exact::{gamma_of, rat};
//! use fracdiff::fracops::{frac_sum_diff, nabla_poch_diff, FracOrder};
//! use fracdiff::gridfn::sample_closure;
//! use fracdiff::identities::saalschutz_verify;
//! use fracdiff::{ExactGridFunction, GammaPolynomial};
//!
//! // Δ^{-1/2} of the constant 1 on ℕ_0: partial sums of (1/2)_j / j!.
//! let ones: ExactGridFunction =
//!     sample_closure(rat(0, 1), 4, |_| GammaPolynomial::constant(rat(1, 1))).unwrap();
//! let half = FracOrder::new(rat(1, 2)).unwrap();
//! let out = frac_sum_diff(&ones, &half);
//! assert_eq!(out.origin(), &rat(1, 2));
//! assert_eq!(out.values()[3].to_string(), "35/16");
//!
//! // The nabla operator does not vanish just below its threshold.
//! let v = nabla_poch_diff(&rat(0, 1), &rat(1, 2), &rat(3, 2), 1).unwrap();
//! assert_eq!(v, GammaPolynomial::from(gamma_of(&rat(3, 2)).unwrap()));
//!
//! // Saalschütz at a hand-checkable point.
//! let r = saalschutz_verify(&rat(1, 2), &rat(1, 2), &rat(2, 1), 1, false);
//! assert!(r.is_exact());
//! assert_eq!(r.lhs.as_deref(), Some("9/8"));
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod fracops;
pub mod gridfn;
pub mod identities;
pub mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use exact::{GammaMonomial, GammaPolynomial};
pub use scalar::{Module, Scalar};

/// Exact arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

/// Exact grid function with Gamma-polynomial values.
pub type ExactGridFunction = gridfn::GridFunction<Rational, GammaPolynomial>;

/// Double-precision grid function.
pub type FloatGridFunction = gridfn::GridFunction<f64>;

/// Exact fractional order.
pub type ExactOrder = fracops::FracOrder<Rational>;

/// Double-precision fractional order.
pub type FloatOrder = fracops::FracOrder<f64>;
