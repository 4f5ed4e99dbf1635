//! Falling function and Pochhammer symbol with their piecewise case
//! analysis, the generalized binomial coefficient, and integer-order
//! products shared with the operators.

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{gamma_of, gmono_div, int};
use crate::identities::report::{params, VerificationReport};
use crate::{GammaMonomial, GammaPolynomial, Rational, Scalar};

/// Value of a falling function or Pochhammer symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialValue {
    /// Nonzero exact value.
    Finite(GammaMonomial),
    Zero,
    /// Uncancelled pole of the defining Gamma ratio.
    Pole,
}

impl SpecialValue {
    fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            SpecialValue::Zero
        } else {
            SpecialValue::Finite(GammaMonomial::constant(q))
        }
    }

    fn from_monomial(m: GammaMonomial) -> Self {
        if m.is_zero() {
            SpecialValue::Zero
        } else {
            SpecialValue::Finite(m)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SpecialValue::Finite(_))
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, SpecialValue::Pole)
    }

    /// The value as a polynomial; `None` for a pole.
    pub fn to_polynomial(&self) -> Option<GammaPolynomial> {
        match self {
            SpecialValue::Finite(m) => Some(m.clone().into()),
            SpecialValue::Zero => Some(GammaPolynomial::zero()),
            SpecialValue::Pole => None,
        }
    }

    pub fn finite(&self) -> Option<&GammaMonomial> {
        match self {
            SpecialValue::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn class_name(&self) -> &'static str {
        match self {
            SpecialValue::Finite(_) => "finite",
            SpecialValue::Zero => "zero",
            SpecialValue::Pole => "pole",
        }
    }
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialValue::Finite(m) => write!(f, "{}", GammaPolynomial::from(m.clone())),
            SpecialValue::Zero => f.write_str("0"),
            SpecialValue::Pole => f.write_str("pole"),
        }
    }
}

/// Rising product `x(x+1)…(x+k−1)`; 1 when `k = 0`.
pub fn poch_int<S: Scalar>(x: &S, k: usize) -> S {
    let mut acc = S::one();
    let mut cur = x.clone();
    for _ in 0..k {
        acc = acc * cur.clone();
        cur = cur + S::one();
    }
    acc
}

/// Falling product `x(x−1)…(x−k+1)`; 1 when `k = 0`.
pub fn falling_int<S: Scalar>(x: &S, k: usize) -> S {
    let mut acc = S::one();
    let mut cur = x.clone();
    for _ in 0..k {
        acc = acc * cur.clone();
        cur = cur - S::one();
    }
    acc
}

pub fn factorial_scalar<S: Scalar>(n: usize) -> S {
    poch_int(&S::one(), n)
}

/// `binom(alpha, n) = alpha^(n falling) / n!`.
pub fn gen_binomial<S: Scalar>(alpha: &S, n: usize) -> S {
    falling_int(alpha, n) / factorial_scalar::<S>(n)
}

fn positive_order(y: &Rational) -> Option<usize> {
    if y.is_in_n1() {
        y.as_integer().and_then(|n| usize::try_from(n).ok())
    } else {
        None
    }
}

/// Falling function `x^(y)`:
///
/// 1. `y ∈ {1,2,…}`: the product `x(x−1)…(x−y+1)`,
/// 2. `y = 0`: 1,
/// 3. `x, x−y ∉ {…,−2,−1}`: `Γ(x+1)/Γ(x+1−y)`,
/// 4. `x ∉ {…,−2,−1}`, `x−y ∈ {…,−2,−1}`: 0,
///
/// and [`SpecialValue::Pole`] otherwise.
pub fn falling(x: &Rational, y: &Rational) -> SpecialValue {
    if let Some(n) = positive_order(y) {
        return SpecialValue::from_rational(falling_int(x, n));
    }
    if y.is_zero() {
        return SpecialValue::Finite(GammaMonomial::one());
    }
    let lower = x - y;
    match (x.is_in_nm1_down(), lower.is_in_nm1_down()) {
        (false, false) => {
            let one = Rational::one();
            let num = gamma_of(&(x + &one)).expect("x+1 is not a pole");
            let den = gamma_of(&(lower + one)).expect("x-y+1 is not a pole");
            SpecialValue::from_monomial(gmono_div(&num, &den).expect("Gamma is never zero"))
        }
        (false, true) => SpecialValue::Zero,
        (true, _) => SpecialValue::Pole,
    }
}

/// Pochhammer symbol `(x)_y`:
///
/// 1. `y ∈ {1,2,…}`: the product `x(x+1)…(x+y−1)`,
/// 2. `y = 0`: 1,
/// 3. `x, x+y ∉ {…,−1,0}`: `Γ(x+y)/Γ(x)`,
/// 4. `x ∈ {…,−1,0}`, `x+y ∉ {…,−1,0}`: 0,
///
/// and [`SpecialValue::Pole`] otherwise.
pub fn pochhammer(x: &Rational, y: &Rational) -> SpecialValue {
    if let Some(n) = positive_order(y) {
        return SpecialValue::from_rational(poch_int(x, n));
    }
    if y.is_zero() {
        return SpecialValue::Finite(GammaMonomial::one());
    }
    let upper = x + y;
    match (x.is_in_n0_down(), upper.is_in_n0_down()) {
        (false, false) => {
            let num = gamma_of(&upper).expect("x+y is not a pole");
            let den = gamma_of(x).expect("x is not a pole");
            SpecialValue::from_monomial(gmono_div(&num, &den).expect("Gamma is never zero"))
        }
        (true, false) => SpecialValue::Zero,
        (_, true) => SpecialValue::Pole,
    }
}

/// Compares two special values: exact/float comparison when both are
/// finite or zero, `pole` when both are poles, mismatch when the
/// classifications disagree.
pub fn compare_special(
    name: &str,
    params: crate::identities::report::Params,
    lhs: &SpecialValue,
    rhs: &SpecialValue,
) -> VerificationReport {
    match (lhs.to_polynomial(), rhs.to_polynomial()) {
        (Some(l), Some(r)) => VerificationReport::compare(name, params, &l, &r),
        (None, None) => VerificationReport::pole(name, params, lhs.to_string(), rhs.to_string()),
        _ => VerificationReport::mismatch_text(name, params, lhs.to_string(), rhs.to_string()),
    }
}

/// `(t+α−1)^(α falling) = (t)_α`.
pub fn falling_poch_bridge_check(t: &Rational, alpha: &Rational) -> VerificationReport {
    let lhs = falling(&(t + alpha - int(1)), alpha);
    let rhs = pochhammer(t, alpha);
    compare_special(
        "falling-poch-bridge",
        params([("t", t.clone()), ("alpha", alpha.clone())]),
        &lhs,
        &rhs,
    )
}

/// `t^(α+β) = (t−β)^(α) · t^(β)` with all three powers falling.
pub fn index_law_check(t: &Rational, alpha: &Rational, beta: &Rational) -> VerificationReport {
    const NAME: &str = "index-law";
    let p = params([
        ("t", t.clone()),
        ("alpha", alpha.clone()),
        ("beta", beta.clone()),
    ]);
    let whole = falling(t, &(alpha + beta));
    let shifted = falling(&(t - beta), alpha);
    let part = falling(t, beta);
    let (Some(w), Some(s), Some(b)) = (whole.finite(), shifted.finite(), part.finite()) else {
        let reason = format!(
            "all falling factors finite (t^(alpha+beta): {}; (t-beta)^(alpha): {}; t^(beta): {})",
            whole.class_name(),
            shifted.class_name(),
            part.class_name()
        );
        return VerificationReport::excluded(NAME, p, reason);
    };
    VerificationReport::compare(NAME, p, &w.clone().into(), &(s * b).into())
}
