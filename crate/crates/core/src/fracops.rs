//! Fractional operators on grid functions.
//!
//! On a grid starting at `a`, the sum-difference of order ν evaluated at
//! `t = a + ν + N` only ever needs the kernel `(t−s−1)^(ν−1) / Γ(ν)` at
//! `t − s − 1 = ν + j − 1`, which collapses to the rational weight
//! `w_j = (ν)_j / j!`. All operators here run on those weights.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::gamma_of;
use crate::gridfn::{delta_n, GridFunction};
use crate::special::{falling, pochhammer, SpecialValue};
use crate::{GammaPolynomial, Module, Rational, Scalar};

/// Order of a sum-difference operator: any value except the integers ≤ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FracOrder<S = Rational>(S);

impl<S: Scalar> FracOrder<S> {
    pub fn new(nu: S) -> Result<Self> {
        if nu.is_in_n0_down() {
            return Err(Error::domain("nu must not be a nonpositive integer"));
        }
        Ok(Self(nu))
    }

    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }
}

/// Kernel weights `w_0 = 1`, `w_j = w_{j−1} (ν + j − 1) / j` for `j < count`.
pub fn kernel_weights<S: Scalar>(nu: &FracOrder<S>, count: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(count);
    let mut w = S::one();
    for j in 0..count {
        if j > 0 {
            let jj = S::from_usize(j).expect("index fits");
            w = w * (nu.0.clone() + jj.clone() - S::one()) / jj;
        }
        out.push(w.clone());
    }
    out
}

/// Miller–Ross sum-difference of order ν.
///
/// The output lives on the grid starting at `a + ν` with the input's length;
/// index `N` holds `Σ_{i=0}^{N} w_{N−i} f(a+i)`.
pub fn frac_sum_diff<S: Scalar, V: Module<S>>(
    f: &GridFunction<S, V>,
    nu: &FracOrder<S>,
) -> GridFunction<S, V> {
    let w = kernel_weights(nu, f.len());
    let vals = f.values();
    let out = (0..f.len())
        .map(|n| {
            (0..=n).fold(V::zero(), |acc, i| acc + vals[i].scale(&w[n - i]))
        })
        .collect();
    GridFunction::new(f.origin().clone() + nu.0.clone(), out).expect("length preserved")
}

/// The sum-difference evaluated from the Gamma form of the kernel,
/// `(1/Γ(ν)) Σ_s (t−s−1)^(ν−1) f(s)`, without the rational weight shortcut.
pub fn frac_sum_diff_gamma_kernel(
    f: &GridFunction<Rational, GammaPolynomial>,
    nu: &FracOrder<Rational>,
) -> Result<GridFunction<Rational, GammaPolynomial>> {
    let nu = nu.value();
    let inv_gamma = gamma_of(nu)?.inverse()?;
    let nu_m1 = nu - Rational::one();
    let mut out = Vec::with_capacity(f.len());
    for n in 0..f.len() {
        let mut acc = GammaPolynomial::zero();
        for (i, v) in f.values()[..=n].iter().enumerate() {
            // t − s − 1 with t = a+ν+n, s = a+i
            let x = nu + Rational::from_integer((n as i64 - i as i64 - 1).into());
            let kernel = match falling(&x, &nu_m1) {
                SpecialValue::Finite(m) => m,
                SpecialValue::Zero => continue,
                SpecialValue::Pole => {
                    return Err(Error::SpecialValuePole(format!("({x})^({nu_m1})")))
                }
            };
            acc = &acc + &v.mul_monomial(&(&kernel * &inv_gamma));
        }
        out.push(acc);
    }
    GridFunction::new(f.origin() + nu, out)
}

/// Miller–Ross fractional difference of order `0 < μ < 1`: the
/// sum-difference of order `−μ`, on the grid starting at `a − μ`.
pub fn mr_frac_diff<S: Scalar, V: Module<S>>(
    f: &GridFunction<S, V>,
    mu: &S,
) -> Result<GridFunction<S, V>> {
    if !(*mu > S::zero() && *mu < S::one()) {
        return Err(Error::domain("mu must lie strictly between 0 and 1"));
    }
    Ok(frac_sum_diff(f, &FracOrder::new(-mu.clone())?))
}

/// Atici–Eloe fractional difference `Δ^n [Δ^{−(n−μ)} f]` with `n = ⌈μ⌉`, on
/// the grid starting at `a + n − μ`; the window shrinks by `n`.
pub fn ae_frac_diff<S: Scalar, V: Module<S>>(
    f: &GridFunction<S, V>,
    mu: &S,
) -> Result<GridFunction<S, V>> {
    if *mu <= S::zero() || mu.is_integer_value() {
        return Err(Error::domain("mu must be positive and non-integer"));
    }
    let n = mu
        .ceil_int()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::domain("order too large"))?;
    if f.len() < n + 1 {
        return Err(Error::WindowTooShort {
            needed: n + 1,
            available: f.len(),
        });
    }
    let order = FracOrder::new(S::from_usize(n).expect("order fits") - mu.clone())?;
    delta_n(&frac_sum_diff(f, &order), n)
}

/// Nabla operator with Pochhammer kernel applied to `(s−a)_p`, evaluated at
/// `t = a + t_index`:
/// `(1/Γ(−α)) Σ_{j=1}^{t_index} (t_index−j+1)_{−α−1} (j)_p`.
///
/// The value does not depend on `a`; it is kept in the signature because the
/// operator is anchored at `a + 1`.
pub fn nabla_poch_diff(
    _a: &Rational,
    p: &Rational,
    alpha: &Rational,
    t_index: usize,
) -> Result<GammaPolynomial> {
    if alpha.is_integer() {
        return Err(Error::domain("alpha must be non-integer"));
    }
    if t_index < 1 {
        return Err(Error::domain("t-index must be at least 1"));
    }
    let inv_gamma = gamma_of(&-alpha)?.inverse()?;
    let kernel_order = -alpha - Rational::one();
    let mut acc = GammaPolynomial::zero();
    for j in 1..=t_index {
        let x = Rational::from_integer((t_index - j + 1).into());
        let kernel = pochhammer(&x, &kernel_order);
        let jr = Rational::from_integer(j.into());
        let power = pochhammer(&jr, p);
        let (kernel, power) = match (kernel, power) {
            (SpecialValue::Pole, _) => {
                return Err(Error::SpecialValuePole(format!("({x})_({kernel_order})")))
            }
            (_, SpecialValue::Pole) => return Err(Error::SpecialValuePole(format!("({jr})_({p})"))),
            (SpecialValue::Zero, _) | (_, SpecialValue::Zero) => continue,
            (SpecialValue::Finite(k), SpecialValue::Finite(w)) => (k, w),
        };
        acc.add_monomial(&(&kernel * &power));
    }
    Ok(acc.mul_monomial(&inv_gamma))
}
