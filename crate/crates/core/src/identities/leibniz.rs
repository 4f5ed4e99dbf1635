//! Fractional Leibniz rule and the Gamma/Pochhammer identity it yields for
//! falling powers.

use num_traits::{One, Zero};

use super::report::{params, VerificationReport};
use crate::error::{Error, Result};
use crate::exact::{factorial, gamma_of, gmono_div};
use crate::fracops::{frac_sum_diff, FracOrder};
use crate::gridfn::{delta_n, GridFunction};
use crate::special::{falling, falling_int, gen_binomial, poch_int, SpecialValue};
use crate::{GammaPolynomial, Rational, Scalar};

type Exact = GridFunction<Rational, GammaPolynomial>;

fn q(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// `Δ^{−α}[fg](t) = Σ_{n=0}^{t−α−a} C(−α,n) Δ^{−(α+n)}f(t) · Δ^n g(t−α−n)` at
/// `t = a + α + t_index`.
///
/// `Δ^{−(α+n)}f(t)` sits at index `t_index − n` of its output grid and
/// `t−α−n` is index `t_index − n` of the input grid.
pub fn leibniz_verify(
    f: &Exact,
    g: &Exact,
    alpha: &FracOrder,
    t_index: usize,
) -> Result<VerificationReport> {
    if f.origin() != g.origin() {
        return Err(Error::domain("f and g must share their grid origin"));
    }
    let needed = t_index + 1;
    for w in [f, g] {
        if w.len() < needed {
            return Err(Error::WindowTooShort {
                needed,
                available: w.len(),
            });
        }
    }
    let f = f.truncate(needed)?;
    let g = g.truncate(needed)?;
    let fg = f.zip_with(&g, |x, y| x * y)?;
    let lhs = frac_sum_diff(&fg, alpha).values()[t_index].clone();

    let neg_alpha = -alpha.value().clone();
    let mut rhs = GammaPolynomial::zero();
    for n in 0..=t_index {
        let order = FracOrder::new(alpha.value() + q(n))?;
        let sum_f = frac_sum_diff(&f, &order);
        let diff_g = delta_n(&g, n)?;
        let term = &sum_f.values()[t_index - n] * &diff_g.values()[t_index - n];
        rhs = &rhs + &term.scale(&gen_binomial(&neg_alpha, n));
    }
    Ok(VerificationReport::compare(
        "leibniz",
        params([
            ("a", f.origin().clone()),
            ("alpha", alpha.value().clone()),
            ("t_index", q(t_index)),
        ]),
        &lhs,
        &rhs,
    ))
}

/// Both sides of the identity obtained from the Leibniz rule with
/// `f(t) = (t−γ)^(β)`, `g(t) = t^(γ)`, at `t = α+β+γ+N`:
///
/// `Γ(β+γ+1)/Γ(β+1) · (α+β+γ+1)_N / N!
///  = Σ_n C(−α,n) (α+β+n+1)_{N−n} γ^(n) (t−α−n)^(γ−n) / (N−n)!`.
pub fn prop_form1_check(
    alpha: &FracOrder,
    beta: &Rational,
    gamma: &Rational,
    n_top: usize,
) -> VerificationReport {
    const NAME: &str = "form1";
    let alpha = alpha.value();
    let p = params([
        ("alpha", alpha.clone()),
        ("beta", beta.clone()),
        ("gamma", gamma.clone()),
        ("N", q(n_top)),
    ]);
    let bg = beta + gamma;
    if beta.is_in_nm1_down() {
        return VerificationReport::excluded(NAME, p, "beta must not be a negative integer");
    }
    if bg.is_in_nm1_down() {
        return VerificationReport::excluded(NAME, p, "beta+gamma must not be a negative integer");
    }
    let one = Rational::one();
    let fact = |n: usize| Rational::from_integer(factorial(n as u64));

    let ratio = gmono_div(
        &gamma_of(&(&bg + &one)).expect("beta+gamma+1 is not a pole"),
        &gamma_of(&(beta + &one)).expect("beta+1 is not a pole"),
    )
    .expect("Gamma is never zero");
    let lhs_coeff = poch_int(&(alpha + &bg + &one), n_top) / fact(n_top);
    let lhs = GammaPolynomial::from(ratio.scale(&lhs_coeff));

    let neg_alpha = -alpha.clone();
    let mut rhs = GammaPolynomial::zero();
    for n in 0..=n_top {
        // t − α − n = β + γ + N − n
        let x = &bg + q(n_top - n);
        let power = match falling(&x, &(gamma - q(n))) {
            SpecialValue::Finite(m) => m,
            other => {
                return VerificationReport::excluded(
                    NAME,
                    p,
                    format!(
                        "falling factor ({x})^({}) must be finite (got {})",
                        gamma - q(n),
                        other.class_name()
                    ),
                )
            }
        };
        let coeff = gen_binomial(&neg_alpha, n)
            * poch_int(&(alpha + beta + q(n + 1)), n_top - n)
            * falling_int(gamma, n)
            / fact(n_top - n);
        rhs.add_monomial(&power.scale(&coeff));
    }
    VerificationReport::compare(NAME, p, &lhs, &rhs)
}
