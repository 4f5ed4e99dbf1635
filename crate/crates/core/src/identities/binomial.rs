use num_traits::Zero;

use super::report::{params, VerificationReport};
use crate::error::{Error, Result};
use crate::gridfn::{delta_n, GridFunction};
use crate::special::{falling_int, gen_binomial, poch_int};
use crate::{GammaPolynomial, Rational};

fn binomial(n: usize, k: usize) -> Rational {
    gen_binomial(&Rational::from_integer(n.into()), k)
}

fn n_rational(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// `(x+y)^(n) = Σ_k C(n,k) x^(n−k) y^(k)` with falling powers.
pub fn binom_falling_check(x: &Rational, y: &Rational, n: usize) -> VerificationReport {
    let lhs = falling_int(&(x + y), n);
    let rhs = (0..=n).fold(Rational::zero(), |acc, k| {
        acc + binomial(n, k) * falling_int(x, n - k) * falling_int(y, k)
    });
    VerificationReport::compare_rational(
        "binom-falling",
        params([("x", x.clone()), ("y", y.clone()), ("n", n_rational(n))]),
        &lhs,
        &rhs,
    )
}

/// `(x+y)_n = Σ_k C(n,k) (x)_{n−k} (y)_k`.
pub fn binom_poch_check(x: &Rational, y: &Rational, n: usize) -> VerificationReport {
    let lhs = poch_int(&(x + y), n);
    let rhs = (0..=n).fold(Rational::zero(), |acc, k| {
        acc + binomial(n, k) * poch_int(x, n - k) * poch_int(y, k)
    });
    VerificationReport::compare_rational(
        "binom-poch",
        params([("x", x.clone()), ("y", y.clone()), ("n", n_rational(n))]),
        &lhs,
        &rhs,
    )
}

/// Alternating-sum lemma
/// `Σ_{n=0}^{k} (−1)^n C(k,n) Δ^n g(t−α−n) = g(t−α−k)` at
/// `t = a + α + k + t_index`.
///
/// With that parametrisation `t−α−n` is grid index `k − n + t_index`, so the
/// window must hold at least `k + t_index + 1` samples. `α` only shifts the
/// evaluation point and does not enter the values.
pub fn alt_sum_lemma_check(
    g: &GridFunction<Rational, GammaPolynomial>,
    alpha: &Rational,
    k: usize,
    t_index: usize,
) -> Result<VerificationReport> {
    let needed = k + t_index + 1;
    if g.len() < needed {
        return Err(Error::WindowTooShort {
            needed,
            available: g.len(),
        });
    }
    let mut lhs = GammaPolynomial::zero();
    for n in 0..=k {
        let dn = delta_n(g, n)?;
        let term = dn.values()[k - n + t_index].scale(&binomial(k, n));
        lhs = if n % 2 == 0 { &lhs + &term } else { &lhs - &term };
    }
    let rhs = g.values()[t_index].clone();
    Ok(VerificationReport::compare(
        "alt-sum",
        params([
            ("a", g.origin().clone()),
            ("alpha", alpha.clone()),
            ("k", n_rational(k)),
            ("t_index", n_rational(t_index)),
        ]),
        &lhs,
        &rhs,
    ))
}
