//! Fractional power rule for `(s−a)^(μ)` and its consequences.

use num_traits::{One, Zero};

use super::report::{params, Params, VerificationReport};
use crate::error::{Error, Result};
use crate::exact::{factorial, gamma_of, gmono_div};
use crate::fracops::{frac_sum_diff, FracOrder};
use crate::gridfn::sample_falling_power;
use crate::special::{falling, gen_binomial, poch_int};
use crate::{GammaPolynomial, Rational, Scalar};

fn q(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn check_mu(mu: &Rational) -> Result<()> {
    if mu.is_in_nm1_down() {
        Err(Error::domain("mu must not be a negative integer"))
    } else {
        Ok(())
    }
}

fn point_params(a: &Rational, mu: &Rational, nu: &FracOrder, n: usize) -> Params {
    params([
        ("a", a.clone()),
        ("mu", mu.clone()),
        ("nu", nu.value().clone()),
        ("N", q(n)),
    ])
}

/// Closed form of `Δ_{a+μ}^{−ν}[(s−a)^(μ)]` at `t = a+μ+ν+N`:
/// `Γ(μ+1) (μ+ν+1)_N / N!`.
pub fn power_rule_closed(
    _a: &Rational,
    mu: &Rational,
    nu: &FracOrder,
    n: usize,
) -> Result<GammaPolynomial> {
    check_mu(mu)?;
    let g = gamma_of(&(mu + Rational::one()))?;
    let coeff = poch_int(&(mu + nu.value() + Rational::one()), n) / fact(n);
    Ok(GammaPolynomial::from(g.scale(&coeff)))
}

/// Second closed form of the same quantity.
///
/// If `μ+ν` is not a negative integer the value is
/// `Γ(μ+1)/Γ(μ+ν+1) · (t−a)^(μ+ν)`; otherwise it vanishes for `t ≥ a`, i.e.
/// for `N ≥ −(μ+ν)`, and smaller `N` are outside the formula's domain.
pub fn corollary_closed(
    _a: &Rational,
    mu: &Rational,
    nu: &FracOrder,
    n: usize,
) -> Result<GammaPolynomial> {
    check_mu(mu)?;
    let sum = mu + nu.value();
    if sum.is_in_nm1_down() {
        let lowest = -&sum;
        return if q(n) >= lowest {
            Ok(GammaPolynomial::zero())
        } else {
            Err(Error::domain(format!(
                "N >= -(mu+nu) = {lowest} required when mu+nu is a negative integer"
            )))
        };
    }
    let ratio = gmono_div(
        &gamma_of(&(mu + Rational::one()))?,
        &gamma_of(&(&sum + Rational::one()))?,
    )?;
    let power = falling(&(&sum + q(n)), &sum)
        .to_polynomial()
        .ok_or_else(|| Error::SpecialValuePole(format!("(t-a)^({sum})")))?;
    Ok(power.mul_monomial(&ratio))
}

/// Compares the operator applied to a sampled `(s−a)^(μ)` with
/// [`power_rule_closed`] for `N = 0..=n_max`.
pub fn power_rule_verify(
    a: &Rational,
    mu: &Rational,
    nu: &FracOrder,
    n_max: usize,
) -> Vec<VerificationReport> {
    const NAME: &str = "power-rule";
    let f = match sample_falling_power(a, mu, n_max + 1) {
        Ok(f) => f,
        Err(e) => {
            return vec![VerificationReport::excluded(NAME, point_params(a, mu, nu, 0), e.to_string())]
        }
    };
    let out = frac_sum_diff(&f, nu);
    out.values()
        .iter()
        .enumerate()
        .map(|(n, value)| {
            let p = point_params(a, mu, nu, n);
            match power_rule_closed(a, mu, nu, n) {
                Ok(closed) => VerificationReport::compare(NAME, p, value, &closed),
                Err(e) => VerificationReport::excluded(NAME, p, e.to_string()),
            }
        })
        .collect()
}

/// Compares the operator with [`corollary_closed`] for `N = 0..=n_max`.
/// Points below the zero-case threshold come back as `domain_excluded`.
pub fn corollary_verify(
    a: &Rational,
    mu: &Rational,
    nu: &FracOrder,
    n_max: usize,
) -> Vec<VerificationReport> {
    const NAME: &str = "corollary";
    let f = match sample_falling_power(a, mu, n_max + 1) {
        Ok(f) => f,
        Err(e) => {
            return vec![VerificationReport::excluded(NAME, point_params(a, mu, nu, 0), e.to_string())]
        }
    };
    let out = frac_sum_diff(&f, nu);
    out.values()
        .iter()
        .enumerate()
        .map(|(n, value)| {
            let p = point_params(a, mu, nu, n);
            match corollary_closed(a, mu, nu, n) {
                Ok(closed) => VerificationReport::compare(NAME, p, value, &closed),
                Err(e) => VerificationReport::excluded(NAME, p, e.to_string()),
            }
        })
        .collect()
}

/// `Σ_{k=0}^{n} C(n,k) (ν)_{n−k} (μ+1)_k = 0` for `μ+ν` a negative integer
/// and `n ≥ −(μ+ν)`; the Gamma-sum identity after dividing by `Γ(ν)Γ(μ+1)`.
pub fn gamma_sum_check(mu: &Rational, nu: &Rational, n: i64) -> VerificationReport {
    const NAME: &str = "gamma-sum";
    let p = params([
        ("mu", mu.clone()),
        ("nu", nu.clone()),
        ("n", Rational::from_integer(n.into())),
    ]);
    let sum = mu + nu;
    let violated = if !sum.is_in_nm1_down() {
        Some("mu+nu must be a negative integer")
    } else if mu.is_in_nm1_down() {
        Some("mu must not be a negative integer")
    } else if nu.is_in_n0_down() {
        Some("nu must not be a nonpositive integer")
    } else if Rational::from_integer(n.into()) < -&sum {
        Some("n >= -(mu+nu)")
    } else {
        None
    };
    if let Some(reason) = violated {
        return VerificationReport::excluded(NAME, p, reason);
    }
    let n = n as usize;
    let mu1 = mu + Rational::one();
    let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
        acc + gen_binomial(&q(n), k) * poch_int(nu, n - k) * poch_int(&mu1, k)
    });
    VerificationReport::compare_rational(NAME, p, &lhs, &Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::identities::report::Status;
    use proptest::prelude::*;

    fn order(x: Rational) -> FracOrder {
        FracOrder::new(x).unwrap()
    }

    fn gp(x: Rational) -> GammaPolynomial {
        gamma_of(&x).unwrap().into()
    }

    #[test]
    fn closed_form_examples() {
        let v = power_rule_closed(&int(0), &int(0), &order(rat(1, 2)), 2).unwrap();
        assert_eq!(v, GammaPolynomial::constant(rat(15, 8)));

        let v = power_rule_closed(&int(0), &rat(1, 2), &order(rat(1, 2)), 0).unwrap();
        assert_eq!(v, gp(rat(3, 2)));

        // μ+ν = −2: zero from N = 2 on.
        for n in 2..10 {
            let v = power_rule_closed(&int(0), &rat(1, 2), &order(rat(-5, 2)), n).unwrap();
            assert!(v.is_zero());
            assert!(corollary_closed(&int(0), &rat(1, 2), &order(rat(-5, 2)), n)
                .unwrap()
                .is_zero());
        }
        assert!(corollary_closed(&int(0), &rat(1, 2), &order(rat(-5, 2)), 1).is_err());

        // Classical sum of ones.
        for n in 0..6 {
            let v = corollary_closed(&int(0), &int(0), &order(int(1)), n).unwrap();
            assert_eq!(v, GammaPolynomial::constant(q(n + 1)));
        }
        assert!(power_rule_closed(&int(0), &int(-1), &order(rat(1, 2)), 0).is_err());
    }

    #[test]
    fn dual_path_examples() {
        let reps = power_rule_verify(&int(0), &rat(1, 2), &order(rat(1, 2)), 8);
        assert_eq!(reps.len(), 9);
        assert!(reps.iter().all(|r| r.is_exact()));
        assert!(power_rule_verify(&int(-3), &rat(5, 2), &order(rat(3, 2)), 6)
            .iter()
            .all(|r| r.is_exact()));
        assert!(power_rule_verify(&rat(1, 4), &rat(1, 3), &order(rat(-1, 2)), 6)
            .iter()
            .all(|r| r.is_exact()));
        let reps = power_rule_verify(&int(0), &int(-2), &order(rat(1, 2)), 3);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].status, Status::DomainExcluded);
    }

    #[test]
    fn corollary_zero_case_boundary() {
        let reps = corollary_verify(&int(0), &rat(1, 2), &order(rat(-5, 2)), 6);
        let statuses: Vec<_> = reps.iter().map(|r| r.status).collect();
        assert_eq!(&statuses[..2], &[Status::DomainExcluded; 2]);
        assert!(statuses[2..].iter().all(|s| *s == Status::Exact));
    }

    #[test]
    fn gamma_sum_examples() {
        assert!(gamma_sum_check(&rat(1, 2), &rat(-5, 2), 2).is_exact());
        assert!(gamma_sum_check(&rat(1, 2), &rat(-5, 2), 5).is_exact());
        let r = gamma_sum_check(&rat(1, 2), &rat(-3, 2), 0);
        assert_eq!(r.status, Status::DomainExcluded);
        assert_eq!(r.reason.as_deref(), Some("n >= -(mu+nu)"));
        assert_eq!(gamma_sum_check(&rat(1, 2), &rat(1, 2), 3).status, Status::DomainExcluded);
    }

    #[test]
    fn gamma_sum_unnormalized_form() {
        // Σ C(n,k) Γ(n+ν−k) Γ(k+μ+1) in the Gamma algebra.
        let (mu, nu) = (rat(1, 3), rat(-7, 3));
        for n in 2..8usize {
            let mut acc = GammaPolynomial::zero();
            for k in 0..=n {
                let a = gamma_of(&(&nu + q(n - k))).unwrap();
                let b = gamma_of(&(&mu + q(k + 1))).unwrap();
                acc.add_monomial(&(&a * &b).scale(&gen_binomial(&q(n), k)));
            }
            assert!(acc.is_zero(), "n = {n}: {acc}");
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn closed_forms_agree(a in rational(), mu in rational(), nu in rational(), n in 0usize..12) {
            prop_assume!(!mu.is_in_nm1_down() && !nu.is_in_n0_down());
            prop_assume!(!(&mu + &nu).is_in_nm1_down());
            let nu = order(nu);
            prop_assert_eq!(
                power_rule_closed(&a, &mu, &nu, n).unwrap(),
                corollary_closed(&a, &mu, &nu, n).unwrap()
            );
        }
    }
}
