use num_traits::{One, Zero};

use super::report::{params, VerificationReport};
use crate::error::Error;
use crate::fracops::nabla_poch_diff;
use crate::{GammaPolynomial, Rational, Scalar};

/// Vanishing of the nabla Pochhammer-kernel operator on `(s−a)_p` for
/// `α − p = m ∈ {1,2,…}` and `t_index ≥ 1 + m`.
///
/// Below the threshold the operator value is still computed and attached to
/// the `domain_excluded` report.
pub fn nabla_zero_check(
    a: &Rational,
    p: &Rational,
    alpha: &Rational,
    t_index: usize,
) -> VerificationReport {
    const NAME: &str = "nabla-zero";
    let prm = params([
        ("a", a.clone()),
        ("p", p.clone()),
        ("alpha", alpha.clone()),
        ("t_index", Rational::from_integer(t_index.into())),
    ]);
    let m = alpha - p;
    if !m.is_in_n1() {
        return VerificationReport::excluded(NAME, prm, "alpha-p must be a positive integer");
    }
    let value = match nabla_poch_diff(a, p, alpha, t_index) {
        Ok(v) => v,
        Err(Error::SpecialValuePole(what)) => {
            return VerificationReport::pole(NAME, prm, format!("pole in {what}"), "0".into())
        }
        Err(e) => return VerificationReport::excluded(NAME, prm, e.to_string()),
    };
    let zero = GammaPolynomial::zero();
    if Rational::from_integer(t_index.into()) < m + Rational::one() {
        return VerificationReport::excluded_with_values(NAME, prm, "t-index >= 1+m", &value, &zero);
    }
    VerificationReport::compare(NAME, prm, &value, &zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::identities::report::Status;

    #[test]
    fn corrected_formula_examples() {
        let r = nabla_zero_check(&int(0), &rat(1, 2), &rat(3, 2), 2);
        assert_eq!(r.status, Status::Exact);
        assert_eq!(r.lhs.as_deref(), Some("0"));

        let r = nabla_zero_check(&int(0), &rat(1, 2), &rat(3, 2), 1);
        assert_eq!(r.status, Status::DomainExcluded);
        assert_eq!(r.lhs.as_deref(), Some("1/2*G(1/2)^1"));
        assert_eq!(r.reason.as_deref(), Some("t-index >= 1+m"));

        for t in 3..10 {
            assert!(nabla_zero_check(&int(0), &rat(1, 2), &rat(5, 2), t).is_exact());
        }
        assert_eq!(
            nabla_zero_check(&int(0), &rat(1, 2), &int(1), 4).status,
            Status::DomainExcluded
        );
    }
}
