//! Terminating ₃F₂ series and the Saalschütz summation.

use super::report::{params, VerificationReport};
use crate::error::{Error, Result};
use crate::special::poch_int;
use crate::{Rational, Scalar};

/// First `k ≤ max_k` with `(b)_k = 0`, i.e. `b + k − 1 = 0`.
fn first_vanishing<S: Scalar>(b: &S, max_k: usize) -> Option<usize> {
    let k = (S::one() - b.clone()).as_integer()?;
    let k = usize::try_from(k).ok()?;
    (k >= 1 && k <= max_k).then_some(k)
}

/// `₃F₂(a1, a2, −m; b1, b2; z) = Σ_{k=0}^{m} (a1)_k (a2)_k (−m)_k z^k / ((b1)_k (b2)_k k!)`.
pub fn hyp3f2_terminating<S: Scalar>(
    a1: &S,
    a2: &S,
    m: usize,
    b1: &S,
    b2: &S,
    z: &S,
) -> Result<S> {
    if let Some(k) = [b1, b2].iter().filter_map(|b| first_vanishing(*b, m)).min() {
        return Err(Error::DenominatorPochhammerZero { k });
    }
    let neg_m = -S::from_usize(m).expect("m fits the scalar");
    let mut term = S::one();
    let mut total = S::one();
    for k in 0..m {
        let kk = S::from_usize(k).expect("k fits the scalar");
        let num = (a1.clone() + kk.clone())
            * (a2.clone() + kk.clone())
            * (neg_m.clone() + kk.clone())
            * z.clone();
        let den = (b1.clone() + kk.clone()) * (b2.clone() + kk.clone()) * (kk + S::one());
        term = term * num / den;
        total = total + term.clone();
    }
    Ok(total)
}

/// `(c−a)_m (c−b)_m / ((c)_m (c−a−b)_m)`.
pub fn saalschutz_lhs<S: Scalar>(a: &S, b: &S, c: &S, m: usize) -> Result<S> {
    let c_ab = c.clone() - a.clone() - b.clone();
    let den_c = poch_int(c, m);
    if den_c.is_zero() {
        return Err(Error::VanishingDenominator("(c)_m".into()));
    }
    let den_cab = poch_int(&c_ab, m);
    if den_cab.is_zero() {
        return Err(Error::VanishingDenominator("(c-a-b)_m".into()));
    }
    let num = poch_int(&(c.clone() - a.clone()), m) * poch_int(&(c.clone() - b.clone()), m);
    Ok(num / (den_c * den_cab))
}

/// Hypotheses under which the Saalschütz formula is derived; the first
/// violated one, if any.
pub fn saalschutz_hypothesis_violation(a: &Rational, b: &Rational, c: &Rational) -> Option<&'static str> {
    let one = Rational::from_integer(1.into());
    if a.is_in_n0_down() {
        Some("a must not be a nonpositive integer")
    } else if c.is_in_n0_down() {
        Some("c must not be a nonpositive integer")
    } else if (c - a - &one).is_in_nm1_down() {
        Some("c-a-1 must not be a negative integer")
    } else if (c - a - b - &one).is_in_nm1_down() {
        Some("c-a-b-1 must not be a negative integer")
    } else {
        None
    }
}

/// `(c−a)_m (c−b)_m / ((c)_m (c−a−b)_m) = ₃F₂(a, b, −m; c, 1+a+b−c−m; 1)`.
///
/// With `force` the hypotheses are not enforced; evaluation failures are
/// still reported as `domain_excluded`.
pub fn saalschutz_verify(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    m: usize,
    force: bool,
) -> VerificationReport {
    const NAME: &str = "saalschutz";
    let p = params([
        ("a", a.clone()),
        ("b", b.clone()),
        ("c", c.clone()),
        ("m", Rational::from_integer(m.into())),
    ]);
    if !force {
        if let Some(reason) = saalschutz_hypothesis_violation(a, b, c) {
            return VerificationReport::excluded(NAME, p, reason);
        }
    }
    let one = Rational::from_integer(1.into());
    let b2 = &one + a + b - c - Rational::from_integer(m.into());
    let lhs = match saalschutz_lhs(a, b, c, m) {
        Ok(v) => v,
        Err(e) => return VerificationReport::excluded(NAME, p, e.to_string()),
    };
    let rhs = match hyp3f2_terminating(a, b, m, c, &b2, &one) {
        Ok(v) => v,
        Err(e) => return VerificationReport::excluded(NAME, p, e.to_string()),
    };
    VerificationReport::compare_rational(NAME, p, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::exact::{factorial, int, rat};
    use crate::identities::report::Status;
    use proptest::prelude::*;

    // Term-by-term definition, independent of the ratio recurrence.
    fn hyp_direct(a1: &Rational, a2: &Rational, m: usize, b1: &Rational, b2: &Rational, z: &Rational) -> Rational {
        let neg_m = -Rational::from_integer(m.into());
        (0..=m).fold(Rational::zero(), |acc, k| {
            let mut zk = Rational::from_integer(1.into());
            for _ in 0..k {
                zk *= z;
            }
            acc + poch_int(a1, k) * poch_int(a2, k) * poch_int(&neg_m, k) * zk
                / (poch_int(b1, k) * poch_int(b2, k) * Rational::from_integer(factorial(k as u64)))
        })
    }

    #[test]
    fn series_examples() {
        let one = int(1);
        assert_eq!(hyp3f2_terminating(&rat(1, 3), &rat(2, 7), 0, &int(5), &rat(1, 2), &rat(9, 4)).unwrap(), one);
        assert_eq!(
            hyp3f2_terminating(&rat(1, 2), &rat(1, 2), 1, &int(2), &int(-1), &int(1)).unwrap(),
            rat(9, 8)
        );
        assert_eq!(
            hyp3f2_terminating(&rat(1, 2), &rat(-3, 5), 6, &rat(7, 3), &rat(-1, 4), &int(0)).unwrap(),
            one
        );
        // b2 = −1 vanishes at k = 2 ≤ m.
        assert_eq!(
            hyp3f2_terminating(&rat(1, 2), &rat(1, 2), 3, &int(2), &int(-1), &int(1)),
            Err(Error::DenominatorPochhammerZero { k: 2 })
        );
        let f = hyp3f2_terminating(&0.5_f64, &0.5, 1, &2.0, &-1.0, &1.0).unwrap();
        assert!((f - 1.125).abs() < 1e-15);
    }

    #[test]
    fn lhs_examples() {
        assert_eq!(saalschutz_lhs(&rat(1, 3), &rat(4, 5), &rat(7, 2), 0).unwrap(), int(1));
        assert_eq!(saalschutz_lhs(&rat(1, 2), &rat(1, 2), &int(2), 1).unwrap(), rat(9, 8));
        let v = saalschutz_lhs(&rat(1, 3), &rat(1, 5), &rat(7, 4), 3).unwrap();
        let expected = poch_int(&rat(17, 12), 3) * poch_int(&rat(31, 20), 3)
            / (poch_int(&rat(7, 4), 3) * poch_int(&rat(73, 60), 3));
        assert_eq!(v, expected);
        assert_eq!(
            saalschutz_lhs(&int(0), &int(0), &int(-1), 3),
            Err(Error::VanishingDenominator("(c)_m".into()))
        );
        assert_eq!(
            saalschutz_lhs(&int(1), &int(1), &int(2), 1),
            Err(Error::VanishingDenominator("(c-a-b)_m".into()))
        );
    }

    #[test]
    fn verify_examples() {
        let r = saalschutz_verify(&rat(1, 2), &rat(1, 2), &int(2), 1, false);
        assert_eq!(r.status, Status::Exact);
        assert_eq!((r.lhs.as_deref(), r.rhs.as_deref()), (Some("9/8"), Some("9/8")));
        for m in 0..=8 {
            assert!(saalschutz_verify(&rat(1, 3), &rat(1, 5), &rat(7, 4), m, false).is_exact());
        }
        assert!(saalschutz_verify(&rat(-2, 3), &int(4), &rat(1, 9), 0, false).is_exact());
        let r = saalschutz_verify(&int(0), &rat(1, 2), &int(2), 2, false);
        assert_eq!(r.status, Status::DomainExcluded);
        // Forced: a = 0 still sums correctly.
        assert!(saalschutz_verify(&int(0), &rat(1, 2), &int(2), 2, true).is_exact());
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn recurrence_matches_definition(a1 in rational(), a2 in rational(), b1 in rational(),
                                         b2 in rational(), z in rational(), m in 0usize..8) {
            match hyp3f2_terminating(&a1, &a2, m, &b1, &b2, &z) {
                Ok(v) => prop_assert_eq!(v, hyp_direct(&a1, &a2, m, &b1, &b2, &z)),
                Err(Error::DenominatorPochhammerZero { k }) => {
                    prop_assert!(poch_int(&b1, k).is_zero() || poch_int(&b2, k).is_zero());
                }
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn series_symmetry(a1 in rational(), a2 in rational(), b1 in rational(),
                           b2 in rational(), z in rational(), m in 0usize..8) {
            let x = hyp3f2_terminating(&a1, &a2, m, &b1, &b2, &z);
            prop_assert_eq!(&x, &hyp3f2_terminating(&a2, &a1, m, &b1, &b2, &z));
            prop_assert_eq!(&x, &hyp3f2_terminating(&a1, &a2, m, &b2, &b1, &z));
        }

        #[test]
        fn saalschutz_sweep(a in rational(), b in rational(), c in rational(), m in 0usize..10) {
            let r = saalschutz_verify(&a, &b, &c, m, false);
            prop_assert!(matches!(r.status, Status::Exact | Status::DomainExcluded), "{:?}", r);
            let s = saalschutz_verify(&b, &a, &c, m, false);
            if r.is_exact() && s.is_exact() {
                prop_assert_eq!(r.lhs, s.lhs);
            }
        }
    }
}
