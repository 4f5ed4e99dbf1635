//! Agreement of the Miller–Ross and Atici–Eloe fractional differences.

use super::report::{params, VerificationReport};
use crate::error::{Error, Result};
use crate::fracops::{ae_frac_diff, frac_sum_diff, FracOrder};
use crate::gridfn::GridFunction;
use crate::{GammaPolynomial, Rational};

/// Pointwise comparison of `Δ^n[Δ^{−(n−μ)} f]` with the sum-difference of
/// order `−μ` on their shared grid points.
///
/// The two operators live on grids starting at `a+n−μ` and `a−μ`; index `k`
/// of the first is index `k+n` of the second. One report per shared point.
pub fn mr_ae_check(
    f: &GridFunction<Rational, GammaPolynomial>,
    mu: &Rational,
) -> Result<Vec<VerificationReport>> {
    let ae = ae_frac_diff(f, mu)?;
    let mr = frac_sum_diff(f, &FracOrder::new(-mu.clone())?);
    ae.samples()
        .enumerate()
        .map(|(k, (t, value))| {
            let other = mr
                .at(&t)
                .ok_or_else(|| Error::domain(format!("t = {t} lies outside the sum-difference grid")))?;
            Ok(VerificationReport::compare(
                "mr-ae",
                params([
                    ("a", f.origin().clone()),
                    ("mu", mu.clone()),
                    ("k", Rational::from_integer(k.into())),
                ]),
                value,
                other,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::gridfn::sample_closure;
    use proptest::prelude::*;

    fn table(a: Rational, vals: &[Rational]) -> GridFunction<Rational, GammaPolynomial> {
        sample_closure(a, vals.len(), |k| GammaPolynomial::constant(vals[k].clone())).unwrap()
    }

    #[test]
    fn shared_points() {
        let f = table(int(0), &[int(1), int(2), rat(-1, 3), int(4)]);
        let reps = mr_ae_check(&f, &rat(1, 2)).unwrap();
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|r| r.is_exact()));
        let reps = mr_ae_check(&f, &rat(3, 2)).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(|r| r.is_exact()));
        assert!(mr_ae_check(&f, &int(1)).is_err());
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn orders_above_one(a in rational(), vals in prop::collection::vec(rational(), 4..=12),
                            mu in prop::sample::select(vec![rat(3, 2), rat(5, 3), rat(5, 2)])) {
            let f = table(a, &vals);
            for r in mr_ae_check(&f, &mu).unwrap() {
                prop_assert!(r.is_exact(), "{:?}", r);
            }
        }
    }
}
