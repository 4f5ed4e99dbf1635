//! Exact arithmetic: rationals, Gamma monomials and Gamma polynomials.
//!
//! Every Gamma value at a rational argument is reduced by `Γ(x+1) = xΓ(x)`
//! to a rational multiple of `Γ(b)` with `b` in (0,1). Gamma at positive
//! integers folds into the rational coefficient. Distinct bases are kept as
//! independent symbols, which makes equality and zero tests purely
//! structural.

mod monomial;
mod polynomial;
mod rational;

pub use monomial::{gamma_of, gmono_div, GammaMonomial, Signature};
pub use polynomial::{gpoly_arith, to_float, GammaPolynomial, PolyOp};
pub use rational::{
    checked_div, factorial, int, parse_rational, rat, rat_arith, rat_cmp, rational_to_f64,
    split_floor, RatOp,
};

/// `ln Γ(x)` for `x` in (0, 1), where Γ is positive.
pub(crate) fn ln_gamma_unit(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    // ln Γ(p/q) at 30 significant digits (mpmath loggamma).
    const LN_GAMMA_TABLE: &[(i64, i64, f64)] = &[
        (1, 2, 0.572_364_942_924_700_087_071_713_7),
        (1, 3, 0.985_420_646_927_767_069_187_174),
        (2, 3, 0.303_150_275_147_523_568_675_862_8),
        (1, 4, 1.288_022_524_698_077_457_370_61),
        (3, 4, 0.203_280_951_431_295_371_481_433),
        (1, 5, 1.524_063_822_430_784_524_881_056),
        (2, 5, 0.796_677_817_701_783_766_544_736),
        (1, 6, 1.716_733_435_078_240_460_527_846),
        (5, 6, 0.121_143_631_331_105_023_032_813_2),
        (1, 7, 1.879_169_271_595_835_836_455_956),
        (5, 7, 0.243_724_444_697_223_435_187_555_5),
        (1, 1000, 6.907_178_885_383_853_682_512_345),
        (999, 1000, 0.000_578_038_532_891_379_724_036_342_5),
    ];

    #[test]
    fn gamma_backend_relative_accuracy() {
        for &(p, q, expected) in LN_GAMMA_TABLE {
            let got = ln_gamma_unit(p as f64 / q as f64);
            // |Γ_got/Γ − 1| ≈ |lnΓ_got − lnΓ|
            assert!(
                (got - expected).abs() <= 1e-12,
                "lnΓ({p}/{q}): {got} vs {expected}"
            );
        }
    }
}
