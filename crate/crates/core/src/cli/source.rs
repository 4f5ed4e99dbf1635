//! Grid-function sources for `--f` and seeded random windows.

use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::parse_rational;
use crate::gridfn::{sample_closure, sample_falling_power, GridFunction};
use crate::{GammaPolynomial, Rational};

/// Exact grid function with Gamma-polynomial values.
pub type ExactFn = GridFunction<Rational, GammaPolynomial>;

/// Input function for operator evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `const:q`
    Const(Rational),
    /// `falling:mu`, the power `(s−a)^(μ)` on its natural grid `a+μ`.
    Falling(Rational),
    /// `table:q,q,...`
    Table(Vec<Rational>),
    /// `random:seed`
    Random(u64),
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("function spec '{s}' needs the form kind:value")))?;
        match kind {
            "const" => Ok(Self::Const(parse_rational(body)?)),
            "falling" => Ok(Self::Falling(parse_rational(body)?)),
            "table" => body
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()
                .map(Self::Table),
            "random" => body
                .parse()
                .map(Self::Random)
                .map_err(|_| Error::Parse(format!("random seed '{body}' is not an unsigned integer"))),
            _ => Err(Error::Parse(format!(
                "unknown function kind '{kind}' (expected const, falling, table or random)"
            ))),
        }
    }
}

impl FunctionSpec {
    /// Samples the function on `len` points. `a` is the grid origin, except
    /// for `falling:mu` whose grid starts at `a+μ`. Tables supply their first
    /// `len` entries.
    pub fn sample(&self, a: &Rational, len: usize) -> Result<ExactFn> {
        match self {
            Self::Const(q) => sample_closure(a.clone(), len, |_| GammaPolynomial::constant(q.clone())),
            Self::Falling(mu) => sample_falling_power(a, mu, len),
            Self::Table(vals) if len > vals.len() => Err(Error::WindowTooShort {
                needed: len,
                available: vals.len(),
            }),
            Self::Table(vals) => constant_window(a.clone(), vals[..len].to_vec()),
            Self::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                constant_window(a.clone(), random_values(&mut rng, len))
            }
        }
    }
}

/// Rational-valued window lifted to Gamma polynomials.
pub fn constant_window(a: Rational, vals: Vec<Rational>) -> Result<ExactFn> {
    GridFunction::new(a, vals.into_iter().map(GammaPolynomial::constant).collect())
}

/// `len` rationals `n/d` with `|n| ≤ 9` and `1 ≤ d ≤ 9`.
pub fn random_values(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            let n: i64 = rng.gen_range(-9..=9);
            let d: i64 = rng.gen_range(1..=9);
            Rational::new(n.into(), d.into())
        })
        .collect()
}
