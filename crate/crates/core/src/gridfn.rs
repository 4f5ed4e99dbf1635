//! Functions on shifted integer grids `{a, a+1, a+2, …}`, sampled on finite
//! windows, and integer-order forward differences.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::special::{falling, gen_binomial};
use crate::{GammaPolynomial, Module, Rational, Scalar};

/// The grid `{origin + k : k = 0, 1, 2, …}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid<S = Rational> {
    pub origin: S,
}

impl<S: Scalar> Grid<S> {
    pub fn new(origin: S) -> Self {
        Self { origin }
    }

    pub fn point(&self, k: usize) -> S {
        self.origin.clone() + S::from_usize(k).expect("index fits the scalar")
    }

    /// Index of `t` on this grid, if `t` is a grid point.
    pub fn index_of(&self, t: &S) -> Option<usize> {
        let k = (t.clone() - self.origin.clone()).as_integer()?;
        usize::try_from(k).ok()
    }
}

/// Finite window of a function on a shifted grid: `values[k] = f(origin + k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<S, V = S> {
    origin: S,
    values: Vec<V>,
}

impl<S: Scalar, V: Clone> GridFunction<S, V> {
    pub fn new(origin: S, values: Vec<V>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::WindowTooShort {
                needed: 1,
                available: 0,
            });
        }
        Ok(Self { origin, values })
    }

    pub fn origin(&self) -> &S {
        &self.origin
    }

    pub fn grid(&self) -> Grid<S> {
        Grid::new(self.origin.clone())
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&V> {
        self.values.get(k)
    }

    pub fn point(&self, k: usize) -> S {
        self.grid().point(k)
    }

    /// Value at the grid point `t`, if `t` lies in the window.
    pub fn at(&self, t: &S) -> Option<&V> {
        self.grid().index_of(t).and_then(|k| self.values.get(k))
    }

    /// `(point, value)` pairs in index order.
    pub fn samples(&self) -> impl Iterator<Item = (S, &V)> + '_ {
        let grid = self.grid();
        self.values.iter().enumerate().map(move |(k, v)| (grid.point(k), v))
    }

    /// First `len` samples.
    pub fn truncate(&self, len: usize) -> Result<Self> {
        if len == 0 || len > self.len() {
            return Err(Error::WindowTooShort {
                needed: len.max(1),
                available: self.len(),
            });
        }
        Self::new(self.origin.clone(), self.values[..len].to_vec())
    }

    pub fn map<W: Clone>(&self, f: impl FnMut(&V) -> W) -> GridFunction<S, W> {
        GridFunction {
            origin: self.origin.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Pointwise combination of two windows on the same grid, truncated to
    /// the shorter one.
    pub fn zip_with<W: Clone, U: Clone>(
        &self,
        other: &GridFunction<S, W>,
        mut f: impl FnMut(&V, &W) -> U,
    ) -> Result<GridFunction<S, U>> {
        if self.origin != other.origin {
            return Err(Error::domain(format!(
                "grid origins differ: {:?} vs {:?}",
                self.origin, other.origin
            )));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect();
        GridFunction::new(self.origin.clone(), values)
    }
}

/// Tabulates `source(k)` for `k < len` on the grid starting at `a`.
pub fn sample_closure<S: Scalar, V: Clone>(
    a: S,
    len: usize,
    source: impl FnMut(usize) -> V,
) -> Result<GridFunction<S, V>> {
    GridFunction::new(a, (0..len).map(source).collect())
}

/// Samples `(s−a)^(μ falling)` on the grid starting at `a+μ`, where the value at
/// index `i` is `(μ+i)^(μ) = Γ(μ+1+i)/Γ(i+1)`.
pub fn sample_falling_power(
    a: &Rational,
    mu: &Rational,
    len: usize,
) -> Result<GridFunction<Rational, GammaPolynomial>> {
    if mu.is_in_nm1_down() {
        return Err(Error::domain("mu must not be a negative integer"));
    }
    sample_closure(a + mu, len, |i| {
        let x = mu + Rational::from_integer(i.into());
        falling(&x, mu)
            .to_polynomial()
            .expect("falling power is finite on its own grid")
    })
}

fn require_window<S, V>(f: &GridFunction<S, V>, needed: usize) -> Result<()> {
    if f.values.len() < needed {
        Err(Error::WindowTooShort {
            needed,
            available: f.values.len(),
        })
    } else {
        Ok(())
    }
}

/// n-th forward difference; the origin is kept and the window shrinks by `n`.
pub fn delta_n<S: Scalar, V: Module<S>>(
    f: &GridFunction<S, V>,
    n: usize,
) -> Result<GridFunction<S, V>> {
    require_window(f, n + 1)?;
    let mut values = f.values.clone();
    for _ in 0..n {
        values = values
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
    }
    GridFunction::new(f.origin.clone(), values)
}

/// n-th forward difference through the binomial form
/// `Σ_j (−1)^(n−j) C(n, j) f(t+j)`.
pub fn delta_n_binomial<S: Scalar, V: Module<S>>(
    f: &GridFunction<S, V>,
    n: usize,
) -> Result<GridFunction<S, V>> {
    require_window(f, n + 1)?;
    let weights: Vec<S> = (0..=n)
        .map(|j| {
            let c = gen_binomial(&S::from_usize(n).expect("order fits"), j);
            if (n - j).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    let values = (0..f.len() - n)
        .map(|k| {
            weights
                .iter()
                .enumerate()
                .fold(V::zero(), |acc, (j, w)| acc + f.values[k + j].scale(w))
        })
        .collect();
    GridFunction::new(f.origin.clone(), values)
}

#[derive(Serialize, Deserialize)]
struct GridFunctionJson {
    origin: String,
    values: Vec<String>,
}

impl<S: Display, V: Display> Serialize for GridFunction<S, V> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        GridFunctionJson {
            origin: self.origin.to_string(),
            values: self.values.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de, S, V> Deserialize<'de> for GridFunction<S, V>
where
    S: FromStr,
    V: FromStr,
    S::Err: Display,
    V::Err: Display,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GridFunctionJson::deserialize(d)?;
        if raw.values.is_empty() {
            return Err(D::Error::custom("grid function needs at least one value"));
        }
        let origin = raw.origin.parse().map_err(D::Error::custom)?;
        let values = raw
            .values
            .iter()
            .map(|v| v.parse().map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Self { origin, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gamma_of, int, rat};
    use proptest::prelude::*;

    type Exact = GridFunction<Rational, GammaPolynomial>;

    fn exact(origin: Rational, vals: &[Rational]) -> Exact {
        GridFunction::new(origin, vals.iter().cloned().map(GammaPolynomial::constant).collect())
            .unwrap()
    }

    fn gp(x: Rational) -> GammaPolynomial {
        gamma_of(&x).unwrap().into()
    }

    #[test]
    fn falling_power_samples() {
        let f = sample_falling_power(&int(0), &int(1), 3).unwrap();
        assert_eq!(f, exact(int(1), &[int(1), int(2), int(3)]));
        assert_eq!(f.point(2), int(3));

        let f = sample_falling_power(&int(0), &rat(1, 2), 2).unwrap();
        assert_eq!(f.origin(), &rat(1, 2));
        assert_eq!(f.values(), &[gp(rat(3, 2)), gp(rat(5, 2))]);
        assert_eq!(f.values()[1], gp(rat(1, 2)).scale(&rat(3, 4)));

        let f = sample_falling_power(&int(0), &int(0), 3).unwrap();
        assert_eq!(f, exact(int(0), &[int(1), int(1), int(1)]));

        assert!(matches!(
            sample_falling_power(&int(0), &int(-2), 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn closure_tabulation() {
        let f = sample_closure(int(0), 4, |_| GammaPolynomial::constant(int(1))).unwrap();
        assert_eq!(f, exact(int(0), &[int(1), int(1), int(1), int(1)]));
        let sq = sample_closure(int(0), 3, |k| int((k * k) as i64)).unwrap();
        assert_eq!(sq.values(), &[int(0), int(1), int(4)]);
        assert!(sample_closure(int(0), 0, |_| int(0)).is_err());
    }

    #[test]
    fn differences() {
        let ones = exact(int(0), &vec![int(1); 4]);
        assert_eq!(delta_n(&ones, 1).unwrap(), exact(int(0), &vec![int(0); 3]));
        let sq = exact(int(0), &[int(0), int(1), int(4), int(9)]);
        assert_eq!(delta_n(&sq, 2).unwrap(), exact(int(0), &[int(2), int(2)]));
        assert_eq!(delta_n(&sq, 0).unwrap(), sq);
        assert_eq!(
            delta_n(&sq, 4),
            Err(Error::WindowTooShort {
                needed: 5,
                available: 4
            })
        );
    }

    #[test]
    fn difference_of_half_power() {
        // Δ[(s)^(1/2)](t) = (1/2) t^(-1/2) on t = 1/2, 3/2
        let f = sample_falling_power(&int(0), &rat(1, 2), 3).unwrap();
        let d = delta_n(&f, 1).unwrap();
        for (k, v) in d.values().iter().enumerate() {
            let t = d.point(k);
            let closed = falling(&t, &rat(-1, 2)).to_polynomial().unwrap().scale(&rat(1, 2));
            assert_eq!(v, &closed);
        }
    }

    #[test]
    fn grid_bookkeeping() {
        let f = exact(rat(-1, 3), &[int(4), int(5), int(6)]);
        for k in 0..3 {
            let t = f.point(k);
            assert_eq!(f.grid().index_of(&t), Some(k));
            assert_eq!(f.at(&t), f.get(k));
        }
        assert_eq!(f.grid().index_of(&rat(-4, 3)), None);
        assert_eq!(f.grid().index_of(&rat(0, 1)), None);
    }

    #[test]
    fn json_round_trip() {
        let f = sample_falling_power(&rat(1, 4), &rat(1, 3), 3).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.starts_with("{\"origin\":\"7/12\",\"values\":[\"1/3*G(1/3)^1\""));
        let back: Exact = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Exact>(r#"{"origin":"0","values":[]}"#).is_err());
    }

    #[test]
    fn float_path() {
        let f = sample_closure(0.0_f64, 4, |k| (k * k) as f64).unwrap();
        assert_eq!(delta_n(&f, 2).unwrap().values(), &[2.0, 2.0]);
        assert_eq!(delta_n_binomial(&f, 2).unwrap().values(), &[2.0, 2.0]);
    }

    fn window() -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d)), 1..=12)
    }

    proptest! {
        #[test]
        fn iterated_equals_binomial(vals in window(), n in 0usize..12) {
            let f = exact(rat(1, 2), &vals);
            prop_assume!(n < f.len());
            prop_assert_eq!(delta_n(&f, n).unwrap(), delta_n_binomial(&f, n).unwrap());
        }

        #[test]
        fn composition(vals in window(), m in 0usize..6, n in 0usize..6) {
            let f = exact(int(0), &vals);
            prop_assume!(m + n < f.len());
            let once = delta_n(&f, m + n).unwrap();
            let twice = delta_n(&delta_n(&f, m).unwrap(), n).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn linear(a in window(), b in window(), c in (-5i64..=5, 1i64..=4), n in 0usize..6) {
            let len = a.len().min(b.len());
            prop_assume!(n < len);
            let c = rat(c.0, c.1);
            let f = exact(int(0), &a[..len]);
            let g = exact(int(0), &b[..len]);
            let comb = f.zip_with(&g, |x, y| &x.scale(&c) + y).unwrap();
            let lhs = delta_n(&comb, n).unwrap();
            let rhs = delta_n(&f, n).unwrap()
                .zip_with(&delta_n(&g, n).unwrap(), |x, y| &x.scale(&c) + y)
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
