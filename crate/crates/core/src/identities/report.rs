use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::parse_rational;
use crate::{GammaPolynomial, Rational};

/// Relative tolerance of the floating fallback: a nonzero formal difference
/// within `FLOAT_REL_TOL · (1 + max(|lhs|, |rhs|))` is reported as
/// [`Status::FloatOnly`].
pub const FLOAT_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    FloatOnly,
    Mismatch,
    DomainExcluded,
    Pole,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Exact,
        Status::FloatOnly,
        Status::Mismatch,
        Status::DomainExcluded,
        Status::Pole,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::FloatOnly => "float_only",
            Status::Mismatch => "mismatch",
            Status::DomainExcluded => "domain_excluded",
            Status::Pole => "pole",
        }
    }

    /// Mismatches and float-only agreements count as verification failures.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Mismatch | Status::FloatOnly)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type Params = BTreeMap<String, Rational>;

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<'a>(pairs: impl IntoIterator<Item = (&'a str, Rational)>) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "identity")]
    pub identity_name: String,
    #[serde(serialize_with = "ser_params", deserialize_with = "de_params")]
    pub params: Params,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub abs_float_gap: Option<f64>,
    /// Name of the violated precondition, for `domain_excluded`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerificationReport {
    /// Exact comparison with the floating fallback.
    pub fn compare(
        name: &str,
        params: Params,
        lhs: &GammaPolynomial,
        rhs: &GammaPolynomial,
    ) -> Self {
        let (lf, rf) = (lhs.to_float(), rhs.to_float());
        let diff = lhs - rhs;
        let status = if diff.is_empty() {
            Status::Exact
        } else if diff.to_float().abs() <= FLOAT_REL_TOL * (1.0 + lf.abs().max(rf.abs())) {
            Status::FloatOnly
        } else {
            Status::Mismatch
        };
        Self {
            identity_name: name.to_string(),
            params,
            status,
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            abs_float_gap: Some((lf - rf).abs()),
            reason: None,
        }
    }

    pub fn compare_rational(name: &str, params: Params, lhs: &Rational, rhs: &Rational) -> Self {
        Self::compare(
            name,
            params,
            &GammaPolynomial::constant(lhs.clone()),
            &GammaPolynomial::constant(rhs.clone()),
        )
    }

    pub fn excluded(name: &str, params: Params, reason: impl Into<String>) -> Self {
        Self {
            identity_name: name.to_string(),
            params,
            status: Status::DomainExcluded,
            lhs: None,
            rhs: None,
            abs_float_gap: None,
            reason: Some(reason.into()),
        }
    }

    /// Domain exclusion that still records the values found at the boundary.
    pub fn excluded_with_values(
        name: &str,
        params: Params,
        reason: impl Into<String>,
        lhs: &GammaPolynomial,
        rhs: &GammaPolynomial,
    ) -> Self {
        Self {
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            abs_float_gap: Some((lhs.to_float() - rhs.to_float()).abs()),
            ..Self::excluded(name, params, reason)
        }
    }

    pub fn pole(name: &str, params: Params, lhs: String, rhs: String) -> Self {
        Self {
            identity_name: name.to_string(),
            params,
            status: Status::Pole,
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_float_gap: None,
            reason: None,
        }
    }

    pub fn mismatch_text(name: &str, params: Params, lhs: String, rhs: String) -> Self {
        Self {
            status: Status::Mismatch,
            ..Self::pole(name, params, lhs, rhs)
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// Compact `name=value;name=value` rendering of the parameters.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn ser_params<S: Serializer>(params: &Params, s: S) -> Result<S::Ok, S::Error> {
    let rendered: BTreeMap<&str, String> =
        params.iter().map(|(k, v)| (k.as_str(), v.to_string())).collect();
    rendered.serialize(s)
}

fn de_params<'de, D: Deserializer<'de>>(d: D) -> Result<Params, D::Error> {
    let raw = BTreeMap::<String, String>::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| {
            parse_rational(&v)
                .map(|q| (k, q))
                .map_err(serde::de::Error::custom)
        })
        .collect()
}

/// Number of reports per status, in [`Status::ALL`] order.
pub fn status_counts<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> BTreeMap<Status, usize> {
    let mut counts: BTreeMap<Status, usize> = Status::ALL.iter().map(|s| (*s, 0)).collect();
    for r in reports {
        *counts.entry(r.status).or_default() += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gamma_of, int, rat};

    #[test]
    fn exact_iff_zero_difference() {
        let a: GammaPolynomial = gamma_of(&rat(5, 2)).unwrap().into();
        let b = GammaPolynomial::from(gamma_of(&rat(1, 2)).unwrap()).scale(&rat(3, 4));
        let r = VerificationReport::compare("t", params([("x", int(1))]), &a, &b);
        assert_eq!(r.status, Status::Exact);
        assert_eq!(r.abs_float_gap, Some(0.0));

        let c = b.scale(&rat(2, 1));
        let r = VerificationReport::compare("t", Params::new(), &a, &c);
        assert_eq!(r.status, Status::Mismatch);
    }

    #[test]
    fn float_only_when_formal_difference_is_tiny() {
        // Γ(1/2)^2 vs π-ish rational: formally different, numerically close.
        let g = GammaPolynomial::from(gamma_of(&rat(1, 2)).unwrap());
        let sq = &g * &g;
        let pi_approx = GammaPolynomial::constant(Rational::new(
            3_141_592_653_589_793_i64.into(),
            1_000_000_000_000_000_i64.into(),
        ));
        let r = VerificationReport::compare("pi", Params::new(), &sq, &pi_approx);
        assert_eq!(r.status, Status::FloatOnly);
        assert!(r.status.is_failure());
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::compare_rational(
            "saalschutz",
            params([("a", rat(1, 2)), ("m", int(1))]),
            &rat(9, 8),
            &rat(9, 8),
        );
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["identity"], "saalschutz");
        assert_eq!(v["params"]["a"], "1/2");
        assert_eq!(v["status"], "exact");
        assert_eq!(v["lhs"], "9/8");
        assert_eq!(v["abs_float_gap"], 0.0);
        assert!(v.get("reason").is_none());
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);

        let e = VerificationReport::excluded("x", Params::new(), "n >= -(mu+nu)");
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["status"], "domain_excluded");
        assert_eq!(v["reason"], "n >= -(mu+nu)");
        assert!(v["lhs"].is_null());
    }
}
