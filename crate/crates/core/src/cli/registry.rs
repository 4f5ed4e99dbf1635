//! Registered identity verifiers and their parameter schemas.

use rand_chacha::ChaCha8Rng;

use super::source::{constant_window, random_values};
use crate::error::Error;
use crate::fracops::FracOrder;
use crate::identities::{
    alt_sum_lemma_check, binom_falling_check, binom_poch_check, corollary_verify,
    gamma_sum_check, leibniz_verify, mr_ae_check, nabla_zero_check, power_rule_verify,
    prop_form1_check, saalschutz_verify, Params, VerificationReport,
};
use crate::special::{falling_poch_bridge_check, index_law_check};
use crate::{Rational, Scalar};

/// Parameter schema of one verifier.
#[derive(Debug)]
pub struct IdentitySpec {
    pub name: &'static str,
    /// Each group must be given exactly one of its alternatives.
    pub required: &'static [&'static [&'static str]],
    /// Verifiers taking `trial` draw fresh random windows per point.
    pub optional: &'static [&'static str],
}

impl IdentitySpec {
    fn accepts(&self, name: &str) -> bool {
        self.optional.contains(&name) || self.required.iter().any(|g| g.contains(&name))
    }

    /// Checks that the parameter names form a valid call.
    pub fn check_names<'a>(&self, names: impl IntoIterator<Item = &'a str> + Clone) -> Result<(), String> {
        if let Some(bad) = names.clone().into_iter().find(|n| !self.accepts(n)) {
            return Err(format!("parameter '{bad}' is not used by identity '{}'", self.name));
        }
        for group in self.required {
            let given = names.clone().into_iter().filter(|n| group.contains(n)).count();
            match given {
                1 => {}
                0 => return Err(format!("identity '{}' needs parameter {}", self.name, group.join(" or "))),
                _ => return Err(format!("identity '{}' takes only one of {}", self.name, group.join(" or "))),
            }
        }
        Ok(())
    }
}

/// All verifiers reachable from `verify`, in suite order.
pub const IDENTITIES: &[IdentitySpec] = &[
    IdentitySpec { name: "nabla-zero", required: &[&["a"], &["p"], &["alpha", "m"], &["t_index"]], optional: &[] },
    IdentitySpec { name: "power-rule", required: &[&["a"], &["mu"], &["nu"], &["n_max"]], optional: &[] },
    IdentitySpec { name: "corollary", required: &[&["a"], &["mu"], &["nu"], &["n_max"]], optional: &[] },
    IdentitySpec { name: "mr-ae", required: &[&["a"], &["mu"]], optional: &["trial"] },
    IdentitySpec { name: "leibniz", required: &[&["a"], &["alpha"]], optional: &["t_index", "trial"] },
    IdentitySpec { name: "binom-falling", required: &[&["x"], &["y"], &["n"]], optional: &[] },
    IdentitySpec { name: "binom-poch", required: &[&["x"], &["y"], &["n"]], optional: &[] },
    IdentitySpec { name: "alt-sum", required: &[&["a"], &["alpha"], &["k"], &["t_index"]], optional: &["trial"] },
    IdentitySpec { name: "form1", required: &[&["alpha"], &["beta"], &["gamma"], &["N"]], optional: &[] },
    IdentitySpec { name: "saalschutz", required: &[&["a"], &["b"], &["c"], &["m"]], optional: &[] },
    IdentitySpec { name: "gamma-sum", required: &[&["mu"], &["nu", "sum"], &["n"]], optional: &[] },
    IdentitySpec { name: "falling-poch-bridge", required: &[&["t"], &["alpha"]], optional: &[] },
    IdentitySpec { name: "index-law", required: &[&["t"], &["alpha"], &["beta"]], optional: &[] },
];

pub fn lookup(name: &str) -> Option<&'static IdentitySpec> {
    IDENTITIES.iter().find(|s| s.name == name)
}

/// Why a point produced no reports.
#[derive(Debug)]
pub enum PointError {
    /// The point is outside the verifier's domain; reported, not fatal.
    Excluded(String),
    /// The sweep itself is misconfigured.
    Fatal(String),
}

impl From<Error> for PointError {
    fn from(e: Error) -> Self {
        match e {
            Error::WindowTooShort { .. } => Self::Fatal(format!("{e}; increase max_window")),
            other => Self::Excluded(other.to_string()),
        }
    }
}

/// Everything a verifier needs besides its parameters.
pub struct PointContext {
    pub max_window: usize,
    pub force: bool,
    pub rng: ChaCha8Rng,
}

fn get<'a>(p: &'a Params, name: &str) -> &'a Rational {
    p.get(name).expect("parameter names are checked before evaluation")
}

fn count(p: &Params, name: &str) -> Result<usize, PointError> {
    let q = get(p, name);
    q.as_integer()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| PointError::Excluded(format!("{name} must be a nonnegative integer")))
}

fn order(q: &Rational) -> Result<FracOrder, PointError> {
    Ok(FracOrder::new(q.clone())?)
}

fn window(ctx: &mut PointContext, a: &Rational) -> Result<super::source::ExactFn, PointError> {
    Ok(constant_window(a.clone(), random_values(&mut ctx.rng, ctx.max_window))?)
}

/// Runs one verifier at one parameter point. Names must already satisfy
/// [`IdentitySpec::check_names`].
pub fn evaluate(
    spec: &IdentitySpec,
    p: &Params,
    ctx: &mut PointContext,
) -> Result<Vec<VerificationReport>, PointError> {
    let one = |r: VerificationReport| Ok(vec![r]);
    match spec.name {
        "nabla-zero" => {
            let pp = get(p, "p");
            let alpha = match p.get("m") {
                Some(m) => pp + m,
                None => get(p, "alpha").clone(),
            };
            one(nabla_zero_check(get(p, "a"), pp, &alpha, count(p, "t_index")?))
        }
        "power-rule" => Ok(power_rule_verify(get(p, "a"), get(p, "mu"), &order(get(p, "nu"))?, count(p, "n_max")?)),
        "corollary" => Ok(corollary_verify(get(p, "a"), get(p, "mu"), &order(get(p, "nu"))?, count(p, "n_max")?)),
        "mr-ae" => {
            let f = window(ctx, get(p, "a"))?;
            Ok(mr_ae_check(&f, get(p, "mu"))?)
        }
        "leibniz" => {
            let alpha = order(get(p, "alpha"))?;
            let a = get(p, "a");
            let f = window(ctx, a)?;
            let g = window(ctx, a)?;
            let ts = match p.get("t_index") {
                Some(_) => vec![count(p, "t_index")?],
                None => (0..ctx.max_window).collect(),
            };
            ts.into_iter()
                .map(|t| Ok(leibniz_verify(&f, &g, &alpha, t)?))
                .collect()
        }
        "binom-falling" => one(binom_falling_check(get(p, "x"), get(p, "y"), count(p, "n")?)),
        "binom-poch" => one(binom_poch_check(get(p, "x"), get(p, "y"), count(p, "n")?)),
        "alt-sum" => {
            let g = window(ctx, get(p, "a"))?;
            one(alt_sum_lemma_check(&g, get(p, "alpha"), count(p, "k")?, count(p, "t_index")?)?)
        }
        "form1" => one(prop_form1_check(
            &order(get(p, "alpha"))?,
            get(p, "beta"),
            get(p, "gamma"),
            count(p, "N")?,
        )),
        "saalschutz" => one(saalschutz_verify(get(p, "a"), get(p, "b"), get(p, "c"), count(p, "m")?, ctx.force)),
        "gamma-sum" => {
            let mu = get(p, "mu");
            let nu = match p.get("sum") {
                Some(s) => s - mu,
                None => get(p, "nu").clone(),
            };
            let n = get(p, "n")
                .as_integer()
                .ok_or_else(|| PointError::Excluded("n must be an integer".into()))?;
            one(gamma_sum_check(mu, &nu, n))
        }
        "falling-poch-bridge" => one(falling_poch_bridge_check(get(p, "t"), get(p, "alpha"))),
        "index-law" => one(index_law_check(get(p, "t"), get(p, "alpha"), get(p, "beta"))),
        other => unreachable!("identity '{other}' is registered without an evaluator"),
    }
}
