//! Closed forms and verifiers for the identities of discrete fractional
//! calculus, the terminating ₃F₂ evaluator and the Saalschütz check.

pub mod agreement;
pub mod binomial;
pub mod hypergeometric;
pub mod leibniz;
pub mod nabla;
pub mod power;
pub mod report;

pub use agreement::mr_ae_check;
pub use binomial::{alt_sum_lemma_check, binom_falling_check, binom_poch_check};
pub use hypergeometric::{
    hyp3f2_terminating, saalschutz_hypothesis_violation, saalschutz_lhs, saalschutz_verify,
};
pub use leibniz::{leibniz_verify, prop_form1_check};
pub use nabla::nabla_zero_check;
pub use power::{
    corollary_closed, corollary_verify, gamma_sum_check, power_rule_closed, power_rule_verify,
};

pub use report::{params, status_counts, Params, Status, VerificationReport, FLOAT_REL_TOL};
