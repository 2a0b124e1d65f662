//! Exhaustive and randomized checks of the extremality statements, with
//! replayable JSON reports.

mod checks;
mod enumerate;
mod report;
mod sampling;

pub use checks::{
    epsilon_d, verify_betti_distraction_invariance, verify_betti_extremal, verify_codistra_h0, verify_coh_extremal,
    verify_distraction_hf, verify_epsilon_d_extremal, verify_macaulay_lex, BaseRing, SampleSpec,
};
pub use enumerate::{enumerate_monomial_ideals_modulo, DEFAULT_BUDGET};
pub use report::{CaseOutcome, VerificationReport};
pub use sampling::{case_rng, random_form, random_monomial, random_monomial_ideal, DEFAULT_SEED};
