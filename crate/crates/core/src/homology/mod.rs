//! Graded Betti numbers (Koszul homology, with a Taylor-complex oracle for
//! monomial ideals) and local cohomology of monomial quotients.

mod betti;
mod local_cohomology;
mod simplicial;

pub use betti::{koszul_betti, monomial_betti, taylor_betti_oracle, GradedBettiTable};
pub use local_cohomology::{default_window, degree_complex, local_coh_monomial, LocalCohTable};
pub use simplicial::SimplicialComplex;
