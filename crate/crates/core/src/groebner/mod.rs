//! Polynomial arithmetic over prime fields and Gröbner-basis computations
//! for homogeneous ideals.

mod buchberger;
mod field;
mod ideal;
mod polynomial;

pub use buchberger::{groebner_basis, leading_monomial, normal_form};
pub use field::PrimeField;
pub use ideal::{Ideal, LinearChange};
pub use polynomial::Polynomial;
