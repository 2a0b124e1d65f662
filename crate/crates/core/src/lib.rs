pub mod cli;
pub mod distraction;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod macaulay;
pub mod monomials;
pub mod shakin;
pub mod verify;

pub use error::{Error, Result};
