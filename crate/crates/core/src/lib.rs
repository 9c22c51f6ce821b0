//! Exact computation of the Euler characteristic `χ(𝒴_{w,g}) = X_ρ^λ` of
//! conjugation-twisted Deligne–Lusztig varieties for `GL_n`.
//!
//! `X_ρ^λ` is computed five ways: enumeration of `P(ρ,λ)`
//! ([`combinatorics::x_count`]), the peeling recursion
//! ([`combinatorics::x_recursive`]), the monomial coefficient of `p_ρ`
//! ([`symfunc::scalar_product_ph`]), the induced character by coset
//! counting ([`combinatorics::induced_trivial_value`]), and Green polynomials
//! at `q = 1` ([`green`]). Young's rule against the character table
//! ([`characters`]) gives a sixth route.
//! The [`pipeline`] checks these against brute-force point counts of
//! `𝒴_{w,g}` over finite fields ([`flags`]), interpolated in the field size
//! and evaluated at 1.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod field;
pub mod flags;
pub mod green;
pub mod pipeline;
pub mod symfunc;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
