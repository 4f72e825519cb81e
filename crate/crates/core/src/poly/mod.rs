//! Polynomial rings over F_p: monomials, orders, sparse polynomials, matrices.

mod matrix;
mod monomial;
mod polynomial;
mod ring;

pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MAX_EXPONENT};
pub use polynomial::Polynomial;
pub use ring::{MonomialOrder, Ring};
