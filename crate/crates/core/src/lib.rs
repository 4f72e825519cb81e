//! Frobenius actions on Artinian modules over F_p[x1..xd].
//!
//! The crate models an Artinian module M = ker A^t inside E^a, where E is the
//! module of inverse polynomials, equipped with a p-semilinear action
//! Theta = B^t T given by a matrix B. Questions about Theta (nilpotency, stable
//! parts, compatible submodules) are answered on the polynomial side with
//! Groebner bases and Frobenius roots, and independently by exact finite
//! enumeration inside E.

pub mod epsilon;
pub mod error;
pub mod field;
pub mod frobops;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod splitcompat;
pub mod thetamod;

pub use error::{Error, Result};
pub use groebner::{colon_ideal, ideal_intersection, preimage, GroebnerBasis, Submodule};
pub use poly::{Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring};
pub use epsilon::{InversePolyVector, TruncationWindow};
pub use frobops::{frobenius_root, hom_set, solve_semilinear, trace, DegreeBound, SemilinearProblem};
pub use splitcompat::NearSplitting;
pub use thetamod::{KChain, ThetaPresentation};
