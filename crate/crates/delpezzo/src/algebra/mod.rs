//! Exact arithmetic foundation: rationals, sparse multivariate polynomials,
//! exact linear algebra, univariate factorization over ℚ and number-field
//! towers.

pub mod rational;
pub mod poly;
pub mod linalg;
pub mod upoly;
pub mod modp;
pub mod factor;
pub mod numfield;
pub mod splitting;
pub mod membership;

pub use factor::factor_rational;
pub use membership::{membership_certificate, Membership};
pub use numfield::{AlgebraicPoint, NfElem, NumberField};
pub use poly::{jacobian, MultiPoly, Vars};
pub use rational::Rat;
pub use splitting::splitting_field;
