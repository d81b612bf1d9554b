//! Exact symbolic workbench for quintic del Pezzo varieties.
//!
//! Everything here is computed over the rationals (or explicit finite
//! extension towers of them) with zero-tolerance arithmetic: group-action
//! invariance, open-orbit ranks, fixed loci, projection identities,
//! singular loci and the classification of trinodal threefolds all come
//! with re-verifiable certificates rather than floating-point evidence.
//!
//! The crate is organised around the variety constructions:
//!
//! * [`algebra`] — arbitrary-precision rationals, sparse multivariate
//!   polynomials, exact linear algebra, number-field towers and rational
//!   univariate factorization.
//! * [`grassmannian`] — the Grassmannian G(2,5) in Plücker coordinates,
//!   skew forms, Schubert subvarieties and smoothness criteria for its
//!   linear sections.
//! * [`sections`] — the sections Z⟨s⟩, W_L and X₃(β) with their explicit
//!   equation systems and exact smooth/singular point analysis.
//! * [`actions`] — the unipotent representations ρ₆, ρ₅, ρ₄, ρ̄₅, the
//!   induced coordinate actions and the verification suite for them.
//! * [`projections`] — projections from σ₃,₀-solids and σ₂,₂-planes,
//!   their image varieties and quadric-system inverses.
//! * [`classifier`] — PGL₂(ℚ)-equivalence of binary cubics with explicit
//!   Möbius certificates, and the induced classification of X₃(β).
//! * [`suite`] / [`report`] — the named check registry and deterministic
//!   report emission used by the CLI.

pub mod algebra;
pub mod grassmannian;
pub mod sections;
pub mod actions;
pub mod projections;
pub mod classifier;
pub mod suite;
pub mod report;

pub use algebra::poly::{MultiPoly, Vars};
pub use algebra::rational::Rat;
