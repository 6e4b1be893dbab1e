//! Exact arithmetic for the Brill-Noether geometry of moduli of sheaves on a
//! polarized K3 surface of genus `g`.
//!
//! The crate has five subject-matter modules:
//!
//! * [`lattice`] — the algebraic Mukai lattice at genus `g`, its pairing,
//!   the reflections `sigma`/`tau`, tensorization by line bundles, and the
//!   divisibility obstruction for the reflection subgroup.
//! * [`strata`] — stratified dualizable collections: the upper-triangular
//!   matrix of Brill-Noether strata with dimensions, codimensions and
//!   Grassmannian fiber descriptors, plus the canonical-class ledger and
//!   enumerative counts.
//! * [`nilorbit`] — finite-dimensional Springer-resolution models over exact
//!   rationals: cotangent points of `G(t,H)`, square-zero endomorphisms,
//!   the transposition involution, idempotent deformations, and the
//!   partition/flag generalization.
//! * [`collineation`] — complete collineation chains, determinantal stratum
//!   indices, Petri forms of affine matrix families, and kernel/cokernel
//!   duality at the fiber level.
//! * [`corresp`] — correspondence-cycle numerics on small cohomology models:
//!   dimension audits, self-dual identities, and symmetric-product Euler
//!   characteristics.
//!
//! All core types are generic over the scalar via the [`scalar`] traits;
//! the aliases below fix the default instantiations (arbitrary-precision
//! integers and rationals). [`suites`] packages the verification campaigns
//! consumed by the `mdl` command-line tool.

pub mod collineation;
pub mod corresp;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod nilorbit;
pub mod scalar;
pub mod strata;
pub mod suites;

pub use error::{Error, Result};

/// Default integer scalar: arbitrary precision, no overflow semantics.
pub type Int = num_bigint::BigInt;

/// Default exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Fixed-width exact rational used by the high-volume sampling suites.
/// Entries stay in `[-3,3]` and eliminations on matrices of size at most 8
/// keep every intermediate value far below the `i128` range.
pub type FastRat = num_rational::Ratio<i128>;

/// Rational matrix at the default scalar.
pub type QMatrix = matrix::Matrix<Rat>;

/// Genus at the default integer scalar.
pub type Genus = lattice::Genus<Int>;

/// Mukai vector at the default integer scalar.
pub type MukaiVector = lattice::MukaiVector<Int>;

/// Lattice isometry at the default integer scalar.
pub type LatticeIsometry = lattice::LatticeIsometry<Int>;

/// Stratified collection at the default integer scalar.
pub type StratifiedCollection = strata::StratifiedCollection<Int>;
