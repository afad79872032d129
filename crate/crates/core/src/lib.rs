//! Exact symbolic calculus for the cohomology of the Sato Grassmannian and
//! for tautological rings of moduli spaces of curves.
//!
//! Everything is computed over the rationals with arbitrary precision; no
//! floating point appears anywhere. The main layers, bottom up:
//!
//! - [`rational`], [`poly`], [`series`]: exact coefficients, sparse graded
//!   polynomials over declared generator tables, truncated power series.
//! - [`partition`]: partitions and Maya (characteristic) sequences indexing
//!   Schubert cells of the index-`d` component of the Sato Grassmannian.
//! - [`symfunc`], [`reference`]: symmetric-function kernels (complete and
//!   elementary evaluation, Littlewood-Richardson coefficients, dual
//!   Jacobi-Trudi determinants) together with slow independent oracles used
//!   only for cross-checking.
//! - [`schubert`]: the Schur-basis model of the cohomology ring.
//! - [`gkm`]: the finite-dimensional equivariant model (moment-graph classes
//!   on Gr(l, n), divisibility checks, rotation and forgetful specializations).
//! - [`taut`]: formal tautological rings, Bernoulli numbers and polynomials,
//!   Chern character utilities, and the Grothendieck-Riemann-Roch expansion
//!   of the Poincare bundle classes.
//! - [`krichever`]: the three pullback homomorphisms induced by the Krichever
//!   construction, in ordinary and circle-equivariant form.
//! - [`verify`]: named verification suites pairing every implementation route
//!   with an independent one; the CLI and the acceptance tests both run these.

pub mod error;
pub mod gkm;
pub mod krichever;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod reference;
pub mod schubert;
pub mod series;
pub mod symfunc;
pub mod taut;
pub mod verify;

pub use error::Error;
pub use partition::{MayaSequence, Partition};
pub use poly::{GenTable, Generator, GradedPoly};
pub use rational::Rat;
pub use schubert::SchubertClass;
pub use series::PowerSeries;
