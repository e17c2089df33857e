//! Exact computational invariant theory.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`]: exact ground fields (rationals, `GF(p)`, simple extensions);
//! * [`poly`]: sparse multivariate polynomials, monomial orders, power series;
//! * [`groebner`]: Buchberger's algorithm (optionally degree-truncated),
//!   normal forms, elimination and membership tests;
//! * [`group`]: finite matrix groups, Reynolds operator, Molien series;
//! * [`invariants`]: King's algorithm, separating sets, primary invariants;
//! * [`algebraic`]: Derksen ideals and invariants of algebraic groups;
//! * [`input`]: the JSON group-specification format.

pub mod algebraic;
pub mod error;
pub mod field;
pub mod groebner;
pub mod group;
pub mod input;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod sampling;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Scalar};
pub use groebner::GroebnerBasis;
pub use group::FiniteMatrixGroup;
pub use linalg::Matrix;
pub use poly::{BaseOrder, Monomial, MonomialOrder, Polynomial, PowerSeries, Ring, VariableContext};
