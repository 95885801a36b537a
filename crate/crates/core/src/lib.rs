//! Fuzzy rough set approximation over finite universes with crisp
//! reference sets.
//!
//! The crate provides exact membership degrees and t-norms, validation of
//! fuzzy relations as T-equivalences, the crisp and fuzzy rough
//! approximation operators, enumeration of the resulting approximation
//! lattices, and machine checks of their structure: the core/support
//! correspondence, the order isomorphism between the fuzzy family and the
//! crisp lattice over the core, the distributive regular double Stone
//! shape, the exact-set characterisation via the support relation, and the
//! alpha-cut approximation identities.
//!
//! Everything is generic over the scalar behind a membership degree (see
//! [`degree::DegreeValue`]); the aliases at the crate root fix the scalar
//! to arbitrary-precision rationals, under which every check is an exact
//! equality — there is no tolerance parameter anywhere.
//!
//! All values are immutable after construction and every operation is pure,
//! so values can be freely shared or sent between threads.

pub mod approx;
mod bits;
pub mod degree;
pub mod error;
pub mod exactness;
pub mod lattice;
pub mod relation;
pub mod set;
pub mod tnorm;
pub mod universe;

pub use error::{Error, Result};
pub use relation::{CrispRelation, Partition};
pub use set::CrispSet;
pub use tnorm::TNorm;
pub use universe::Universe;

/// The canonical exact scalar backing membership degrees.
pub type Rational = num_rational::BigRational;

/// A membership degree over the canonical scalar.
pub type Degree = degree::Degree<Rational>;
/// A fuzzy set over the canonical scalar.
pub type FuzzySet = set::FuzzySet<Rational>;
/// A fuzzy relation over the canonical scalar.
pub type FuzzyRelation = relation::FuzzyRelation<Rational>;
/// A validation report over the canonical scalar.
pub type ValidationReport = relation::ValidationReport<Rational>;
/// A pair of fuzzy approximations over the canonical scalar.
pub type FuzzyRoughPair = approx::FuzzyRoughPair<Rational>;
/// The enumerated lattice of fuzzy approximation pairs.
pub type FuzzyRoughLattice = lattice::RoughLattice<approx::FuzzyRoughPair<Rational>>;
/// The enumerated lattice of crisp approximation pairs.
pub type CrispRoughLattice = lattice::RoughLattice<approx::RoughPair>;
