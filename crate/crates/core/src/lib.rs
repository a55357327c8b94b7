//! Incidence algebras of finite posets.
//!
//! Builds the incidence algebra of a finite poset, classifies its two-sided
//! ideals through the poset of comparable pairs, and recovers the poset (up to
//! isomorphism) from a scrambled multiplication table.

pub mod algebra;
pub mod checks;
pub mod dot;
pub mod error;
pub mod ideal;
pub mod poset;
pub mod presented;
pub mod recovery;
pub mod rng;
pub mod subspace;

/// Exact scalar field for every algebra in the crate.
pub type Rational = num_rational::BigRational;

pub use algebra::{AlgebraElement, Convention, IncidenceAlgebra, MultiplicationTable};
pub use error::{AlgebraError, IdealError, PosetError, PresentedError, RecoveryError, TableError};
pub use ideal::Ideal;
pub use poset::{GammaPoset, IntervalOrder, Pair, Poset};
pub use presented::{NormalForm, RewriteSystem, TripleConvention};
pub use recovery::AbstractIdeal;
pub use subspace::Subspace;
