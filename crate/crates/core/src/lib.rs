//! Extended h-vectors of convex polytopes generated from the point by the
//! cone (pyramid), cylinder (prism) and bipyramid operators.
//!
//! The crate is generic over an exact coefficient type (see [`Coeff`]);
//! [`IntHVector`] and [`RatHVector`] are the two instantiations used in
//! practice.

pub mod engine;
pub mod error;
pub mod flag;
pub mod golden;
pub mod hvector;
pub mod lattice;
pub mod linear;
pub mod links;
mod notation;
pub mod poly;
pub mod scalar;
pub mod symbol;
pub mod terms;
pub mod verify;
pub mod word;

pub use error::{AlgebraError, EngineError, Error, LatticeError, LinearError, ParseError};
pub use flag::FlagVector;
pub use hvector::HVector;
pub use lattice::FaceLattice;
pub use poly::BiGradedPoly;
pub use scalar::{Coeff, Field};
pub use symbol::{Flavor, Symbol, SymbolWord};
pub use word::{GeneratorWord, Op};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Machine-integer coefficients (overflow panics).
pub type Int = i64;
/// Arbitrary-precision rational coefficients.
pub type Rational = BigRational;

pub type IntPoly = BiGradedPoly<Int>;
pub type RatPoly = BiGradedPoly<Rational>;
pub type IntHVector = HVector<Int>;
pub type RatHVector = HVector<Rational>;
