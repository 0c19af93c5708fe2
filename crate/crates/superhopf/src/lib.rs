//! Exact-arithmetic kernel for super-commutative Hopf super-algebras.
//!
//! The crate constructs exterior Hopf algebras, group algebras, bosonizations,
//! comodule algebras and universal envelopes of Lie super-algebras over the
//! rationals or a prime field, then computes integrals, invariants and torsor
//! verdicts by exact linear algebra. No floating point is used anywhere.

pub mod error;
pub mod matrix;
pub mod scalar;
pub mod space;
pub mod specfile;

pub mod algebra;
pub mod boson;
pub mod comodule;
pub mod graded_map;
pub mod hopf;
pub mod integral;
pub mod laurent;
pub mod lie;
pub mod monomial;
pub mod pbw;

pub use error::{Error, Result};
pub use scalar::{FieldSpec, Scalar};
pub use space::{Parity, SuperSpace};
pub use specfile::{AlgebraDoc, ActionDoc, LaurentDoc, LieDoc, SpecDocument};

pub use algebra::{AxiomCheck, SuperAlgebra, VerifyMode, VerifyReport, Witness};
pub use boson::Bosonization;
pub use comodule::{CoactionBundle, Freeness, InvariantSubalgebra, TorsorVerdict};
pub use graded_map::GradedMap;
pub use hopf::{HopfSuperAlgebra, PurelyEvenQuotient};
pub use integral::{IntegralReport, Side};
pub use laurent::{GrouplikeGradedHopf, LaurentElement, LaurentMono};
pub use lie::LieSuperAlgebra;
pub use monomial::MonomialIndex;
pub use pbw::{FrobeniusData, PbwElement, PbwMono};
pub use matrix::{AffineSolutions, LinearSystem, Mat, RowSpace};
