//! Exact computations with the planar Galilean conformal algebra `G`, its
//! rank-one free modules, and tensor products of pairs of them.
//!
//! Everything is generic over a [`Field`]; the aliases at the crate root fix
//! the scalar to Gaussian rationals, which is what the command-line tool uses.

pub mod analysis;
pub mod closure;
pub mod echelon;
pub mod error;
pub mod field;
pub mod freemod;
pub mod gaussian;
pub mod gca;
pub mod monomial;
pub mod poly;
pub mod tensor;
pub mod vector;

pub use error::{Error, Result};
pub use field::{binom, Field};
pub use freemod::{Family, Module, ModuleSpec};
pub use gaussian::GaussianRational;
pub use gca::{bracket, bracket_lin, AlgElement, GenRef, Kind, SubalgebraTag};
pub use monomial::Monomial;
pub use tensor::{deg, order_gt, DegTuple, TensorShape, TensorSpec};

pub use num_rational::BigRational;

/// Default scalar field.
pub type Scalar = GaussianRational;
pub type Vector = vector::Vector<Scalar>;
pub type Poly = poly::Poly<Scalar>;
pub type Spec = ModuleSpec<Scalar>;
pub type Tensor = TensorSpec<Scalar>;
pub type Basis = closure::EchelonBasis<Scalar>;
pub type ClosureReport = closure::ClosureReport<Scalar>;

/// Real-rational variants.
pub type RatVector = vector::Vector<BigRational>;
pub type RatSpec = ModuleSpec<BigRational>;
pub type RatTensor = TensorSpec<BigRational>;
