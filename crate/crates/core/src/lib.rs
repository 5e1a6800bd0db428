//! Free graded Lie algebras over exact scalars, with product and diagonal
//! models of 2-cones built from their presentations.

pub mod algebra;
pub mod compare;
pub mod dgl;
pub mod diagonal;
pub mod error;
pub mod generators;
pub mod io;
pub mod magma;
pub mod product;
pub mod report;
pub mod reproduce;
pub mod sampling;
pub mod scalar;

pub use algebra::{BasisKey, BracketTree, LieElement, LieExpr, TensorElement};
pub use error::{Error, Result};
pub use generators::{Gen, Generator, GeneratorSet, Origin};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Lie = LieElement<Rational>;
pub type Tensor = TensorElement<Rational>;
pub type Deriv = dgl::Derivation<Rational>;
pub type Dgl = dgl::DglPresentation<Rational>;
pub type Magma = magma::MagmaElement<Rational>;
pub type Product = product::ProductModel<Rational>;
pub type Diagonal = diagonal::DiagonalModel<Rational>;
