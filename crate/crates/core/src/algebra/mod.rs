//! The free graded Lie algebra kernel.

pub mod basis;
pub mod dimension;
pub mod element;
pub mod expr;
pub mod lyndon;
pub mod tensor;

pub use basis::BasisKey;
pub use dimension::{basis_of_degree, dimension_of_degree};
pub use element::LieElement;
pub use expr::{BracketTree, LieExpr};
pub use tensor::TensorElement;
