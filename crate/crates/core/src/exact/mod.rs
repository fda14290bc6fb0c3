//! Exact rational linear algebra: scalars, vectors, dense operators and spans.

mod operator;
mod scalar;
mod span;
mod vector;

pub use operator::{eigenprojections, operator_inverse, poly_on_operator, LinearOperator};
pub use scalar::Scalar;
pub use span::{null_space, rref, solve_in_basis, span_basis, span_basis_in, OperatorSpan, Subspace};
pub use vector::Vector;
