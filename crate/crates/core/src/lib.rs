//! Exact structure-constant workbench for triple systems, structurable
//! algebras and their graded Lie (super)algebras.

pub mod bridge;
pub mod catalog;
pub mod chevalley;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod format;
pub mod lie;
pub mod report;
pub mod structurable;
pub mod sweep;
pub mod triple;
pub mod workbench;

pub use error::Error;
pub use exact::{LinearOperator, OperatorSpan, Scalar, Subspace, Vector};
pub use report::{Check, Report, Witness};
