//! Exact computer algebra for left-symmetric algebras, symplectic and flat
//! Lie algebras, and the para-Kähler / hyper-para-Kähler structures built
//! from them. All arithmetic is over the rationals.

pub mod algebra;
pub mod catalog;
pub mod doubling;
pub mod error;
pub mod exact;
pub mod forms;
pub mod io;
pub mod lts;
pub mod operators;
pub mod phase;
pub mod report;
pub mod smatrix;
pub mod tensor;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use exact::{Mat, Scalar, Subspace, Vector};
pub use report::{Certificate, Report};
pub use tensor::{invariance_check, Rep, Reps, Tensor};
