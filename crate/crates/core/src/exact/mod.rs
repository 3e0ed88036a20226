pub mod mat;
pub mod scalar;
pub mod subspace;

pub use mat::{Mat, Vector};
pub use scalar::{fmt_scalar, frac, int, parse_scalar, Scalar};
pub use subspace::{lagrangian_complement, lagrangian_complement_in, symp_orthogonal, Subspace};
