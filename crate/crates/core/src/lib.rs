pub mod cosimplicial;
pub mod endo;
pub mod error;
pub mod free;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod operad;
pub mod parse;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use lincomb::{BasisKey, LinComb, TensorKey};
pub use perm::Perm;
pub use scalar::Rational;
