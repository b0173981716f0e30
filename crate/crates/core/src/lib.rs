//! Exact-arithmetic conformal superalgebras built from matrix algebras.

pub mod axioms;
pub mod carrier;
pub mod classical;
pub mod corpus;
pub mod element;
pub mod engine;
pub mod error;
pub mod exec;
pub mod families;
pub mod key;
pub mod laurent;
pub mod linalg;
pub mod lincomb;
pub mod oracle;
pub mod probes;
pub mod scalar;

pub use carrier::Conformal;
pub use element::Element;
pub use error::{Error, Result};
pub use key::{Ambient, BasisKey, Grading};
pub use laurent::{Laurent, Vector};
pub use scalar::{HalfInt, Scalar, WeightValue};
