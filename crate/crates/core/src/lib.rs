pub mod algebra;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod opext;
pub mod oracle;
pub mod rep;
pub mod tautilt;

pub use error::{Error, Result};
