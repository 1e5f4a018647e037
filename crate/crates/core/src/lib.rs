pub mod affine_weyl;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod genfun;
pub mod linalg;
pub mod plane_partitions;
pub mod qalgebra;
pub mod representation;
pub mod tableaux;

pub use error::{Error, Result};
