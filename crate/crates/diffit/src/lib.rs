pub mod error;
pub mod rng;
pub mod scalar;

pub use error::{DiffitError, Result};
pub use rng::Rng;
pub use scalar::Scalar;
