//! Distance-regular graph parameters: intersection arrays, spectra, Krein
//! parameters, derived graphs, triple intersection numbers, feasibility
//! checks and nonexistence certificates.

pub mod array;
pub mod array3d;
pub mod checks;
pub mod classical;
pub mod derived;
mod error;
pub mod input;
pub mod partition;
pub mod proofs;
pub mod spectrum;
pub mod triples;

pub use array::IntersectionArray;
pub use array3d::Array3D;
pub use classical::{ClassicalParams, GenPolyParams};
pub use error::{DrgError, Result};
pub use input::parse_input;
pub use spectrum::{KreinTensor, Spectrum};
