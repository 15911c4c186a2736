//! Exact arithmetic: rationals, polynomials, real algebraic numbers,
//! number fields and affine linear systems over the rationals.

pub mod affine;
pub mod algebraic;
mod error;
pub mod factor;
pub mod field;
pub mod interval;
pub mod linalg;
pub mod multi;
pub mod poly;
mod rat;

pub use affine::{solve_affine, solve_affine_with, AffineForm, AffineSolution, ParamSolution};
pub use algebraic::{isolate_roots, AlgebraicNumber};
pub use error::ExactError;
pub use field::{NFElem, NumberField};
pub use interval::Interval;
pub use multi::{FieldProduct, PAElem, ProductAlgebra};
pub use poly::Poly;
pub use rat::{rat, Rat};
