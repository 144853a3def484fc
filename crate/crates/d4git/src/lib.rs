//! Exact verification of the variation-of-GIT construction for the D4
//! Kleinian singularity `C²/Q`, `Q` the quaternion group.
//!
//! The moduli problem lives on `H × V`, where
//! `H = {(α₁, α₂, α₃, β, B)}` and `V = C²`, acted on by
//! `G = (C*)³ × GL₂`. The subvariety `Z ⊂ H` is cut out by three matrix
//! equations (see [`equations`]). For the character `ϑ = (1,1,1,1)` the GIT
//! quotient of `Z × V` is the minimal resolution of `C²/Q`, for `−ϑ` it is the
//! orbifold `[C²/Q]`. Everything here is exact: scalars live in `Q(i)` or in
//! a tower of quadratic extensions over it.

pub mod charts;
pub mod equations;
pub mod error;
pub mod field;
pub mod git;
pub mod json;
pub mod linalg;
pub mod orbit;
pub mod poly;
pub mod quiver;
pub mod ring;
pub mod sample;
pub mod stability;
pub mod suite;
pub mod tannakian;

pub use error::{Error, Result};
pub use field::{sc, Field, Scalar};
