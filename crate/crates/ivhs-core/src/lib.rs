//! Exact computation of Hodge numbers, Jacobian rings, symmetrizer spaces and
//! non-genericity certificates for generic hypersurfaces in complete
//! simplicial toric varieties (including weighted projective spaces) and for
//! complete intersections in projective space.
//!
//! All arithmetic is exact: big integers and rationals throughout, no
//! floating point anywhere in the decision paths.

pub mod certify;
pub mod ci;
pub mod error;
pub mod jacobian;
pub mod lattice;
pub mod linalg;
pub mod hodge;
pub mod snf;
pub mod symmetrizer;
pub mod toric;
pub mod util;

pub use error::{Error, Result};
