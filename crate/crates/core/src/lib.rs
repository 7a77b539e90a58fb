//! Exact computations for the rank-3 universal Coxeter group: roots, the
//! Cayley tree and its faces, biclosed sets, snakes and weak separation.

pub mod biclosed;
pub mod checks;
pub mod complex;
pub mod descriptor;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod render;
pub mod roots;
pub mod sampling;
pub mod separation;
pub mod snakes;
pub mod truncation;
pub mod word;

pub use error::Error;
pub use geometry::{AffLine, AffinePoint, Arc, DiskClass, IdealPoint};
pub use linalg::{act, IVec3, Mat3, QVec3, Vec3};
pub use roots::{enumerate_roots, inversion_set, positive_root_of_edge, Edge, EnumeratedRoot, Root, RootIndex};
pub use word::{Generator, Word};
