//! Hodge numbers of quasi-smooth and nondegenerate complete intersections in
//! complete simplicial toric varieties, computed exactly through the Cayley
//! trick and Jacobian or colon rings.

pub mod abelian;
pub mod cayley;
pub mod cli;
pub mod error;
pub mod fan;
pub mod groebner;
pub mod hodge;
pub mod ideal;
pub mod linalg;
pub mod lp;
pub mod problem;
pub mod ring;
pub mod smoothness;

pub use error::{Error, Result};
