//! Exact computations around Chow quotients of Grassmannians: matroid
//! decompositions of hypersimplices and their trees, secondary polytopes,
//! association of point configurations, logarithmic Gauss maps, and the
//! Schubert classes of their images.

pub mod acceptance;
pub mod combin;
pub mod configurations;
pub mod error;
pub mod exact;
pub mod grassmann;
pub mod hypersimplex;
pub mod io;
pub mod sample;
pub mod schubert;
pub mod secondary;
pub mod trees;
pub mod veronese;

pub use error::{Error, Result};
