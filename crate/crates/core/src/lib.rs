//! Multisegment combinatorics for irreducible representations of `GL_n`
//! over a p-adic field: Langlands and Zelevinsky parameters, socles of
//! products with a cuspidal, the Zelevinsky involution, Jacquet
//! restrictions of standard products, and parameter transport under the
//! type II theta correspondence.

pub mod corpus;
pub mod duality;
pub mod error;
pub mod grammar;
pub mod matching;
pub mod multisegment;
pub mod point;
pub mod properties;
pub mod ring;
pub mod segment;
pub mod socle;
pub mod theta;

pub use error::{Error, Result};
pub use multisegment::{range_sort, IrreducibleParam, Multisegment, Param};
pub use point::{HalfInt, Line, Point};
pub use segment::Segment;
