pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod constructions;
pub mod domination;
pub mod error;
pub mod exact;
pub mod sampling;

pub use error::{Error, Result};
