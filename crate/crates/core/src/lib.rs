//! Counting and construction of k-polyominoes: edge-to-edge connected,
//! interior-disjoint unions of congruent regular k-gons.
//!
//! All geometry is exact. Cell centers live in the ring of 2k-th cyclotomic
//! integers ([`exactnum::CycNum`]) and every geometric predicate reduces to a
//! sign test on a real ring element.

pub mod cli;
pub mod enumerate;
mod error;
pub mod exactnum;
pub mod formulas;
pub mod geometry;
pub mod model;

pub use error::{Error, Result};
pub use exactnum::{CycNum, Sign};
pub use geometry::{CellPlacement, PairClass};
pub use model::{CanonicalCode, GraphClass4, KPolyomino};
