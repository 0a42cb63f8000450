//! Balanced simplicial complexes, Stanley–Reisner rings and the balanced
//! lower bound inequalities, with an exact verification battery.

pub mod battery;
pub mod cli;
pub mod colored;
pub mod complex;
pub mod error;
pub mod face;
pub mod generators;
pub mod homology;
pub mod inequalities;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod report;
pub mod sr;
pub mod util;

pub use colored::{ColoredComplex, Coloring, FlagVector};
pub use complex::{FVector, HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{ColorSet, Face};
