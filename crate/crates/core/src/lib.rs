//! Decide entailment and satisfiability between RDF graphs under the simple,
//! RDF, RDFS and extensional RDFS regimes, optionally with datatypes, by
//! embedding graphs and regime axiomatizations into Horn frame logic.

pub mod axioms;
pub mod embedding;
pub mod datatype;
pub mod dllite;
pub mod engine;
pub mod io;
pub mod error;
pub mod hardness;
pub mod logic;
pub mod model;
pub mod ns;
pub mod reasoner;

pub use error::{Error, Result};
