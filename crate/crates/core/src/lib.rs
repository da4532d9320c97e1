//! Basis graphs of matroids and Hamiltonian cycles through their edges.
//!
//! Builds basis graphs for graphic, generalized Catalan, and uniform
//! matroids, constructs good 4-cycles, glues Hamiltonian cycles of minors
//! into Hamiltonian cycles of the whole graph, and checks every lower bound
//! against exact counts on small instances.

pub mod error;
pub mod graphic;
pub mod harness;
pub mod hamiltonian;
pub mod bounds;
pub mod dot;
pub mod latticepath;
pub mod matroid;
pub mod witness;
pub mod oracle;
pub mod uniform;

pub use error::{Error, Result};
pub use matroid::{
    glue_hamiltonian, good_cycles_bruteforce, split_by_element, Basis, BasisFamily, BasisGraph,
    EdgeCycle, Element, ElementSplit, GoodCycle, Side,
};
