//! Interleaved adjoints of digraphs and the machinery to check their
//! colouring and duality properties on small instances.
//!
//! * [`digraph`]: the dense digraph type, homomorphism validation, JSON and
//!   DOT formats.
//! * [`constructions`]: tournaments, paths, circular cliques, arc-graphs,
//!   interleaved adjoints and their left adjoints, products, path families
//!   and tree duals.
//! * [`hom`]: arc consistency, backtracking search and a brute-force oracle.
//! * [`chromatic`]: exact chromatic numbers with clique/DSATUR bounds.
//! * [`lab`]: one verifier per structural claim, the steep-path search and
//!   the acceptance suite.

pub mod chromatic;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod hom;
pub mod lab;

pub use digraph::{validate_hom, Digraph, Hom, Vertex};
pub use error::{Error, Result};
