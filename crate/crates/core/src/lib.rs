//! Graph symmetry toolkit: automorphism group orbits ("transitivity
//! partitions"), the transitivity number of a graph, graph products, and
//! vertex invariants evaluated once per orbit.
//!
//! ```
//! use orbitkit::graph::make_path;
//! use orbitkit::orbits::{orbits, transitivity_number};
//!
//! let p5 = make_path(5).unwrap();
//! assert_eq!(transitivity_number(&p5).unwrap(), 3);
//! assert_eq!(orbits(&p5).unwrap().orbits(), &[vec![0, 4], vec![1, 3], vec![2]]);
//! ```

pub mod aut;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod orbits;
pub mod products;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
