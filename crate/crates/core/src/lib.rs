//! Signless Laplacian spectral extremal toolkit.
//!
//! Certified Q-index computation, the extremal graph families
//! `S_{n,k}`, `S_{n,k}^+` and `L_{t,k}`, fixed-length cycle and path
//! detection, edge and spectral bounds, structural procedures, and
//! rewiring search for `C_{2k+2}`-free maximizers.

pub mod error;
pub mod extremal;
pub mod graph;
pub mod par;
pub mod rewire;
pub mod spectral;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{construct, FamilySpec, Graph, GraphBuilder, VertexSet};
