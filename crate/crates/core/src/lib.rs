//! Exact combinatorics of asymptotic triangulations of marked annuli `C(p,q)`
//! and tubes `C(p,0)`.
//!
//! Arcs are isotopy classes described by small integer data; crossing is
//! decided by exact rational comparisons in the universal cover. On top of
//! that sit flips, exchange graphs, quivers and Dehn-twist dynamics.

pub mod arc_model;
pub mod dynamics;
pub mod error;
pub mod exchange_graph;
pub mod quiver;
pub mod triangulation;

pub use arc_model::{Arc, BoundaryId, Lift, Sign, Surface};
pub use dynamics::{Classification, ConvergenceReport, SequenceWindow};
pub use error::{Error, Result};
pub use exchange_graph::{ExchangeGraph, GraphMode, GraphStats};
pub use quiver::BMatrix;
pub use triangulation::{BoundaryDecomposition, Triangulation};
