//! Fair orientations of graphs whose edges are chores.
//!
//! Every vertex is an agent and every edge a chore that only its endpoints
//! care about; each endpoint values it at zero or below. An orientation
//! hands each edge to one endpoint. The crate decides in polynomial time
//! whether a simple graph has an EF1 or an EFX0 orientation, checks
//! arbitrary allocations exhaustively for small instances, and generates
//! the multigraph instances on which both questions become hard.

pub mod cli;
pub mod ef1;
pub mod efx;
pub mod error;
pub mod fixtures;
pub mod hardness;
pub mod instance;
pub mod oracle;
pub mod pd_cover;
pub mod twosat;

pub use ef1::{ef1_structural_condition, solve_ef1};
pub use efx::{solve as solve_efx0, structural_efx_condition};
pub use error::{Error, Result};
pub use instance::{ChoreInstance, Edge, EdgeClass, Orientation, VertexId};
pub use oracle::{
    check_ef1, check_efx0, check_orientation, enumerate_orientations, Allocation, Criterion,
};
