//! Local antimagic colorings of corona products of paths, cycles and complete
//! graphs with null graphs.
//!
//! Edge labels are bijections onto `1..=|E|`; a vertex's weight is the sum of
//! the labels at it, and a labeling is local antimagic when adjacent vertices
//! get different weights. The modules provide the graphs ([`graph`]), the
//! verifier ([`labeling`]), explicit labelings ([`constructions`]), an exact
//! search for small graphs ([`oracle`]) and the known bounds ([`bounds`]).

pub mod bounds;
pub mod constructions;
pub mod dot;
pub mod graph;
pub mod interchange;
pub mod labeling;
pub mod oracle;

pub use constructions::{construct, ConstructionCase, ConstructionResult};
pub use graph::{corona, CoronaGraph, CoronaSpec, Family, Graph, GraphError};
pub use labeling::{verify, weights, EdgeLabeling, VerificationReport, WeightVector};
