//! Strongly connected orientations of bridgeless graphs with small diameter.
//!
//! Given a bridgeless graph of minimum degree at least 3 and an accuracy
//! parameter `epsilon`, [`pipeline::orient`] builds a strongly connected
//! orientation whose diameter is at most `(3 + epsilon) n / (delta - 2) + C`,
//! where `C = 4 * C(L + 1, 2)` and `L = ceil(100 / epsilon)`.
//!
//! The work happens in two stages. [`orientation::run_core`] grows an oriented
//! core round by round from a geodesic out-path, a consistent return path and
//! short connectors between them, together with a witness set that pays for
//! the core's diameter. [`extension::extend`] then absorbs the remaining
//! vertices (all within distance `L` of the core) by ears.
//!
//! [`oracle`] holds the exhaustive oriented-diameter search used as ground
//! truth on small graphs, orientation validation and the per-round claim
//! audit. [`generators`] builds the sequential-join lower-bound family and
//! random test inputs.

pub mod bridges;
pub mod distance;
pub mod epsilon;
pub mod error;
pub mod extension;
pub mod generators;
pub mod graph;
pub mod io;
pub mod mixed;
pub mod oracle;
pub mod orientation;
pub mod pipeline;

pub use bridges::find_bridges;
pub use distance::{bfs_distance, directed_diameter, DistanceMap, Mode};
pub use epsilon::Epsilon;
pub use error::{Error, Result};
pub use graph::{Graph, Path};
pub use mixed::MixedGraph;
