//! Shared inputs for the benchmarks.

use corona_core::{CoronaKind, CoronaSpec, Graph};

/// Petersen graph, 3-regular on 10 vertices.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("valid")
}

/// Coronae of a regular base whose order grows with `copies_of`.
pub fn spec(g1: Graph, copies_of: usize, kind: CoronaKind) -> CoronaSpec {
    CoronaSpec::new(g1, Graph::path(copies_of).expect("valid"), kind).expect("valid")
}
