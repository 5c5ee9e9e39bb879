//! Named graphs and small generators used by the CLI `gen` command and the tests.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The cycle `0-1-…-(k-1)-0`. Simple graphs have no cycles shorter than 3.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::PreconditionViolated(format!("a cycle needs at least 3 vertices, got {k}")));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// The path `0-1-…-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edges")
}

/// The Grötzsch graph, built as the Mycielskian of C5.
pub fn grotzsch() -> Graph {
    cycle(5).and_then(|c| c.mycielskian()).expect("11 vertices")
}

/// The Chvátal graph: 12 vertices, 4-regular, triangle-free, girth 4, chromatic number 4.
pub fn chvatal() -> Graph {
    const EDGES: [(usize, usize); 24] = [
        (0, 1), (0, 4), (0, 6), (0, 9), (1, 2), (1, 5), (1, 7), (2, 3),
        (2, 6), (2, 8), (3, 4), (3, 7), (3, 9), (4, 5), (4, 8), (5, 10),
        (5, 11), (6, 10), (6, 11), (7, 8), (7, 11), (8, 10), (9, 10), (9, 11),
    ];
    Graph::from_edges(12, EDGES).expect("valid edges")
}

/// `M^depth(K2)`: depth 1 is C5, depth 2 the Grötzsch graph.
pub fn mycielski_tower(depth: usize) -> Result<Graph> {
    (0..depth).try_fold(complete(2)?, |g, _| g.mycielskian())
}

/// Looks up a graph by name for the CLI.
pub fn named(name: &str) -> Option<Graph> {
    match name {
        "petersen" => Some(petersen()),
        "grotzsch" | "groetzsch" => Some(grotzsch()),
        "chvatal" => Some(chvatal()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(chvatal().edge_count(), 24);
        assert!((0..12).all(|v| chvatal().degree(v) == 4));
        let g = grotzsch();
        assert_eq!((g.n(), g.edge_count()), (11, 20));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn tower_sizes() {
        let sizes: Vec<_> = (0..=7).map(|d| mycielski_tower(d).unwrap().n()).collect();
        assert_eq!(sizes, vec![2, 5, 11, 23, 47, 95, 191, 383]);
        assert!(mycielski_tower(8).is_err());
    }
}
